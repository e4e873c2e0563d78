#include "excount/genfun.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace excount {

namespace {

int code_size(int code) { return code == D4_CODE ? 4 : code; }

int coxeter_of(int code) { return code == D4_CODE ? 6 : code + 1; }

// deletion of one vertex from a connected diagram, as a component multiset
std::vector<std::vector<int>> deletions(int code) {
    std::vector<std::vector<int>> out;
    if (code == D4_CODE) {
        // removing a leaf leaves the 3-vertex path; removing the center
        // leaves three isolated vertices
        out.push_back({3});
        out.push_back({3});
        out.push_back({3});
        out.push_back({1, 1, 1});
        return out;
    }
    for (int i = 1; i <= code; ++i) {
        std::vector<int> parts;
        if (i - 1 > 0) parts.push_back(i - 1);
        if (code - i > 0) parts.push_back(code - i);
        out.push_back(std::move(parts));
    }
    return out;
}

std::map<std::vector<int>, MultiPoly>& memo() {
    static std::map<std::vector<int>, MultiPoly> table;
    return table;
}

std::mutex memo_mutex;

MultiPoly compute(const std::vector<int>& key);

MultiPoly lookup(std::vector<int> key) {
    std::sort(key.begin(), key.end());
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo().find(key);
        if (it != memo().end()) return it->second;
    }
    MultiPoly f = compute(key);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo().emplace(key, std::move(f)).first->second;
}

MultiPoly connected_gf(int code) {
    int n = code_size(code);
    int h = coxeter_of(code);
    MultiPoly sum = MultiPoly::constant(0, n - 1);
    for (const auto& parts : deletions(code)) sum = sum + lookup(parts);

    // factor (2 z_n + h - 2), then halve exactly
    MultiPoly wide = sum.with_variables(n, [n] {
        std::vector<int> s(n - 1);
        for (int i = 0; i < n - 1; ++i) s[i] = i + 1;
        return s;
    }());
    MultiPoly factor = MultiPoly::variable(n, n).scaled(2) + MultiPoly::constant(h - 2, n);
    return (factor * wide).divided_exact(2);
}

MultiPoly compute(const std::vector<int>& key) {
    if (key.empty()) return MultiPoly::constant(1, 0);
    if (key.size() == 1) return connected_gf(key.front());
    // split off one component and shuffle
    std::vector<int> rest(key.begin() + 1, key.end());
    return shuffle_product(lookup({key.front()}), lookup(rest));
}

}  // namespace

MultiPoly recursive_gf(const std::vector<int>& codes) {
    for (int c : codes)
        if (c != D4_CODE && c < 1) throw std::invalid_argument("bad component code");
    return lookup(codes);
}

MultiPoly recursive_gf(const Quiver& q) {
    std::vector<int> codes;
    codes.reserve(q.components.size());
    for (const auto& comp : q.components)
        codes.push_back(comp.family == Family::D4 ? D4_CODE
                                                  : static_cast<int>(comp.vertices.size()));
    return recursive_gf(codes);
}

MultiPoly closed_form_a(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    MultiPoly f = MultiPoly::variable(1, n);
    for (int i = 1; i <= n - 1; ++i)
        f = f * (MultiPoly::variable(i + 1, n).scaled(n + 1 - i) +
                 MultiPoly::constant(i, n));
    return f;
}

MultiPoly closed_form_b(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    MultiPoly f = MultiPoly::constant(1, n);
    for (int i = 1; i <= n; ++i)
        f = f * (MultiPoly::variable(i, n).scaled(n + 1 - i) +
                 MultiPoly::constant(i - 1, n));
    return f;
}

MultiPoly one_var_gf_a(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    MultiPoly f = MultiPoly::constant(binomial(n + 1, k + 1), 1);
    for (int j = 1; j <= k; ++j)
        f = f * (MultiPoly::variable(1, 1).scaled(j + 1) + MultiPoly::constant(n - j, 1));
    return f.divided_exact(n + 1);
}

}  // namespace excount
