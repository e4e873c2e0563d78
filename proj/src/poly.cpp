#include "excount/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace excount {

MultiPoly MultiPoly::constant(i64 c, int nvars) {
    MultiPoly p;
    p.nvars = nvars;
    if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int j, int nvars) {
    if (j < 1 || j > nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p;
    p.nvars = nvars;
    std::vector<int> e(nvars, 0);
    e[j - 1] = 1;
    p.terms[e] = 1;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    const auto& e = terms.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void MultiPoly::add_term(const std::vector<int>& expo, i64 coeff) {
    if (static_cast<int>(expo.size()) != nvars)
        throw std::invalid_argument("exponent arity mismatch");
    if (coeff == 0) return;
    auto it = terms.find(expo);
    if (it == terms.end()) {
        terms[expo] = coeff;
    } else if ((it->second += coeff) == 0) {
        terms.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial arity mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial arity mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial arity mismatch");
    MultiPoly r;
    r.nvars = a.nvars;
    std::vector<int> e(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, checked_mul(ca, cb));
        }
    return r;
}

MultiPoly MultiPoly::scaled(i64 c) const {
    MultiPoly r;
    r.nvars = nvars;
    if (c == 0) return r;
    for (const auto& [e, v] : terms) r.terms[e] = checked_mul(v, c);
    return r;
}

MultiPoly MultiPoly::divided_exact(i64 d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    MultiPoly r;
    r.nvars = nvars;
    for (const auto& [e, v] : terms) {
        if (v % d != 0) throw std::logic_error("non-exact polynomial division");
        r.terms[e] = v / d;
    }
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars)
        throw std::invalid_argument("evaluation arity mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms) {
        Rational t(c);
        for (int i = 0; i < nvars; ++i)
            for (int p = 0; p < e[i]; ++p) t = t * point[i];
        total = total + t;
    }
    return total;
}

Rational MultiPoly::evaluate_all(const Rational& z) const {
    return evaluate(std::vector<Rational>(nvars, z));
}

MultiPoly MultiPoly::collapsed() const {
    MultiPoly r;
    r.nvars = 1;
    for (const auto& [e, c] : terms)
        r.add_term({std::accumulate(e.begin(), e.end(), 0)}, c);
    return r;
}

MultiPoly MultiPoly::with_variables(int new_nvars, const std::vector<int>& slots) const {
    if (static_cast<int>(slots.size()) != nvars)
        throw std::invalid_argument("slot list arity mismatch");
    for (int i = 0; i + 1 < nvars; ++i)
        if (slots[i] >= slots[i + 1]) throw std::invalid_argument("slots must ascend");
    if (nvars > 0 && (slots.front() < 1 || slots.back() > new_nvars))
        throw std::invalid_argument("slot out of range");
    MultiPoly r;
    r.nvars = new_nvars;
    std::vector<int> e(new_nvars);
    for (const auto& [old_e, c] : terms) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars; ++i) e[slots[i] - 1] = old_e[i];
        r.terms[e] = c;
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    // graded lexicographic, highest total degree first, then exponent vector
    std::vector<const std::pair<const std::vector<int>, i64>*> order;
    order.reserve(terms.size());
    for (const auto& t : terms) order.push_back(&t);
    auto degree = [](const std::vector<int>& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        int da = degree(a->first), db = degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::string out;
    for (const auto* t : order) {
        i64 c = t->second;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        i64 mag = c < 0 ? -c : c;
        std::string mono;
        for (int i = 0; i < nvars; ++i) {
            if (t->first[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += nvars == 1 ? "z" : "z" + std::to_string(i + 1);
            if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
        }
        if (mono.empty()) {
            out += std::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += std::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

MultiPoly shuffle_product(const MultiPoly& a, const MultiPoly& b) {
    const int m = a.nvars, total = a.nvars + b.nvars;
    MultiPoly r = MultiPoly::constant(0, total);
    // every m-subset of {1..total} receives a's variables, in order
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i + 1;
    auto emit = [&]() {
        std::vector<int> rest;
        rest.reserve(b.nvars);
        for (int v = 1, j = 0; v <= total; ++v) {
            if (j < m && pick[j] == v)
                ++j;
            else
                rest.push_back(v);
        }
        r = r + a.with_variables(total, pick) * b.with_variables(total, rest);
    };
    if (m == 0) {
        emit();
        return r;
    }
    while (true) {
        emit();
        int j = m - 1;
        while (j >= 0 && pick[j] == total - (m - 1 - j)) --j;
        if (j < 0) break;
        ++pick[j];
        for (int t = j + 1; t < m; ++t) pick[t] = pick[t - 1] + 1;
    }
    return r;
}

FactorResult linear_factor_check(const MultiPoly& f) {
    for (const auto& [e, c] : f.terms)
        for (int x : e)
            if (x > 1) throw std::invalid_argument("exponents must lie in {0,1}");

    FactorResult out;
    out.residual = f;
    for (int j = 1; j <= f.nvars; ++j) {
        // split residual = f1 * z_j + f0
        MultiPoly f0 = MultiPoly::constant(0, f.nvars);
        MultiPoly f1 = MultiPoly::constant(0, f.nvars);
        for (const auto& [e, c] : out.residual.terms) {
            if (e[j - 1] == 0) {
                f0.add_term(e, c);
            } else {
                auto e1 = e;
                e1[j - 1] = 0;
                f1.add_term(e1, c);
            }
        }
        if (f1.is_zero()) continue;  // variable absent
        i64 c, d;
        if (f0.is_zero()) {
            c = 1;
            d = 0;
        } else {
            // need coprime c, d with c*f0 == d*f1 termwise
            if (f0.terms.size() != f1.terms.size()) continue;
            i64 v1 = f1.terms.begin()->second;
            i64 v0 = f0.terms.begin()->second;
            i64 g = std::gcd(v1 < 0 ? -v1 : v1, v0 < 0 ? -v0 : v0);
            c = v1 / g;
            d = v0 / g;
            if (c < 0) { c = -c; d = -d; }
            bool proportional = true;
            auto it0 = f0.terms.begin();
            auto it1 = f1.terms.begin();
            for (; it0 != f0.terms.end(); ++it0, ++it1) {
                if (it0->first != it1->first ||
                    checked_mul(c, it0->second) != checked_mul(d, it1->second)) {
                    proportional = false;
                    break;
                }
            }
            if (!proportional) continue;
        }
        out.factors.push_back({j, c, d});
        // cofactor g satisfies f1 = c*g (or f0 = d*g); division is exact
        out.residual = f1.divided_exact(c);
    }
    out.fully_split = out.residual.is_constant();
    return out;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            i64 n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(n);
        }
        i64 n = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(s);
        i64 d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw std::invalid_argument(s);
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

}  // namespace excount
