#include "excount/cyclecomb.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace excount {

namespace {

void validate(int h, const std::vector<int>& lambda) {
    if (lambda.empty()) throw std::invalid_argument("empty partition");
    int sum = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("negative part");
        if (i > 0 && lambda[i] < lambda[i - 1])
            throw std::invalid_argument("parts must ascend");
        sum += lambda[i];
    }
    if (sum + static_cast<int>(lambda.size()) != h)
        throw std::invalid_argument("partition does not fit the " + std::to_string(h) +
                                    "-cycle");
}

i64 multiplicity_factorials(const std::vector<int>& lambda) {
    i64 prod = 1;
    int run = 1;
    for (size_t i = 1; i <= lambda.size(); ++i) {
        if (i < lambda.size() && lambda[i] == lambda[i - 1]) {
            ++run;
        } else {
            prod = checked_mul(prod, factorial(run));
            run = 1;
        }
    }
    return prod;
}

}  // namespace

std::vector<std::vector<int>> nonneg_partitions(int total, int parts) {
    if (total < 0 || parts < 1) throw std::invalid_argument("bad partition shape");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
    auto rec = [&](auto&& self, int idx, int minimum, int left) -> void {
        if (idx == parts) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (idx == parts - 1) {
            if (left >= minimum) {
                cur[idx] = left;
                out.push_back(cur);
            }
            return;
        }
        for (int v = minimum; v * (parts - idx) <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, v, left - v);
        }
    };
    rec(rec, 0, 0, total);
    return out;
}

i64 s_count_formula(int h, const std::vector<int>& lambda) {
    validate(h, lambda);
    int k = static_cast<int>(lambda.size()) - 1;
    i64 numer = checked_mul(factorial(k), h);
    i64 denom = multiplicity_factorials(lambda);
    if (numer % denom != 0) throw std::logic_error("non-integer arc count");
    return numer / denom;
}

i64 s_count_bruteforce(int h, const std::vector<int>& lambda) {
    validate(h, lambda);
    if (h > 14) throw std::invalid_argument("cycle brute force guarded to h <= 14");
    int k1 = static_cast<int>(lambda.size());  // edges to delete

    i64 matches = 0;
    std::vector<int> pick(k1);
    for (int i = 0; i < k1; ++i) pick[i] = i;
    std::vector<int> arcs(k1);
    while (true) {
        // arcs between consecutive deleted edges, cyclically
        for (int i = 0; i + 1 < k1; ++i) arcs[i] = pick[i + 1] - pick[i] - 1;
        arcs[k1 - 1] = pick[0] + h - pick[k1 - 1] - 1;
        std::sort(arcs.begin(), arcs.end());
        if (arcs == lambda) ++matches;

        int j = k1 - 1;
        while (j >= 0 && pick[j] == h - (k1 - j)) --j;
        if (j < 0) break;
        ++pick[j];
        for (int t = j + 1; t < k1; ++t) pick[t] = pick[t - 1] + 1;
    }
    return matches;
}

FusionCheck fusion_check(int h, const std::vector<int>& lambda) {
    validate(h, lambda);
    FusionCheck fc;
    int k = static_cast<int>(lambda.size()) - 1;
    if (k == 0) return fc;  // nothing to fuse
    fc.applicable = true;
    fc.lhs = checked_mul(k + 1, s_count_formula(h, lambda));

    std::map<int, int> mult;
    for (int p : lambda) ++mult[p];

    for (auto ia = mult.begin(); ia != mult.end(); ++ia)
        for (auto ib = ia; ib != mult.end(); ++ib) {
            int a = ia->first, b = ib->first;
            if (a == b && ia->second < 2) continue;
            int c = a + b + 1;
            std::vector<int> fused;
            fused.reserve(k);
            bool skip_a = true, skip_b = true;
            for (int p : lambda) {
                if (skip_a && p == a) {
                    skip_a = false;
                    continue;
                }
                if (skip_b && p == b) {
                    skip_b = false;
                    continue;
                }
                fused.push_back(p);
            }
            fused.push_back(c);
            std::sort(fused.begin(), fused.end());

            FusionCheck::Item item;
            item.a = a;
            item.b = b;
            item.fused = fused;
            item.s_count = s_count_formula(h, fused);
            item.multiplicity_c =
                static_cast<int>(std::count(fused.begin(), fused.end(), c));
            int two_x = a == b ? 1 : 2;
            item.summand = checked_mul(item.s_count, item.multiplicity_c) * two_x;
            fc.rhs_total += item.summand;
            fc.items.push_back(std::move(item));
        }
    fc.ok = fc.lhs == fc.rhs_total;
    return fc;
}

i64 pair_sum_identity(const std::vector<int>& lambda) {
    i64 total = 0;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (size_t j = i + 1; j < lambda.size(); ++j)
            total += lambda[i] + lambda[j] + 2;
    return total;
}

i64 redundancy_factor(int a, int b, int n_a, int n_b) {
    if (a == b) return i64(n_a) * (n_a - 1) / 2;
    return i64(n_a) * n_b;
}

}  // namespace excount
