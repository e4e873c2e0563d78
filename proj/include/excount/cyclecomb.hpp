// Combinatorics of edge deletions in the cycle graph C_h.  Deleting k+1 of
// the h edges leaves k+1 arcs whose edge counts, sorted ascending, form a
// nonnegative partition lambda of h-(k+1).  The counting identities below
// drive the length-k sequence tallies; each closed form ships with a
// brute-force oracle.
#pragma once

#include <vector>

#include "excount/ints.hpp"

namespace excount {

// All ascending tuples of `parts` nonnegative integers summing to `total`,
// in lexicographic order.
std::vector<std::vector<int>> nonneg_partitions(int total, int parts);

// k! * h / prod(multiplicity!) for lambda with k+1 parts; requires
// sum(lambda) + #parts == h.
i64 s_count_formula(int h, const std::vector<int>& lambda);

// Counts (k+1)-subsets of the h cycle edges whose remaining arc lengths match
// lambda.  Guarded to h <= 14.
i64 s_count_bruteforce(int h, const std::vector<int>& lambda);

// The fusion identity: merging two parts a, b of lambda into a+b+1 relates
// (k+1)*|S_h(lambda)| to a sum over the fused partitions.
struct FusionCheck {
    bool applicable = false;  // false when lambda has a single part
    bool ok = false;
    i64 lhs = 0;
    struct Item {
        int a = 0, b = 0;
        std::vector<int> fused;
        i64 s_count = 0;
        int multiplicity_c = 0;  // multiplicity of a+b+1 in the fused partition
        i64 summand = 0;         // s_count * multiplicity_c * 2X(a,b)
    };
    std::vector<Item> items;
    i64 rhs_total = 0;
};
FusionCheck fusion_check(int h, const std::vector<int>& lambda);

// sum over i<j of (lambda_i + lambda_j + 2); equals k*h.
i64 pair_sum_identity(const std::vector<int>& lambda);

// Pair-selection redundancy: n_a*(n_a-1)/2 when a == b, else n_a*n_b.
i64 redundancy_factor(int a, int b, int n_a, int n_b);

}  // namespace excount
