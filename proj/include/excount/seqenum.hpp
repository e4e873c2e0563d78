// Exhaustive enumeration of exceptional sequences over an indecomposable
// catalog, with exact aggregation.  Sequences are stored left-to-right
// (E_1,...,E_len): Hom and Ext vanish from every later term to every earlier
// one.  The search builds them right to left, so each new term is drawn from
// the right perp of the terms already placed, and its relative projectivity
// is read off against exactly that perp.  Relative injectivity takes a second
// left-to-right pass over left perps once a sequence is complete.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "excount/catalog.hpp"
#include "excount/perp.hpp"
#include "excount/poly.hpp"

namespace excount {

struct SequenceRecord {
    std::vector<int> terms;            // catalog ids, left-to-right
    std::vector<std::uint8_t> relproj; // flag per left position (0-based)
    std::vector<std::uint8_t> relinj;
    std::vector<int> perp_type;        // block ranks of the full right perp
    std::vector<int> perp_members;     // the right perp itself, ascending ids
};

// Visits every length-len exceptional sequence exactly once, in catalog order
// at each level.  A nonnegative `rightmost` restricts to sequences whose last
// term is that catalog id (the unit of work parallel tallying distributes).
void for_each_sequence(const IndecCatalog& cat, int len,
                       const std::function<void(const SequenceRecord&)>& visit,
                       int rightmost = -1);

// Indicator masks use bit i-1 for left position i.
struct SeqTally {
    int len = 0;
    i64 total = 0;
    // perp type -> (sequence count N, sub-count N^p with leftmost term
    // relatively projective)
    std::map<std::vector<int>, std::pair<i64, i64>> by_lambda;
    std::vector<i64> relproj_marginal;  // count per left position
    std::vector<i64> relinj_marginal;
    std::map<std::uint32_t, i64> relproj_joint;  // indicator mask -> count
    std::map<std::uint32_t, i64> relinj_joint;
    i64 signed_sum = 0;  // sum of 2^(#relproj) over sequences

    void absorb(const SequenceRecord& rec);
    void merge(const SeqTally& other);
};

// Single pass over all sequences; jobs > 1 partitions by rightmost term and
// merges, with results identical to the single-threaded run.
SeqTally tally_sequences(const IndecCatalog& cat, int len, int jobs = 1);

i64 count_sequences(const IndecCatalog& cat, int len, int jobs = 1);

// C(n+1, len+1) * (n+1)^(len-1), with the empty sequence counting once.
i64 count_formula_a(int n, int len);

// Closed forms for the per-type tallies over A_n, h = n+1:
// N = k! h^k / prod(multiplicity!), N^p = (k+1)! h^(k-1) / prod(multiplicity!).
i64 n_lambda_formula(int h, const std::vector<int>& lambda);
i64 np_lambda_formula(int h, const std::vector<int>& lambda);

// Generating polynomial in z_1..z_len: coefficient of z^alpha counts the
// sequences whose relative-projectivity indicator vector equals alpha.
MultiPoly multivariate_gf(const SeqTally& tally);

// Probability that the term at right position rpos (1 = rightmost) is
// relatively projective; (rpos+1)/(n+1) in type A.
Rational relproj_probability(const SeqTally& tally, int rpos);

struct SubsetFailure {
    std::uint32_t mask = 0;        // bit k-1 <-> event at index k
    std::string lhs;               // total^(|S|-1) * count(intersection)
    std::string rhs;               // product of member counts
};

// Exact mutual-independence test over every nonempty subset of indicator
// positions: total^(|S|-1) * count(all hold) must equal the product of the
// individual counts.  Returns the subsets where it fails.
std::vector<SubsetFailure> subset_independence_failures(
    const std::map<std::uint32_t, i64>& joint, const std::vector<i64>& marginal,
    i64 total, int len);

struct IndependenceReport {
    int len = 0;
    i64 total = 0;
    std::vector<Rational> marginals;     // relproj: by rpos; relinj: by left pos
    std::vector<SubsetFailure> failures;
    bool ok = false;
};

// Relative projectivity, indexed by right position.
IndependenceReport independence_report(const SeqTally& tally);
// Relative injectivity, indexed by left position.
IndependenceReport injectivity_report(const SeqTally& tally);

// Number of signed sequences: each relatively projective term carries an
// independent sign, so the count is the gf evaluated at 2 everywhere.
i64 signed_count(const SeqTally& tally);

// (1/(n+1)) C(n+1,k+1) (n+k+2)!/(n+2)! for type A_n.
i64 signed_formula_a(int n, int k);

}  // namespace excount
