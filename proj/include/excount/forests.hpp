// Rooted labeled forests on vertices 1..n, encoded as parent maps with 0 for
// roots.  A non-root vertex is descending when its label is smaller than its
// parent's and ascending when larger; roots are their own class.  There are
// (n+1)^(n-1) such forests, matching the count of complete exceptional
// sequences, and the class statistics match the sequence statistics of
// linearly oriented A_n, which this module checks at the level of whole
// joint distributions.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "excount/ints.hpp"
#include "excount/poly.hpp"
#include "excount/seqenum.hpp"

namespace excount {

// parent[v-1] is the parent label of v, or 0 when v is a root
using Forest = std::vector<int>;

enum class VertexClass { Root, Ascending, Descending };

// Every parent assignment without cycles, in odometer order; n <= 8.
void for_each_forest(int n, const std::function<void(const Forest&)>& visit);

i64 count_forests(int n);

VertexClass classify_vertex(const Forest& f, int v);

// Coefficient c_p = number of forests with exactly p ascending vertices.
MultiPoly ascending_gf(int n);

// prod_{k=1..n-1} (k+1 + (n-k) a), the closed form the coefficients must hit.
MultiPoly ascending_gf_formula(int n);

// Descending-vertex marginals and all-subset independence; mask bit k-1 is
// the event "vertex k is descending".  n <= 7.
struct ForestIndependence {
    int n = 0;
    i64 total = 0;
    std::vector<Rational> marginals;  // by vertex label
    std::vector<SubsetFailure> failures;
    bool ok = false;
};
ForestIndependence descending_independence_report(int n);

// Joint-distribution comparison with complete sequences of linearly oriented
// A_n (arrows i+1 -> i): root-or-descending against relproj and
// root-or-ascending against relinj, both as mask -> count maps.  n <= 6.
struct DistributionMatch {
    bool proj_match = false;
    bool inj_match = false;
    std::map<std::uint32_t, i64> forest_proj, seq_proj;
    std::map<std::uint32_t, i64> forest_inj, seq_inj;
    bool ok() const { return proj_match && inj_match; }
};
DistributionMatch match_excseq_distribution(int n);

}  // namespace excount
