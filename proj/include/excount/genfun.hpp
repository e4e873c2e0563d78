// Generating functions for relative-projectivity statistics, computed three
// ways: the vertex-deletion recursion, printed closed forms, and (elsewhere)
// direct enumeration.  The recursion for a connected n-vertex diagram is
//     f = (2 z_n + h - 2)/2 * sum over vertices v of f(diagram minus v)
// with h the Coxeter number.  Vertex deletion disconnects the diagram, and
// statistics over a disjoint union interleave component sequences, so the
// disconnected case is the shuffle product of the component polynomials.
// Everything is orientation-independent, which lets the recursion work on
// bare diagrams: a component is "A_m" or "D4" with no arrow data.
#pragma once

#include <map>
#include <vector>

#include "excount/poly.hpp"
#include "excount/quiver.hpp"

namespace excount {

// Diagram code per connected component: m >= 1 for A_m, D4_CODE for D_4.
inline constexpr int D4_CODE = -4;

// f for the disjoint union described by `codes` (any order; the result
// depends only on the multiset).  Results are memoized across calls.
MultiPoly recursive_gf(const std::vector<int>& codes);
MultiPoly recursive_gf(const Quiver& q);

// z_1 * prod_{i=1..n-1} (i + (n+1-i) z_{i+1})
MultiPoly closed_form_a(int n);

// prod_{i=1..n} (i-1 + (n+1-i) z_i); emitted as printed, no enumeration
// backs it here.
MultiPoly closed_form_b(int n);

// One-variable gf for length-k sequences of A_n:
// (1/(n+1)) C(n+1,k+1) prod_{j=1..k} ((j+1) z + n - j).
// The division is exact; a remainder throws.
MultiPoly one_var_gf_a(int n, int k);

}  // namespace excount
