// Integer-matrix representations of the quivers in quiver.hpp.  Hom spaces
// are computed exactly by solving the intertwiner equations
// phi_t M(a) = N(a) phi_s over all arrows; Ext dimensions follow from the
// Euler form (hom - ext = <dim M, dim N> for hereditary categories).
// Reflection at a sink replaces the vertex space by the kernel of the
// combined in-map; at a source by a cokernel of the combined out-map, with
// the quotient presented through a left kernel basis.
#pragma once

#include <vector>

#include "excount/linalg.hpp"
#include "excount/quiver.hpp"

namespace excount {

struct Representation {
    DimVector dim;                 // one entry per vertex
    std::vector<IntMatrix> mats;   // parallel to quiver arrows, dim[tgt] x dim[src]
    friend bool operator==(const Representation&, const Representation&) = default;
};

Representation zero_rep(const Quiver& q);
Representation simple_rep(const Quiver& q, int v);

// Dimension 1 on every vertex of the unique path between a and b (one
// A-type component, a <= b), identity on the arrows inside.
Representation interval_module(const Quiver& q, int a, int b);

i64 hom_dim(const Quiver& q, const Representation& m, const Representation& n);

// hom_dim - euler_form; throws if the difference is negative, which would
// mean the inputs are not representations of a common hereditary quiver.
i64 ext_dim(const Quiver& q, const Representation& m, const Representation& n);

struct Reflected {
    Quiver quiver;        // arrows at v reversed
    Representation rep;
};

// BGP reflection at a sink or source v.  Requires r indecomposable and not
// the simple at v; the result lives over flip_at_vertex(q, v).
Reflected reflect(const Quiver& q, int v, const Representation& r);

}  // namespace excount
