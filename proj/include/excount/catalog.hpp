// The full list of indecomposable representations of a quiver, with exact
// Hom and Ext tables.  A-type components contribute their interval modules;
// a D4 component is filled in by breadth-first closure of reflection
// functors over the eight star orientations, seeded with the simples and
// transported until the home orientation holds all 12 classes.
#pragma once

#include <vector>

#include "excount/rep.hpp"

namespace excount {

struct IndecCatalog {
    Quiver quiver;
    std::vector<Representation> members;   // sorted lexicographically by dim
    std::vector<std::vector<int>> hom;     // hom[i][j] = dim Hom(M_i, M_j)
    std::vector<std::vector<int>> ext;

    int size() const { return int(members.size()); }
    int find(const DimVector& d) const;    // -1 if absent
};

IndecCatalog indecomposables(const Quiver& q);

}  // namespace excount
