// Quivers whose underlying diagrams are disjoint unions of A-type paths and
// 4-vertex stars (D4).  Specs look like "A3:<<", "D4:>><" or unions such as
// "A2:>+A3:<<"; vertices are numbered 1..n across the whole union.  For an
// A component the orientation character at slot i places an arrow between
// vertices i and i+1 of the component ('>' pointing right); for D4 the three
// slots connect leaves 1..3 to the center (local vertex 4), '>' pointing at
// the center.
#pragma once

#include <string>
#include <vector>

#include "excount/ints.hpp"

namespace excount {

using DimVector = std::vector<int>;

enum class Family { A, D4 };

struct Arrow {
    int src = 0;
    int tgt = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Component {
    Family family = Family::A;
    // A: vertices in path order starting from the smaller endpoint.
    // D4: the three leaves ascending, then the center.
    std::vector<int> vertices;
    friend bool operator==(const Component&, const Component&) = default;
};

struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;
    std::vector<Component> components;
    friend bool operator==(const Quiver&, const Quiver&) = default;
};

// Validates endpoints and Dynkin shape (paths and 4-vertex stars only) and
// derives the component list.  Arrows keep their given order.
Quiver make_quiver(int n, std::vector<Arrow> arrows);

Quiver parse_quiver(const std::string& spec);

// Removes vertex v and renumbers the survivors consecutively, preserving
// relative order.
Quiver delete_vertex(const Quiver& q, int v);

Quiver opposite(const Quiver& q);

// Reverses exactly the arrows incident to v.
Quiver flip_at_vertex(const Quiver& q, int v);

bool is_sink(const Quiver& q, int v);
bool is_source(const Quiver& q, int v);

// Connected quivers only: n+1 for A_n, 6 for D4.
int coxeter_number(const Quiver& q);

// <d,e> = sum_v d_v e_v - sum_{a:s->t} d_s e_t.
i64 euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

}  // namespace excount
