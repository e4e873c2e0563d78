// Perpendicular categories inside an indecomposable catalog.  The right perp
// of a generator set G keeps the members Y with Hom(g,Y) = Ext(g,Y) = 0 for
// every g in G; the left perp demands vanishing in the other argument.
// Members split into blocks: connected components of the graph with an edge
// wherever Hom or Ext is nonzero in either direction.  A block of a type-A_m
// subcategory carries exactly m(m+1)/2 members, which is how block ranks are
// recovered (and checked) from member counts.
#pragma once

#include <vector>

#include "excount/catalog.hpp"

namespace excount {

struct PerpCategory {
    std::vector<int> members;              // ascending catalog ids
    std::vector<std::vector<int>> blocks;  // partition of members, by least id
    std::vector<int> block_ranks;          // parallel to blocks
};

// Builds the block structure for an arbitrary member set.  Block ranks are
// read off the member counts: m(m+1)/2 members means A_m, 12 means D_4.
// Any other count throws.
PerpCategory make_perp(const IndecCatalog& cat, std::vector<int> members);

PerpCategory right_perp(const IndecCatalog& cat, const std::vector<int>& generators);
PerpCategory left_perp(const IndecCatalog& cat, const std::vector<int>& generators);

// Sorted block ranks, zero-padded to k+1 parts when the perp arose from k
// generators and has at most k+1 blocks (always the case in a connected
// A-type ambient); more blocks than k+1 are returned unpadded.
std::vector<int> perp_type(const PerpCategory& p, int k);

// e must be a member; true when Ext(e, y) = 0 for every member y.
bool is_rel_projective(const IndecCatalog& cat, int e, const PerpCategory& p);
// Dual: Ext(y, e) = 0 for every member y.
bool is_rel_injective(const IndecCatalog& cat, int e, const PerpCategory& p);

}  // namespace excount
