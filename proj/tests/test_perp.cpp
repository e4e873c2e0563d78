#include <doctest.h>

#include <stdexcept>

#include "excount/perp.hpp"

using namespace excount;

namespace {

std::vector<DimVector> member_dims(const IndecCatalog& cat, const PerpCategory& p) {
    std::vector<DimVector> out;
    for (int id : p.members) out.push_back(cat.members[id].dim);
    return out;
}

}  // namespace

TEST_CASE("right perp of one interval in linear A3") {
    IndecCatalog cat = indecomposables(parse_quiver("A3:>>"));

    // perp of M[1,2]: the simple S_2 and the long interval, mutually orthogonal
    PerpCategory p = right_perp(cat, {cat.find({1, 1, 0})});
    CHECK(member_dims(cat, p) ==
          std::vector<DimVector>{{0, 1, 0}, {1, 1, 1}});
    CHECK(p.blocks.size() == 2);
    CHECK(p.block_ranks == std::vector<int>{1, 1});
    CHECK(perp_type(p, 1) == std::vector<int>{1, 1});

    // perp of S_1: a connected A2 block of three members
    PerpCategory p2 = right_perp(cat, {cat.find({1, 0, 0})});
    CHECK(member_dims(cat, p2) ==
          std::vector<DimVector>{{0, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    CHECK(p2.blocks.size() == 1);
    CHECK(p2.block_ranks == std::vector<int>{2});
    CHECK(perp_type(p2, 1) == std::vector<int>{0, 2});
}

TEST_CASE("left perp vanishes into the generator") {
    IndecCatalog cat = indecomposables(parse_quiver("A2:>"));
    PerpCategory p = left_perp(cat, {cat.find({0, 1})});
    CHECK(member_dims(cat, p) == std::vector<DimVector>{{1, 1}});
    CHECK(perp_type(p, 1) == std::vector<int>{0, 1});
}

TEST_CASE("perp of the empty set is everything") {
    IndecCatalog cat = indecomposables(parse_quiver("A3:<<"));
    PerpCategory p = right_perp(cat, {});
    CHECK(int(p.members.size()) == cat.size());
    CHECK(p.block_ranks == std::vector<int>{3});
}

TEST_CASE("two generators cut the perp down to one block per gap") {
    IndecCatalog cat = indecomposables(parse_quiver("A3:>>"));
    // a complete sequence minus its leftmost term leaves a rank-1 perp
    PerpCategory p = right_perp(cat, {cat.find({1, 0, 0}), cat.find({1, 1, 0})});
    CHECK(int(p.members.size()) == 1);
    CHECK(perp_type(p, 2) == std::vector<int>{0, 0, 1});
}

TEST_CASE("relative projectivity and injectivity inside a perp") {
    IndecCatalog cat = indecomposables(parse_quiver("A3:>>"));
    PerpCategory p = right_perp(cat, {cat.find({1, 0, 0})});
    // members are S_3, M[1,2], M[1,3]; the only internal extension is
    // Ext(M[1,2], S_3), so M[1,2] fails projectivity and S_3 injectivity
    int s3 = cat.find({0, 0, 1}), m12 = cat.find({1, 1, 0}), m13 = cat.find({1, 1, 1});
    CHECK(is_rel_projective(cat, s3, p));
    CHECK(is_rel_projective(cat, m13, p));
    CHECK(!is_rel_projective(cat, m12, p));
    CHECK(is_rel_injective(cat, m12, p));
    CHECK(is_rel_injective(cat, m13, p));
    CHECK(!is_rel_injective(cat, s3, p));
}

TEST_CASE("D4 center-simple perp splits into three singleton blocks") {
    IndecCatalog cat = indecomposables(parse_quiver("D4:<<<"));
    // with the center a source, the perp of the center simple holds the
    // three leaf+center roots, pairwise orthogonal
    PerpCategory p = right_perp(cat, {cat.find({0, 0, 0, 1})});
    CHECK(member_dims(cat, p) ==
          std::vector<DimVector>{{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}});
    CHECK(p.blocks.size() == 3);
    CHECK(p.block_ranks == std::vector<int>{1, 1, 1});
    // three blocks exceed k+1 = 2 slots, so the type stays unpadded
    CHECK(perp_type(p, 1) == std::vector<int>{1, 1, 1});
}

TEST_CASE("non-triangular member sets are rejected") {
    IndecCatalog cat = indecomposables(parse_quiver("A2:>"));
    // S_1 and P_1 sit in one block (hom P_1 -> S_1) of two members,
    // which no A rank can carry
    CHECK_THROWS_AS(make_perp(cat, {cat.find({1, 0}), cat.find({1, 1})}),
                    std::logic_error);
}
