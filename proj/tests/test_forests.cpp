#include <doctest.h>

#include <stdexcept>

#include "excount/forests.hpp"

using namespace excount;

TEST_CASE("forest counts") {
    CHECK(count_forests(1) == 1);
    CHECK(count_forests(2) == 3);
    CHECK(count_forests(3) == 16);
    CHECK(count_forests(4) == 125);
    CHECK(count_forests(5) == 1296);
    CHECK_THROWS_AS(count_forests(9), std::invalid_argument);
}

TEST_CASE("enumeration lists each forest once") {
    // n = 2 by hand: both roots, 1 -> 2, 2 -> 1; the 2-cycle is excluded.
    // The odometer steps the first slot fastest.
    std::vector<Forest> seen;
    for_each_forest(2, [&](const Forest& f) { seen.push_back(f); });
    CHECK(seen == std::vector<Forest>{{0, 0}, {2, 0}, {0, 1}});
}

TEST_CASE("vertex classes") {
    Forest fig = {3, 0, 0, 3};
    CHECK(classify_vertex(fig, 1) == VertexClass::Descending);
    CHECK(classify_vertex(fig, 2) == VertexClass::Root);
    CHECK(classify_vertex(fig, 3) == VertexClass::Root);
    CHECK(classify_vertex(fig, 4) == VertexClass::Ascending);
}

TEST_CASE("ascending-vertex generating polynomial") {
    CHECK(ascending_gf(3).str() == "2*z^2 + 8*z + 6");
    CHECK(ascending_gf(3) == ascending_gf_formula(3).collapsed());
    CHECK(ascending_gf(4).str() == "6*z^3 + 37*z^2 + 58*z + 24");
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(ascending_gf(n) == ascending_gf_formula(n).collapsed());
        CHECK(ascending_gf(n).evaluate_all(Rational(1)) ==
              Rational(count_forests(n)));
    }
}

TEST_CASE("descending events: marginals and independence") {
    ForestIndependence r = descending_independence_report(4);
    CHECK(r.total == 125);
    CHECK(r.marginals ==
          std::vector<Rational>{{3, 5}, {2, 5}, {1, 5}, {0, 1}});
    CHECK(r.failures.empty());
    CHECK(r.ok);
    for (int n = 1; n <= 6; ++n) CHECK(descending_independence_report(n).ok);
    CHECK_THROWS_AS(descending_independence_report(8), std::invalid_argument);
}

TEST_CASE("joint distributions match linear-orientation sequences") {
    for (int n = 1; n <= 4; ++n) {
        DistributionMatch m = match_excseq_distribution(n);
        CAPTURE(n);
        CHECK(m.proj_match);
        CHECK(m.inj_match);
        CHECK(m.forest_proj == m.seq_proj);
        CHECK(m.forest_inj == m.seq_inj);
    }
    CHECK_THROWS_AS(match_excseq_distribution(7), std::invalid_argument);
}

TEST_CASE("the root-or-descending mask distribution at n = 2") {
    // forests {0,0}, {0,1}, {2,0}: vertex classes (root,root),
    // (root, ascending), (descending, root); root-or-descending masks
    // 11, 01, 11; root-or-ascending masks 11, 11, 10
    DistributionMatch m = match_excseq_distribution(2);
    std::map<std::uint32_t, i64> proj = {{0b01, 1}, {0b11, 2}};
    std::map<std::uint32_t, i64> inj = {{0b10, 1}, {0b11, 2}};
    CHECK(m.forest_proj == proj);
    CHECK(m.forest_inj == inj);
}
