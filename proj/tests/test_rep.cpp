#include <doctest.h>

#include <stdexcept>

#include "excount/rep.hpp"

using namespace excount;

TEST_CASE("simple and interval construction") {
    Quiver q = parse_quiver("A3:><");
    Representation s2 = simple_rep(q, 2);
    CHECK(s2.dim == DimVector{0, 1, 0});

    Representation m = interval_module(q, 1, 3);
    CHECK(m.dim == DimVector{1, 1, 1});
    REQUIRE(m.mats.size() == 2);
    // both arrows point into vertex 2 and carry identity maps
    CHECK(m.mats[0] == IntMatrix::identity(1));
    CHECK(m.mats[1] == IntMatrix::identity(1));

    CHECK_THROWS_AS(interval_module(q, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(interval_module(q, 1, 4), std::invalid_argument);
    Quiver uni = parse_quiver("A2:>+A2:>");
    CHECK_THROWS_AS(interval_module(uni, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(interval_module(parse_quiver("D4:>>>"), 1, 4),
                    std::invalid_argument);
}

TEST_CASE("hom and ext over A2") {
    Quiver q = parse_quiver("A2:>");
    Representation s1 = simple_rep(q, 1), s2 = simple_rep(q, 2);
    Representation p1 = interval_module(q, 1, 2);

    CHECK(hom_dim(q, s1, s1) == 1);
    CHECK(hom_dim(q, s1, s2) == 0);
    CHECK(hom_dim(q, s2, s1) == 0);
    CHECK(hom_dim(q, s2, p1) == 1);
    CHECK(hom_dim(q, p1, s2) == 0);
    CHECK(hom_dim(q, p1, s1) == 1);
    CHECK(hom_dim(q, s1, p1) == 0);
    CHECK(hom_dim(q, p1, p1) == 1);

    CHECK(ext_dim(q, s1, s2) == 1);  // the extension is p1 itself
    CHECK(ext_dim(q, s2, s1) == 0);
    CHECK(ext_dim(q, s1, s1) == 0);
    CHECK(ext_dim(q, p1, s1) == 0);
    CHECK(ext_dim(q, p1, s2) == 0);
    CHECK(ext_dim(q, s2, p1) == 0);
}

TEST_CASE("hom around a sink in A3") {
    Quiver q = parse_quiver("A3:><");
    Representation m = interval_module(q, 1, 3);
    Representation s1 = simple_rep(q, 1), s2 = simple_rep(q, 2), s3 = simple_rep(q, 3);

    CHECK(hom_dim(q, s1, m) == 0);
    CHECK(hom_dim(q, m, s1) == 1);
    CHECK(hom_dim(q, s2, m) == 1);
    CHECK(hom_dim(q, m, s2) == 0);
    CHECK(hom_dim(q, m, s3) == 1);

    CHECK(ext_dim(q, s1, s2) == 1);
    CHECK(ext_dim(q, s3, s2) == 1);
    CHECK(ext_dim(q, s2, s1) == 0);
    CHECK(ext_dim(q, s2, s3) == 0);
    CHECK(ext_dim(q, s1, s3) == 0);
    CHECK(ext_dim(q, m, m) == 0);
}

TEST_CASE("hom between overlapping intervals in A4") {
    Quiver q = parse_quiver("A4:><>");
    Representation a = interval_module(q, 1, 3);
    Representation b = interval_module(q, 2, 4);
    CHECK(hom_dim(q, a, b) == 0);
    CHECK(hom_dim(q, b, a) == 1);
    CHECK(ext_dim(q, b, a) == 0);
    CHECK(ext_dim(q, a, b) == 1);
}

TEST_CASE("reflection at a sink") {
    Quiver q = parse_quiver("A2:>");
    Representation s1 = simple_rep(q, 1);
    Reflected r = reflect(q, 2, s1);
    CHECK(r.quiver == parse_quiver("A2:<"));
    CHECK(r.rep.dim == DimVector{1, 1});

    Representation p1 = interval_module(q, 1, 2);
    CHECK(reflect(q, 2, p1).rep.dim == DimVector{1, 0});

    // the simple at the reflection vertex is annihilated, not transformed
    CHECK_THROWS_AS(reflect(q, 2, simple_rep(q, 2)), std::invalid_argument);
    // vertex 1 is a source here, not a sink; source reflection still works
    Reflected r2 = reflect(q, 1, simple_rep(q, 2));
    CHECK(r2.rep.dim == DimVector{1, 1});
    CHECK_THROWS_AS(reflect(q, 1, simple_rep(q, 1)), std::invalid_argument);
}

TEST_CASE("sink and source reflections invert each other") {
    Quiver q = parse_quiver("A3:>>");
    Representation m = interval_module(q, 2, 3);
    Reflected r = reflect(q, 3, m);
    CHECK(r.rep.dim == DimVector{0, 1, 0});
    Reflected back = reflect(r.quiver, 3, r.rep);
    CHECK(back.quiver == q);
    CHECK(back.rep.dim == m.dim);
}
