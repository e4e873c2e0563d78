#include <doctest.h>

#include <stdexcept>

#include "excount/quiver.hpp"

using namespace excount;

TEST_CASE("parse A-type specs") {
    Quiver q = parse_quiver("A3:><");
    CHECK(q.n == 3);
    REQUIRE(q.arrows.size() == 2);
    CHECK(q.arrows[0] == Arrow{1, 2});
    CHECK(q.arrows[1] == Arrow{3, 2});
    REQUIRE(q.components.size() == 1);
    CHECK(q.components[0].family == Family::A);
    CHECK(q.components[0].vertices == std::vector<int>{1, 2, 3});

    Quiver a1 = parse_quiver("A1:");
    CHECK(a1.n == 1);
    CHECK(a1.arrows.empty());
}

TEST_CASE("parse D4 specs") {
    Quiver q = parse_quiver("D4:><>");
    CHECK(q.n == 4);
    REQUIRE(q.arrows.size() == 3);
    // '>' points a leaf at the center (vertex 4), '<' the other way
    CHECK(q.arrows[0] == Arrow{1, 4});
    CHECK(q.arrows[1] == Arrow{4, 2});
    CHECK(q.arrows[2] == Arrow{3, 4});
    CHECK(q.components[0].family == Family::D4);
    CHECK(q.components[0].vertices == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("parse unions with vertex offsets") {
    Quiver q = parse_quiver("A2:>+D4:<<<+A1:");
    CHECK(q.n == 7);
    REQUIRE(q.components.size() == 3);
    CHECK(q.components[0].vertices == std::vector<int>{1, 2});
    CHECK(q.components[1].vertices == std::vector<int>{3, 4, 5, 6});
    CHECK(q.components[2].vertices == std::vector<int>{7});
    REQUIRE(q.arrows.size() == 4);
    CHECK(q.arrows[0] == Arrow{1, 2});
    CHECK(q.arrows[1] == Arrow{6, 3});  // center 6 points at leaf 3
}

TEST_CASE("parse rejects malformed specs") {
    CHECK_THROWS_AS(parse_quiver(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver("A3:>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver("A3:>>>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver("A3:>X"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver("D4:>>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver("D5:>>>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver("B3:>>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver("A0:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver("A2:>+"), std::invalid_argument);
}

TEST_CASE("make_quiver validates shape") {
    CHECK_NOTHROW(make_quiver(2, {{1, 2}}));
    // cycle
    CHECK_THROWS_AS(make_quiver(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
    // degree-3 vertex in a 5-vertex star is not A or D4
    CHECK_THROWS_AS(make_quiver(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}),
                    std::invalid_argument);
    // double arrow
    CHECK_THROWS_AS(make_quiver(2, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_quiver(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("opposite flips every arrow") {
    Quiver q = parse_quiver("A3:><");
    Quiver o = opposite(q);
    REQUIRE(o.arrows.size() == 2);
    CHECK(o.arrows[0] == Arrow{2, 1});
    CHECK(o.arrows[1] == Arrow{2, 3});
    CHECK(opposite(o) == q);
}

TEST_CASE("flip_at_vertex reverses exactly the incident arrows") {
    Quiver q = parse_quiver("A3:>>");
    Quiver f = flip_at_vertex(q, 2);
    CHECK(f.arrows[0] == Arrow{2, 1});
    CHECK(f.arrows[1] == Arrow{3, 2});
    CHECK(flip_at_vertex(flip_at_vertex(q, 2), 2) == q);
}

TEST_CASE("sink and source detection") {
    Quiver q = parse_quiver("A3:><");
    CHECK(is_sink(q, 2));
    CHECK(!is_sink(q, 1));
    CHECK(is_source(q, 1));
    CHECK(is_source(q, 3));
    CHECK(!is_source(q, 2));
}

TEST_CASE("delete_vertex renumbers survivors") {
    Quiver q = parse_quiver("A4:>>>");
    Quiver d = delete_vertex(q, 2);  // leaves 1 | 3-4, renumbered 1 | 2-3
    CHECK(d.n == 3);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].vertices == std::vector<int>{1});
    CHECK(d.components[1].vertices == std::vector<int>{2, 3});
    REQUIRE(d.arrows.size() == 1);
    CHECK(d.arrows[0] == Arrow{2, 3});

    Quiver d4 = parse_quiver("D4:>>>");
    Quiver leaves = delete_vertex(d4, 4);
    CHECK(leaves.n == 3);
    CHECK(leaves.components.size() == 3);
    CHECK(leaves.arrows.empty());
    Quiver path = delete_vertex(d4, 1);  // 2-4-3 becomes a 3-vertex path
    CHECK(path.components.size() == 1);
    CHECK(path.components[0].family == Family::A);
}

TEST_CASE("coxeter numbers") {
    CHECK(coxeter_number(parse_quiver("A1:")) == 2);
    CHECK(coxeter_number(parse_quiver("A5:<<<<")) == 6);
    CHECK(coxeter_number(parse_quiver("D4:>>>")) == 6);
}

TEST_CASE("euler form") {
    Quiver q = parse_quiver("A2:>");
    // <x,y> = sum x_i y_i - sum over arrows x_src y_tgt
    CHECK(euler_form(q, {1, 0}, {0, 1}) == -1);
    CHECK(euler_form(q, {0, 1}, {1, 0}) == 0);
    CHECK(euler_form(q, {1, 1}, {1, 1}) == 1);
    // bilinearity spot check
    CHECK(euler_form(q, {2, 3}, {1, 4}) ==
          2 * euler_form(q, {1, 0}, {1, 4}) + 3 * euler_form(q, {0, 1}, {1, 4}));
}
