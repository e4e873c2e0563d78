#include <doctest.h>

#include "excount/linalg.hpp"

using namespace excount;

namespace {

IntMatrix from_rows(std::vector<std::vector<i64>> rows) {
    IntMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("matrix product") {
    IntMatrix a = from_rows({{1, 2}, {3, 4}});
    IntMatrix b = from_rows({{0, 1}, {1, 1}});
    CHECK(mat_mul(a, b) == from_rows({{2, 3}, {4, 7}}));
    CHECK(mat_mul(IntMatrix::identity(2), a) == a);
    CHECK(mat_mul(a, IntMatrix::identity(2)) == a);
}

TEST_CASE("rank on hand-sized matrices") {
    CHECK(rank(IntMatrix::identity(3)) == 3);
    CHECK(rank(IntMatrix(2, 5)) == 0);
    CHECK(rank(from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
    CHECK(rank(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 2);
    CHECK(rank(from_rows({{2, 0}, {0, 3}, {1, 1}})) == 2);
    // would overflow naive fraction accumulation but not Bareiss
    CHECK(rank(from_rows({{1000000, 999999}, {999999, 999998}})) == 2);
}

TEST_CASE("right kernel") {
    auto k = kernel_basis(from_rows({{1, 2, 3}, {2, 4, 6}}));
    REQUIRE(k.size() == 2);
    IntMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}});
    for (const auto& v : k)
        for (int r = 0; r < m.rows; ++r) {
            i64 s = 0;
            for (int c = 0; c < m.cols; ++c) s += m.at(r, c) * v[c];
            CHECK(s == 0);
        }
    CHECK(kernel_basis(IntMatrix::identity(3)).empty());
    // kernel of (1 1) is spanned by a primitive vector
    auto k2 = kernel_basis(from_rows({{2, 2}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0][0] + k2[0][1] == 0);
    CHECK((k2[0][0] == 1 || k2[0][0] == -1));
}

TEST_CASE("left kernel") {
    IntMatrix m = from_rows({{1, 2}, {2, 4}, {0, 0}});
    auto k = left_kernel_basis(m);
    REQUIRE(k.size() == 2);
    for (const auto& v : k)
        for (int c = 0; c < m.cols; ++c) {
            i64 s = 0;
            for (int r = 0; r < m.rows; ++r) s += v[r] * m.at(r, c);
            CHECK(s == 0);
        }
    CHECK(left_kernel_basis(IntMatrix::identity(2)).empty());
}

TEST_CASE("kernel dimensions match rank deficiency") {
    IntMatrix m = from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}});
    CHECK(rank(m) == 2);
    CHECK(kernel_basis(m).size() == 2);
    CHECK(left_kernel_basis(m).size() == 1);
}
