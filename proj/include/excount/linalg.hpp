// Exact integer linear algebra on small dense matrices.  Rank uses
// fraction-free (Bareiss) elimination so every intermediate entry is a minor
// of the input; kernel bases come out of the echelon form by exact rational
// back-substitution, cleared to primitive integer vectors.  Both are fully
// deterministic: pivots are chosen first-nonzero top-down, kernel vectors are
// ordered by free column and signed so the free coordinate is positive.
#pragma once

#include <vector>

#include "excount/ints.hpp"

namespace excount {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a;  // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    i64& at(int r, int c) { return a[size_t(r) * cols + c]; }
    i64 at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static IntMatrix identity(int n);
    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

int rank(const IntMatrix& m);

// Basis of { x : m x = 0 }, one primitive integer vector per free column.
std::vector<std::vector<i64>> kernel_basis(const IntMatrix& m);

// Basis of { y : y m = 0 } (rows annihilating m on the left).
std::vector<std::vector<i64>> left_kernel_basis(const IntMatrix& m);

}  // namespace excount
