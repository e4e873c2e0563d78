#include "excount/linalg.hpp"

#include <numeric>

namespace excount {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            i64 v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) += checked_mul(v, b.at(k, j));
        }
    return r;
}

namespace {

// Bareiss one-pass reduction to row echelon form.  Returns pivot columns;
// the matrix is modified in place.  divPrev is the previous pivot, by which
// every 2x2 cross-product is exactly divisible.
std::vector<int> bareiss_echelon(IntMatrix& m) {
    std::vector<int> pivot_cols;
    i64 prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        for (int r = row + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                i128 num = i128(m.at(row, col)) * m.at(r, c) -
                           i128(m.at(r, col)) * m.at(row, c);
                i128 q = num / prev;  // exact by the Bareiss identity
                if (q > i128(INT64_MAX) || q < i128(INT64_MIN))
                    throw std::overflow_error("bareiss: entry overflow");
                m.at(r, c) = i64(q);
            }
            m.at(r, col) = 0;
        }
        prev = m.at(row, col);
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int rank(const IntMatrix& m) {
    IntMatrix w = m;
    return int(bareiss_echelon(w).size());
}

std::vector<std::vector<i64>> kernel_basis(const IntMatrix& m) {
    IntMatrix w = m;
    std::vector<int> pivots = bareiss_echelon(w);
    int r = int(pivots.size());

    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<i64>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        // Solve the echelon system with x[free] = 1 over Q, bottom-up.
        std::vector<Rational> x(m.cols, Rational(0));
        x[free] = Rational(1);
        for (int i = r - 1; i >= 0; --i) {
            int pc = pivots[i];
            Rational s(0);
            for (int c = pc + 1; c < m.cols; ++c)
                if (x[c].num != 0 && w.at(i, c) != 0)
                    s = s + Rational(w.at(i, c)) * x[c];
            x[pc] = Rational(-s.num, checked_mul(s.den, w.at(i, pc)));
        }
        i64 lcm = 1;
        for (const Rational& v : x) lcm = checked_mul(lcm / std::gcd(lcm, v.den), v.den);
        std::vector<i64> vec(m.cols);
        i64 g = 0;
        for (int c = 0; c < m.cols; ++c) {
            vec[c] = checked_mul(x[c].num, lcm / x[c].den);
            g = std::gcd(g, vec[c] < 0 ? -vec[c] : vec[c]);
        }
        if (g > 1)
            for (i64& v : vec) v /= g;
        // lcm and g are positive, so vec[free] stays +1/g-scaled positive.
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::vector<std::vector<i64>> left_kernel_basis(const IntMatrix& m) {
    return kernel_basis(m.transposed());
}

}  // namespace excount
