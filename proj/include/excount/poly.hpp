// Sparse multivariate polynomials with exact integer coefficients.  Exponent
// vectors are the map keys, so iteration order (and therefore printing and
// serialization) is deterministic.  Indicator-statistic generating functions
// keep every exponent in {0,1}; collapsing to one variable introduces higher
// powers, which the same representation handles.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "excount/ints.hpp"

namespace excount {

struct MultiPoly {
    int nvars = 0;
    // exponent vector (size nvars) -> nonzero coefficient
    std::map<std::vector<int>, i64> terms;

    static MultiPoly constant(i64 c, int nvars = 0);
    // z_j in 1-based numbering, as an nvars-variable polynomial
    static MultiPoly variable(int j, int nvars);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    void add_term(const std::vector<int>& expo, i64 coeff);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scaled(i64 c) const;
    // Every coefficient must be divisible by d; throws logic_error otherwise.
    MultiPoly divided_exact(i64 d) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    Rational evaluate_all(const Rational& z) const;

    // Maps every z_i to a single z, grouping coefficients by total degree.
    MultiPoly collapsed() const;

    // Same polynomial viewed in a wider variable ring; old variable i becomes
    // new variable slots[i-1] (ascending, 1-based).
    MultiPoly with_variables(int new_nvars, const std::vector<int>& slots) const;

    // Canonical text: graded lexicographic, highest first; "z" when nvars is
    // one, otherwise z1..zn; e.g. "6*z1*z2 + 2*z1 + 1".
    std::string str() const;
};

// Interleaving product for statistics over disjoint unions: distributes the
// combined variable set over the two factors in every order-preserving way.
MultiPoly shuffle_product(const MultiPoly& a, const MultiPoly& b);

struct LinearFactor {
    int var = 0;  // 1-based variable index
    i64 c = 0;    // factor is c*z_var + d, with gcd(c,d) = 1, c > 0
    i64 d = 0;
};

struct FactorResult {
    std::vector<LinearFactor> factors;
    MultiPoly residual;
    bool fully_split = false;  // residual is constant
};

// Repeatedly peels off per-variable linear factors c*z_j + d wherever the
// z_j-free and z_j-linear parts of the residual are integer-proportional.
// Requires all exponents in {0,1}.
FactorResult linear_factor_check(const MultiPoly& f);

}  // namespace excount
