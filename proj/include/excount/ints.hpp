// Small exact-arithmetic helpers shared across the library.  Everything here
// is 64-bit with __int128 intermediates; the catalogs and enumerations we
// handle stay far below those limits, and the few places that can genuinely
// outgrow int64 (products of sequence counts in independence checks) go
// through wide128 explicitly.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace excount {

using i64 = long long;
using i128 = __int128;

inline i64 checked_mul(i64 a, i64 b) {
    i128 p = i128(a) * b;
    if (p > i128(INT64_MAX) || p < i128(INT64_MIN))
        throw std::overflow_error("64-bit overflow in exact product");
    return i64(p);
}

inline i64 ipow(i64 base, int exp) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline i64 factorial(int n) {
    i64 r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

inline i64 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i64 r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) { s.push_back(char('0' + int(u % 10))); u /= 10; }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

// Exact rational with canonical form: reduced, positive denominator.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.den) + checked_mul(b.num, a.den),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.den) - checked_mul(b.num, a.den),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "p" or "p/q"; used by the CLI's --eval.
    static Rational parse(const std::string& s);
};

}  // namespace excount
