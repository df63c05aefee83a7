#pragma once

// Arbitrary-precision number types and small number-theoretic utilities
// shared by the whole library.
//
// Exact arithmetic uses GMP rationals, floating point uses MPFR with a
// runtime-adjustable working precision.  All floating-point results in the
// library are computed at the precision set by set_precision_bits().

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace neron {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

namespace detail {
inline unsigned& precision_bits_storage() {
    static unsigned bits = 160;
    return bits;
}
}

// Sets the global working precision.  MPFR precision is configured in
// decimal digits; we round up and add guard digits.
inline void set_precision_bits(unsigned bits) {
    if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
    detail::precision_bits_storage() = bits;
    const unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30102999566398)) + 4;
    Real::default_precision(digits10);
}

inline unsigned precision_bits() { return detail::precision_bits_storage(); }

// 2^{-precision_bits()}, a convenient unit for rounding-error budgets.
inline Real eps_unit() {
    return ldexp(Real(1), -static_cast<int>(precision_bits()));
}

inline Real pi() {
    static Real cached;
    static unsigned cached_bits = 0;
    if (cached_bits != precision_bits()) {
        cached = 4 * atan(Real(1));
        cached_bits = precision_bits();
    }
    return cached;
}

inline Real two_pi() { return 2 * pi(); }

inline Real to_real(const Integer& n) { return Real(n); }

inline Real to_real(const Rational& q) { return Real(q); }

// Compensated (Kahan) accumulator; keeps lattice sums independent of
// summation order within the stated error budget.
class KahanSum {
public:
    void add(const Real& x) {
        Real y = x - comp_;
        Real t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    const Real& value() const { return sum_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
};

// ---------------------------------------------------------------------------
// p-adic valuations

// ord_p(n) for n != 0; p >= 2.
inline int ord_p(Integer n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("ord_p(0) is undefined");
    int v = 0;
    n = abs(n);
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline int ord_p(const Rational& q, const Integer& p) {
    if (q == 0) throw std::invalid_argument("ord_p(0) is undefined");
    return ord_p(numerator(q), p) - ord_p(denominator(q), p);
}

inline bool is_probable_prime(const Integer& n) {
    static std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32, rng);
}

namespace detail {

inline Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    std::uniform_int_distribution<std::uint64_t> dist(1, 1u << 30);
    while (true) {
        Integer y = dist(rng) % n, c = dist(rng) % n, m = 128;
        Integer g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer lim = min(m, r - k);
                for (Integer i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

inline void factor_into(Integer n, std::map<Integer, int>& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

}  // namespace detail

// Prime factorization of |n| (n != 0): trial division then Pollard-Brent.
inline std::map<Integer, int> factorize(Integer n) {
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    n = abs(n);
    std::map<Integer, int> out;
    for (Integer p : {Integer(2), Integer(3), Integer(5), Integer(7)}) {
        while (n % p == 0) { n /= p; out[p] += 1; }
    }
    Integer p = 11;
    while (p * p <= n && p < 100000) {
        while (n % p == 0) { n /= p; out[p] += 1; }
        p += 2;
    }
    if (n > 1) {
        std::mt19937_64 rng(0xc0ffee123456789ull);
        detail::factor_into(n, out, rng);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The second Bernoulli polynomial B2(t) = t^2 - t + 1/6 and its periodic
// extension; used both in exact (rational) and floating-point contexts.

template <typename T>
T bernoulli_b2(const T& t) {
    return t * t - t + T(1) / T(6);
}

inline Rational frac_part(const Rational& t) {
    Integer n = numerator(t), d = denominator(t);
    Integer f = n - (n / d) * d;  // truncated division
    if (f < 0) f += d;
    return Rational(f, d);
}

// Periodic B2(t - [t]).
inline Rational bernoulli_b2_periodic(const Rational& t) {
    return bernoulli_b2(frac_part(t));
}

inline Real frac_part(const Real& t) {
    Real f = t - floor(t);
    if (f >= 1) f -= 1;  // guard against rounding at the boundary
    return f;
}

inline Real bernoulli_b2_periodic(const Real& t) {
    return bernoulli_b2(frac_part(t));
}

}  // namespace neron
