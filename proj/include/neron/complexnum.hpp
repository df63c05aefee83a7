#pragma once

// Minimal complex arithmetic over the MPFR-backed Real type.  std::complex
// is only specified for the builtin floating types, so we carry our own;
// only the operations the library actually uses are provided.

#include "neron/numeric.hpp"

namespace neron {

struct CNum {
    Real re = 0, im = 0;

    CNum() = default;
    CNum(Real r) : re(std::move(r)) {}
    CNum(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend CNum operator+(const CNum& a, const CNum& b) { return {a.re + b.re, a.im + b.im}; }
    friend CNum operator-(const CNum& a, const CNum& b) { return {a.re - b.re, a.im - b.im}; }
    friend CNum operator-(const CNum& a) { return {-a.re, -a.im}; }
    friend CNum operator*(const CNum& a, const CNum& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CNum operator*(const Real& s, const CNum& a) { return {s * a.re, s * a.im}; }
    friend CNum operator/(const CNum& a, const CNum& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend CNum operator/(const CNum& a, const Real& s) { return {a.re / s, a.im / s}; }
    CNum& operator+=(const CNum& o) { re += o.re; im += o.im; return *this; }
    CNum& operator-=(const CNum& o) { re -= o.re; im -= o.im; return *this; }
    CNum& operator*=(const CNum& o) { *this = *this * o; return *this; }

    CNum conj() const { return {re, -im}; }
};

inline Real norm(const CNum& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const CNum& z) { return sqrt(norm(z)); }

// Principal square root.
inline CNum sqrt(const CNum& z) {
    if (z.im == 0) {
        if (z.re >= 0) return {sqrt(z.re), Real(0)};
        return {Real(0), sqrt(-z.re)};
    }
    Real r = abs(z);
    Real t = sqrt((r + abs(z.re)) / 2);
    if (z.re >= 0) return {t, z.im / (2 * t)};
    Real s = z.im >= 0 ? Real(1) : Real(-1);
    return {abs(z.im) / (2 * t), s * t};
}

inline CNum exp(const CNum& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// e^{2*pi*i*t} for real t.
inline CNum unit_phase(const Real& t) {
    Real a = two_pi() * t;
    return {cos(a), sin(a)};
}

}  // namespace neron
