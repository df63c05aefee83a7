#pragma once

// Period lattice of a curve over Q, normalized to tau in the fundamental
// domain, plus the elliptic logarithm.
//
// Periods come from the arithmetic-geometric mean / Carlson symmetric
// integral R_F; the elliptic logarithm is the incomplete R_F.  Every lattice
// built from a curve is cross-checked by evaluating j(tau) from its q-series
// against the exact j-invariant.

#include "neron/complexnum.hpp"
#include "neron/curve.hpp"
#include "neron/errors.hpp"
#include "neron/modular.hpp"
#include "neron/numeric.hpp"

#include <array>
#include <complex>

namespace neron {

// ---------------------------------------------------------------------------
// AGM and Carlson R_F

inline Real agm(Real x, Real y) {
    const Real tol = eps_unit() * 8;
    for (int i = 0; i < 10000; ++i) {
        Real a = (x + y) / 2, g = sqrt(x * y);
        if (abs(a - g) <= tol * abs(a)) return a;
        x = a;
        y = g;
    }
    throw PrecisionExhaustedError("AGM did not converge");
}

// Carlson's symmetric elliptic integral of the first kind,
// R_F(x,y,z) = (1/2) int_0^inf dt / sqrt((t+x)(t+y)(t+z)).
// Principal branches; arguments must stay off the negative real axis.
inline CNum carlson_rf(CNum x, CNum y, CNum z) {
    const Real tol = eps_unit() * 16;
    for (int i = 0; i < 20000; ++i) {
        CNum sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
        CNum lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / Real(4);
        y = (y + lam) / Real(4);
        z = (z + lam) / Real(4);
        CNum a = (x + y + z) / Real(3);
        Real spread = abs(x - a) + abs(y - a) + abs(z - a);
        if (spread <= tol * abs(a)) {
            CNum r = sqrt(a);
            return CNum(1) / r;
        }
    }
    throw PrecisionExhaustedError("R_F iteration did not converge");
}

// ---------------------------------------------------------------------------

// A point of C/L in lattice coordinates: z = r1 + r2 tau with r1, r2 in [0,1).
struct ArchPoint {
    Real r1 = 0, r2 = 0;

    static ArchPoint reduced(Real a, Real b) { return {frac_part(a), frac_part(b)}; }
    ArchPoint operator-(const ArchPoint& o) const { return reduced(r1 - o.r1, r2 - o.r2); }
    ArchPoint operator-() const { return reduced(-r1, -r2); }

    // distance to the lattice in the max-metric on coordinates
    Real coord_dist_to_zero() const {
        Real d1 = min(r1, 1 - r1), d2 = min(r2, 1 - r2);
        return d1 > d2 ? d1 : d2;
    }
    bool is_lattice_point(const Real& tol) const { return coord_dist_to_zero() < tol; }
};

struct TauLattice {
    CNum tau;          // a + b i in the upper half plane
    CNum q;            // e^{2 pi i tau}
    Real a, b;
    unsigned precision_bits = 0;
    bool fundamental = false;

    CNum omega1{Real(1)}, omega2;  // basis with tau = omega2/omega1

    // curve frame (set when built from a curve); needed by elliptic_log
    bool has_curve_frame = false;
    int disc_sign = 0;
    Real g2, g3;        // y^2 = 4x^3 - g2 x - g3
    Real x_shift;       // x_short = x + b2/12
    CNum e1, e2, e3;    // roots: disc>0 -> e1>e2>e3 real; disc<0 -> e1 real, e2 = conj(e3)
    CNum half_period_e3;  // the half period z with p(z) = e3, in the curve frame

    static TauLattice from_tau(const CNum& t) {
        if (!(t.im > 0)) throw DomainError("tau must lie in the upper half plane");
        TauLattice L;
        L.tau = t;
        L.a = t.re;
        L.b = t.im;
        L.q = exp(CNum(0, 1) * two_pi() * t);
        L.omega1 = CNum(Real(1));
        L.omega2 = t;
        L.precision_bits = neron::precision_bits();
        L.fundamental = (L.b >= sqrt(Real(3)) / 2 - Real(1) / 1000) && (norm(t) >= Real(1) - Real(1) / 1000) &&
                        (abs(L.a) <= Real(1) / 2 + Real(1) / 1000);
        return L;
    }

    // z (a point of C in the curve frame) -> lattice coordinates mod 1
    ArchPoint to_coords(const CNum& z) const {
        CNum w = z / omega1;
        Real r2 = w.im / b;
        Real r1 = w.re - r2 * a;
        return ArchPoint::reduced(r1, r2);
    }
};

namespace detail {

// Roots of 4 t^3 - g2 t - g3: double-precision Cardano seeds polished by
// Newton in full precision.  The sum of the roots vanishes.
inline std::array<CNum, 3> cubic_roots(const Real& g2, const Real& g3) {
    const double p = -static_cast<double>(g2) / 4;
    const double qc = -static_cast<double>(g3) / 4;
    std::array<std::complex<double>, 3> seeds;
    const double disc = -4 * p * p * p - 27 * qc * qc;
    if (disc > 0) {
        double m = 2 * std::sqrt(-p / 3);
        double theta = std::acos(3 * qc / (p * m)) / 3;
        for (int k = 0; k < 3; ++k)
            seeds[k] = m * std::cos(theta - 2 * M_PI * k / 3);
    } else {
        double s = std::sqrt(qc * qc / 4 + p * p * p / 27);
        double u = std::cbrt(-qc / 2 + s), v = std::cbrt(-qc / 2 - s);
        seeds[0] = u + v;
        seeds[1] = std::complex<double>(-(u + v) / 2, std::sqrt(3.0) / 2 * (u - v));
        seeds[2] = std::conj(seeds[1]);
    }
    std::array<CNum, 3> roots;
    for (int k = 0; k < 3; ++k) {
        CNum t(Real(seeds[k].real()), Real(seeds[k].imag()));
        for (int it = 0; it < 64; ++it) {
            CNum f = Real(4) * t * t * t - g2 * t - g3;
            CNum df = Real(12) * t * t - g2;
            CNum step = f / df;
            t = t - step;
            if (abs(step) < eps_unit() * (1 + abs(t))) break;
        }
        roots[k] = t;
    }
    return roots;
}

}  // namespace detail

// Builds the normalized period lattice of C at the requested precision.
// The result carries tau reduced into the standard fundamental domain and a
// basis (omega1, omega2) of the actual period lattice of the invariant
// differential, so that elliptic logarithms can be expressed in it.
inline TauLattice period_tau(const Curve& C, unsigned bits = 0) {
    if (bits == 0) bits = precision_bits();
    if (bits != precision_bits()) set_precision_bits(bits);

    TauLattice L;
    L.precision_bits = bits;
    L.has_curve_frame = true;
    L.g2 = to_real(C.c4) / 12;
    L.g3 = to_real(C.c6) / 216;
    L.x_shift = to_real(C.b2) / 12;
    L.disc_sign = C.disc > 0 ? 1 : -1;

    auto roots = detail::cubic_roots(L.g2, L.g3);
    CNum w1, w2;
    if (L.disc_sign > 0) {
        // all roots real; sort descending
        std::array<Real, 3> er{roots[0].re, roots[1].re, roots[2].re};
        std::sort(er.begin(), er.end(), [](const Real& x, const Real& y) { return x > y; });
        L.e1 = CNum(er[0]);
        L.e2 = CNum(er[1]);
        L.e3 = CNum(er[2]);
        w1 = CNum(pi() / agm(sqrt(er[0] - er[2]), sqrt(er[0] - er[1])));
        w2 = CNum(Real(0), pi() / agm(sqrt(er[0] - er[2]), sqrt(er[1] - er[2])));
    } else {
        // one real root; e2, e3 a conjugate pair with Im(e2) > 0
        int ri = 0;
        for (int k = 1; k < 3; ++k)
            if (abs(roots[k].im) < abs(roots[ri].im)) ri = k;
        CNum er = CNum(roots[ri].re);
        CNum c = roots[(ri + 1) % 3];
        if (c.im < 0) c = c.conj();
        L.e1 = er;
        L.e2 = c;
        L.e3 = c.conj();
        w1 = Real(2) * carlson_rf(CNum(0), er - c, er - c.conj());
        w2 = Real(2) * carlson_rf(CNum(0), c - er, c - c.conj());
    }
    L.half_period_e3 = w2 / Real(2);
    CNum t = w2 / w1;
    if (t.im < 0) {
        w2 = -w2;
        t = -t;
    }

    // reduce tau into the fundamental domain, tracking the basis change
    for (int i = 0; i < 10000 && !(abs(t.re) <= Real(1) / 2 + eps_unit() * 4 && norm(t) >= 1 - eps_unit() * 8); ++i) {
        Real n = round(t.re);
        if (n != 0) {
            w2 = w2 - n * w1;
            t = w2 / w1;
        }
        if (norm(t) < 1) {
            CNum tmp = w1;
            w1 = w2;
            w2 = -tmp;
            t = w2 / w1;
        }
    }
    L.tau = t;
    L.a = t.re;
    L.b = t.im;
    L.q = exp(CNum(0, 1) * two_pi() * t);
    L.omega1 = w1;
    L.omega2 = w2;
    L.fundamental = true;

    // post-check: j(tau) must reproduce the exact j-invariant
    CNum jt = j_from_tau(L.tau);
    Real jexact = to_real(C.j);
    Real scale = abs(jexact) > 1 ? abs(jexact) : Real(1);
    Real err = abs(jt - CNum(jexact));
    if (err > ldexp(Real(1), -static_cast<int>(bits / 2)) * scale)
        throw PrecisionExhaustedError("period computation failed the j round-trip check");
    return L;
}

// ---------------------------------------------------------------------------
// Elliptic logarithm

namespace detail {

// z with P = (X, Y) on Y^2 = 4X^3 - g2 X - g3, principal value in (0, w/2].
inline CNum rf_log(const TauLattice& L, const Real& X, const Real& Y) {
    CNum u = carlson_rf(CNum(X) - L.e1, CNum(X) - L.e2, CNum(X) - L.e3);
    if (Y > 0) u = -u;
    return u;
}

// addition on the short model, second summand a 2-torsion point (e, 0)
inline void short_add_two_torsion(const Real& X1, const Real& Y1, const Real& e, Real& X3,
                                  Real& Y3) {
    Real m = Y1 / (X1 - e);
    X3 = m * m / 4 - X1 - e;
    Y3 = -(Y1 + m * (X3 - X1));
}

}  // namespace detail

// The image of P in lattice coordinates; a group homomorphism mod L.
inline ArchPoint elliptic_log(const Curve& C, const TauLattice& L, const Point& P) {
    if (!L.has_curve_frame) throw DomainError("lattice carries no curve frame");
    C.require_on_curve(P);
    if (P.infinity) return ArchPoint{};

    Real X = to_real(P.x) + L.x_shift;
    Real Y = 2 * to_real(P.y) + to_real(C.a1) * to_real(P.x) + to_real(C.a3);

    CNum z;
    if (L.disc_sign > 0 && X < (L.e1.re + L.e2.re) / 2) {
        // bounded real component: translate by (e3, 0) onto the unbounded one
        if (abs(X - L.e3.re) < eps_unit() * 64) {
            z = L.half_period_e3;
        } else {
            Real X3, Y3;
            detail::short_add_two_torsion(X, Y, L.e3.re, X3, Y3);
            z = detail::rf_log(L, X3, Y3) - L.half_period_e3;
        }
    } else {
        z = detail::rf_log(L, X, Y);
    }
    return L.to_coords(z);
}

// Lower bound for the discrepancy of real-locus point sets,
// (b / 4 pi |tau|^2) e^{-8 pi |tau|^2 / (b N)}; requires tau with
// Re(tau) in {0, +-1/2} (the lattices of curves defined over R).
inline Real real_points_lower_bound(unsigned N, const TauLattice& L) {
    Real half_dist = min(frac_part(2 * L.a), 1 - frac_part(2 * L.a));
    if (half_dist > Real(1) / 1000)
        throw TauNotRealError("tau does not correspond to a real curve");
    Real t2 = norm(L.tau);
    return L.b / (4 * pi() * t2) * exp(-8 * pi() * t2 / (L.b * Real(N)));
}

}  // namespace neron
