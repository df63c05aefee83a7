#pragma once

// Closed-form calculators for the explicit torsion / height bounds over
// totally real, cyclotomic, and totally p-adic extensions, plus the two
// elementary lemmas they rest on.  The totally real and cyclotomic bounds
// are rational functions of h(j), so those are computed exactly.

#include "neron/errors.hpp"
#include "neron/numeric.hpp"

namespace neron {

template <typename T>
T h_star(const T& h_j) {
    return h_j + 10;
}

template <typename T>
T h_dagger(const T& h_j) {
    return h_j / 6 + T(32) / 5;
}

// Smallest closed-form bound for N <= A log N + B:
// N <= (e/(e-1)) (A log A + B), which is < (8/5)(A log A + B).
inline Real solve_nlogn(const Real& A, const Real& B) {
    if (!(A > 0) || B < 0) throw DomainError("need A > 0 and B >= 0");
    Real core = A * log(A) + B;
    if (!(core > 0)) throw DomainError("need A log A + B > 0");
    Real e = exp(Real(1));
    return e / (e - 1) * core;
}

// Largest integer N <= n_max satisfying N <= A log N + B (0 if none).
// Double precision suffices: N - A log N - B is increasing for N > A and the
// margins near n_max are orders of magnitude above rounding error.
inline long nlogn_scan_max(const Real& A, const Real& B, long n_max) {
    const double a = static_cast<double>(A), b = static_cast<double>(B);
    long worst = 0;
    for (long n = 1; n <= n_max; ++n)
        if (static_cast<double>(n) <= a * std::log(static_cast<double>(n)) + b) worst = n;
    return worst;
}

// If #{P : hhat(P) <= S} <= T with S >= 0, T >= 1:
// (i) #torsion <= T, (ii) liminf hhat >= S, (iii) hhat >= S/T^2 off torsion.
struct SmallPointConsequences {
    Real torsion_bound, liminf_bound, min_height_bound;
};

inline SmallPointConsequences small_points_consequences(const Real& S, const Real& T) {
    if (S < 0 || T < 1) throw DomainError("need S >= 0 and T >= 1");
    return {T, S, S / (T * T)};
}

template <typename T>
struct BoundsTriple {
    T torsion_bound;
    T liminf_bound;
    T min_height_bound;
};

// Totally real field: (3 h*^2, 1/(24 h*), 1/(216 h*^5)); exact in h(j).
inline BoundsTriple<Rational> totally_real_bounds(const Rational& h_j) {
    if (h_j < 0) throw DomainError("h(j) is nonnegative");
    Rational hs = h_star(h_j);
    Rational hs2 = hs * hs;
    return {3 * hs2, Rational(1) / (24 * hs), Rational(1) / (216 * hs2 * hs2 * hs)};
}

// Maximal cyclotomic extension of a totally real field:
// (36 h*^4, 1/(96 h*), 1/(864 h*^5)).
inline BoundsTriple<Rational> cyclotomic_bounds(const Rational& h_j) {
    if (h_j < 0) throw DomainError("h(j) is nonnegative");
    Rational hs = h_star(h_j);
    Rational hs2 = hs * hs;
    return {36 * hs2 * hs2, Rational(1) / (96 * hs), Rational(1) / (864 * hs2 * hs2 * hs)};
}

// Totally p-adic extensions of type (e, f); q = p^f and
//   M = max(q + 1 + 2 sqrt(q), 12 e nu),
//   torsion <= (8 e M / 5 log p)(log(e M) + 2 log p / e + h-dagger),
//   liminf  >= log p / (8 e M),
//   min     >= (25/512)(log p / (e M))^3 (log(e M) + 2 log p / e + h-dagger)^{-2}.
inline BoundsTriple<Real> totally_padic_ef_bounds(const Real& h_j, const Integer& p, int nu,
                                                  int e, int f) {
    if (h_j < 0) throw DomainError("h(j) is nonnegative");
    if (p == 2) throw DomainError("the prime 2 is excluded");
    if (p < 3 || !is_probable_prime(p)) throw DomainError("p must be an odd prime");
    if (nu < 0) throw DomainError("nu is nonnegative");
    if (e < 1 || f < 1) throw DomainError("need e, f >= 1");

    Integer qi = 1;
    for (int i = 0; i < f; ++i) qi *= p;
    Real q = to_real(qi);
    Real hasse = q + 1 + 2 * sqrt(q);
    Real comp = to_real(Integer(12) * Integer(e) * Integer(nu));
    Real M = hasse > comp ? hasse : comp;

    Real logp = log(to_real(p));
    Real re(e);
    Real eM = re * M;
    Real arg = log(eM) + 2 * logp / re + h_dagger(h_j);
    BoundsTriple<Real> out;
    out.torsion_bound = 8 * eM / (5 * logp) * arg;
    out.liminf_bound = logp / (8 * eM);
    Real ratio = logp / eM;
    out.min_height_bound = Real(25) / 512 * ratio * ratio * ratio / (arg * arg);
    return out;
}

// Totally p-adic extensions (every completion inside Q_p).
inline BoundsTriple<Real> totally_padic_bounds(const Real& h_j, const Integer& p, int nu) {
    if (h_j < 0) throw DomainError("h(j) is nonnegative");
    if (p == 2) throw DomainError("the prime 2 is excluded");
    if (p < 3 || !is_probable_prime(p)) throw DomainError("p must be an odd prime");
    if (nu < 0) throw DomainError("nu is nonnegative");

    Real q = to_real(p);
    Real hasse = q + 1 + 2 * sqrt(q);
    Real comp = to_real(Integer(12) * Integer(1) * Integer(nu));
    Real M = hasse > comp ? hasse : comp;

    Real logp = log(to_real(p));
    Real re(1);
    Real eM = re * M;
    Real arg = log(eM) + 2 * logp / re + h_dagger(h_j);
    BoundsTriple<Real> out;
    out.torsion_bound = 8 * eM / (5 * logp) * arg;
    out.liminf_bound = logp / (8 * eM);
    Real ratio = logp / eM;
    out.min_height_bound = Real(25) / 512 * ratio * ratio * ratio / (arg * arg);
    return out;
}

}  // namespace neron
