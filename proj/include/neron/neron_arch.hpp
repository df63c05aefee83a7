#pragma once

// The archimedean Neron function lambda on C/L, its Fourier coefficients,
// and the heat-kernel smoothed family lambda_t.
//
// lambda is evaluated from its q-product expansion
//   lambda(z) = -(1/2) B2(log|u|/log|q|) log|q| - log|1-u|
//               - sum_{n>=1} log|(1-q^n u)(1-q^n/u)|
// with the lift chosen so 0 <= log|u|/log|q| < 1.  The smoothed family is
// the lattice Fourier sum
//   lambda_t(z) = sum_{w != 0} (b / 2 pi |w'|^2) e^{-(2 pi t / b)|w'|^2} g_w(z),
// where (n1 + n2 tau)' = n2 - n1 tau and g_w is the corresponding character.
// All truncations carry certified tail bounds; every result is returned as
// value plus worst-case error.

#include "neron/complexnum.hpp"
#include "neron/errors.hpp"
#include "neron/lattice.hpp"
#include "neron/numeric.hpp"

#include <vector>

namespace neron {

struct Certified {
    Real value = 0;
    Real err = 0;
};

// Index of a character of C/L: the lattice point w = n1 + n2 tau.
struct LatticeCharacterIndex {
    long n1 = 0, n2 = 0;

    // the dual-pairing permutation w -> w' of the lattice
    LatticeCharacterIndex involution() const { return {n2, -n1}; }
    bool is_zero() const { return n1 == 0 && n2 == 0; }
    bool operator==(const LatticeCharacterIndex&) const = default;
};

// |w'|^2 for w = n1 + n2 tau; w' = n2 - n1 tau.
inline Real char_eigen_norm(const LatticeCharacterIndex& w, const TauLattice& L) {
    Real u = Real(w.n2) - L.a * Real(w.n1);
    Real v = L.b * Real(w.n1);
    return u * u + v * v;
}

// Fourier coefficient of lambda at the character of w: 0 at w = 0,
// otherwise b / (2 pi |w'|^2).
inline Real fourier_coeff(const LatticeCharacterIndex& w, const TauLattice& L) {
    if (w.is_zero()) return Real(0);
    return L.b / (two_pi() * char_eigen_norm(w, L));
}

// Laplacian eigenvalue c of the character of w (Delta g = -c g).
inline Real char_eigenvalue(const LatticeCharacterIndex& w, const TauLattice& L) {
    if (w.is_zero()) return Real(0);
    return two_pi() / L.b * char_eigen_norm(w, L);
}

// ---------------------------------------------------------------------------
// lambda from the q-product

inline Certified neron_lambda(const TauLattice& L, const ArchPoint& z) {
    const Real sing_tol = ldexp(Real(1), -static_cast<int>(L.precision_bits) + 24);
    if (z.is_lattice_point(sing_tol)) throw SingularAtOriginError("lambda has a pole at the origin");

    Real r1 = frac_part(z.r1), r2 = frac_part(z.r2);
    if (r2 > Real(1) / 2) {  // lambda is even; fold for fast series decay
        r1 = frac_part(-r1);
        r2 = frac_part(-r2);
    }

    const Real log_abs_q = -two_pi() * L.b;
    Certified out;
    out.value = -bernoulli_b2(r2) * log_abs_q / 2;

    const CNum u = exp(CNum(0, 1) * two_pi() * (CNum(r1) + r2 * L.tau));
    const CNum uinv = CNum(1) / u;
    out.value -= log(abs(CNum(1) - u));

    const Real aq = abs(L.q);
    const Real target = eps_unit() * 64;
    CNum qn(Real(1));
    long n = 0;
    KahanSum series;
    while (true) {
        ++n;
        qn *= L.q;
        series.add(log(abs((CNum(1) - qn * u) * (CNum(1) - qn * uinv))));
        // remaining terms: |q^k u| <= |q|^k, |q^k / u| <= |q|^{k - 1/2}
        Real lead = pow(aq, n + Real(1) / 2);
        Real tail = 2 * lead / ((1 - aq) * (1 - lead));
        if (tail < target) {
            out.err += tail;
            break;
        }
        if (n > 100000) throw PrecisionExhaustedError("lambda q-series did not converge");
    }
    out.value -= series.value();
    out.err += Real(n) * eps_unit() * 16;
    return out;
}

// ---------------------------------------------------------------------------
// Truncated lattice Fourier sums
//
// A plan fixes the coefficient of every character in a max-norm box
// |n1|, |n2| <= M together with a certified bound on the discarded tail.
// Evaluation at z then costs one complex multiplication per box point.

struct LatticeSumPlan {
    long M = 0;
    Real tail = 0;        // bound on the sum of |coefficient| outside the box
    Real const_term = 0;  // coefficient of the trivial character
    // rows n2 = 0..M; row 0 stores n1 = 1..M, other rows n1 = -M..M
    std::vector<Real> w;

    std::size_t terms() const { return w.size(); }
};

namespace detail {

// smallest eigenvalue of the quadratic form |n2 - n1 tau|^2
inline Real char_form_min_eigen(const TauLattice& L) {
    Real tr = 1 + L.a * L.a + L.b * L.b;
    Real det4 = 4 * L.b * L.b;
    return (tr - sqrt(tr * tr - det4)) / 2;
}

// sum_{k >= K} k x^k for 0 < x < 1
inline Real geom_k_tail(const Real& x, long K) {
    return pow(x, K) * (Real(K) - Real(K - 1) * x) / ((1 - x) * (1 - x));
}

enum class SumKind { HeatKernel, SmoothedLambda };

// Certified bound on the coefficient mass outside the max-norm box of size M.
inline Real box_tail(SumKind kind, const TauLattice& L, const Real& t, long M) {
    const Real eta = char_form_min_eigen(L);
    const Real beta = two_pi() * t * eta / L.b;
    const Real x = exp(-beta * Real(M + 1));  // e^{-beta k^2} <= x^k for k > M
    if (kind == SumKind::HeatKernel) return 8 * geom_k_tail(x, M + 1);
    // lambda coefficients: 8k * (b / 2 pi eta k^2) e^{-beta k^2}
    Real lead = 4 * L.b / (pi() * eta * Real(M + 1));
    return lead * pow(x, M + 1) / (1 - x);
}

inline LatticeSumPlan build_plan(SumKind kind, const TauLattice& L, const Real& t, const Real& eps,
                                 long max_M) {
    if (!(t > 0)) throw DomainError("smoothing parameter t must be positive");
    LatticeSumPlan plan;
    long M = 4;
    while (box_tail(kind, L, t, M) > eps) {
        M += M / 2 + 2;
        if (M > max_M)
            throw TruncationBudgetError("lattice sum would need a box beyond the configured cap");
    }
    plan.M = M;
    plan.tail = box_tail(kind, L, t, M);
    plan.const_term = (kind == SumKind::HeatKernel) ? Real(1) : Real(0);
    plan.w.reserve(static_cast<std::size_t>(M) * (2 * M + 1) + M);
    const Real c = two_pi() * t / L.b;
    auto coeff = [&](long n1, long n2) {
        Real u = Real(n2) - L.a * Real(n1);
        Real v = L.b * Real(n1);
        Real s = u * u + v * v;
        Real g = exp(-c * s);
        return (kind == SumKind::HeatKernel) ? g : L.b / (two_pi() * s) * g;
    };
    for (long n1 = 1; n1 <= M; ++n1) plan.w.push_back(coeff(n1, 0));
    for (long n2 = 1; n2 <= M; ++n2)
        for (long n1 = -M; n1 <= M; ++n1) plan.w.push_back(coeff(n1, n2));
    return plan;
}

// sum over the box of w(n1,n2) cos(2 pi (n1 dr1 + n2 dr2)), both half-planes
inline Real plan_eval(const LatticeSumPlan& plan, const Real& dr1, const Real& dr2) {
    const long M = plan.M;
    const CNum c1 = unit_phase(dr1);
    const CNum c1c = c1.conj();
    const CNum c2 = unit_phase(dr2);
    KahanSum acc;
    std::size_t idx = 0;
    CNum p(Real(1));
    for (long n1 = 1; n1 <= M; ++n1) {
        p *= c1;
        acc.add(plan.w[idx++] * p.re);
    }
    CNum c1_pow_mM(Real(1));
    for (long k = 0; k < M; ++k) c1_pow_mM *= c1c;  // c1^{-M}
    CNum row(Real(1));
    for (long n2 = 1; n2 <= M; ++n2) {
        row *= c2;
        CNum cur = row * c1_pow_mM;
        for (long n1 = -M; n1 <= M; ++n1) {
            acc.add(plan.w[idx++] * cur.re);
            cur *= c1;
        }
    }
    return plan.const_term + 2 * acc.value();
}

}  // namespace detail

inline constexpr long kDefaultBoxCap = 4096;

// g_t(z) = sum_g e^{-t c_g} g(z); the trivial character contributes 1,
// so the kernel integrates to 1 against Haar measure.
inline Certified heat_kernel(const TauLattice& L, const ArchPoint& z, const Real& t,
                             const Real& eps, long max_M = kDefaultBoxCap) {
    auto plan = detail::build_plan(detail::SumKind::HeatKernel, L, t, eps, max_M);
    Certified out;
    out.value = detail::plan_eval(plan, z.r1, z.r2);
    out.err = plan.tail + Real(static_cast<double>(plan.terms())) * eps_unit() * 8;
    return out;
}

// lambda_t(z) = sum_{w != 0} lambda_hat(g_w) e^{-t / lambda_hat(g_w)} g_w(z).
inline Certified lambda_t(const TauLattice& L, const ArchPoint& z, const Real& t, const Real& eps,
                          long max_M = kDefaultBoxCap) {
    auto plan = detail::build_plan(detail::SumKind::SmoothedLambda, L, t, eps, max_M);
    Certified out;
    out.value = detail::plan_eval(plan, z.r1, z.r2);
    out.err = plan.tail + Real(static_cast<double>(plan.terms())) * eps_unit() * 8;
    return out;
}

}  // namespace neron
