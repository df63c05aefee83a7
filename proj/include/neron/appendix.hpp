#pragma once

// Sample-based verification of the analytic estimates behind the smoothing
// bound: nonnegativity of the heat kernel, the lambda >= lambda_t - t
// domination, the 2 pi b <= log+|j| + 6 estimate on the fundamental domain,
// the bound on lambda_t at the origin, the lattice-counting bound they use,
// and the exact bracketing of the auxiliary polynomial root.

#include "neron/arch_discrepancy.hpp"
#include "neron/curve.hpp"
#include "neron/lattice.hpp"
#include "neron/modular.hpp"
#include "neron/neron_arch.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace neron {

struct LemmaCheckResult {
    std::string lemma_id;
    long samples = 0;
    Real worst_margin = 0;   // minimum of (bound - quantity); >= -certified_error to pass
    Real certified_error = 0;
    bool passed = false;

    void finish() { passed = worst_margin >= -certified_error; }
};

// 2 pi b <= log+|j(tau)| + 6 on a sample grid of the fundamental domain.
inline LemmaCheckResult jinv_lemma_check(long samples, double b_max, unsigned seed) {
    LemmaCheckResult res;
    res.lemma_id = "j-imaginary-part-bound";
    res.samples = samples;
    res.certified_error = Real("1e-20");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> da(-0.5, 0.5);
    const double b_lo = std::sqrt(3.0) / 2;
    std::uniform_real_distribution<double> db(b_lo, b_max);
    bool first = true;
    for (long i = 0; i < samples; ++i) {
        double a = (i == 0) ? 0.0 : da(rng);          // include tau = i
        double b = (i == 0) ? 1.0 : db(rng);
        if (i == 1) { a = 0.5; b = b_lo; }            // include the corner
        CNum tau{Real(a), Real(b)};
        Real margin = log_plus_abs_j(tau) + 6 - two_pi() * Real(b);
        if (first || margin < res.worst_margin) res.worst_margin = margin;
        first = false;
    }
    res.finish();
    return res;
}

// Exact sign bracketing of the root of f(t) = 240 t (1 + 4t + t^2) - (1-t)^6
// in (0,1): f(1/250) < 0 < f(1/249).
inline Rational t0_polynomial(const Rational& t) {
    Rational one_m = 1 - t;
    Rational p6 = one_m * one_m;
    p6 = p6 * p6 * one_m * one_m;
    return 240 * t * (1 + 4 * t + t * t) - p6;
}

inline std::pair<Rational, Rational> t0_root_bracket() {
    Rational lo(1, 250), hi(1, 249);
    if (!(t0_polynomial(lo) < 0 && t0_polynomial(hi) > 0))
        throw Error("auxiliary polynomial failed its sign bracket");
    return {lo, hi};
}

// lambda_t(O) <= (1/2) log(1/t) + (1/12) log+|j| + 11/5 for 0 < t <= 1.
inline LemmaCheckResult smoothed_origin_bound_check(const std::vector<TauLattice>& lattices,
                                                    const std::vector<Real>& ts,
                                                    Real eps = Real("1e-12")) {
    LemmaCheckResult res;
    res.lemma_id = "smoothed-lambda-origin-bound";
    res.certified_error = eps * 4;
    bool first = true;
    for (const TauLattice& L : lattices) {
        Real lpj = log_plus_abs_j(L.tau);
        for (const Real& t : ts) {
            if (!(t > 0 && t <= 1)) throw DomainError("t must lie in (0, 1]");
            Certified v = lambda_t(L, ArchPoint{}, t, eps);
            Real bound = log(1 / t) / 2 + lpj / 12 + Real(11) / 5;
            Real margin = bound - v.value;
            if (first || margin < res.worst_margin) res.worst_margin = margin;
            first = false;
            ++res.samples;
        }
    }
    res.finish();
    return res;
}

// g_t >= 0 and lambda >= lambda_t - t on random samples (z, t), z != 0.
inline LemmaCheckResult heat_positivity_and_domination_check(const TauLattice& L, long samples,
                                                             unsigned seed,
                                                             Real eps = Real("1e-12")) {
    LemmaCheckResult res;
    res.lemma_id = "heat-kernel-positivity-and-domination";
    res.samples = samples;
    res.certified_error = eps * 8;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dz(1, (1 << 16) - 1);
    std::uniform_int_distribution<int> dt(0, 2);
    const Real tvals[3] = {Real(1), Real(1) / 10, Real(1) / 100};
    bool first = true;
    for (long i = 0; i < samples; ++i) {
        ArchPoint z{Real(dz(rng)) / (1 << 16), Real(dz(rng)) / (1 << 16)};
        Real t = tvals[dt(rng)];
        Real g = heat_kernel(L, z, t, eps).value;
        Real lam = neron_lambda(L, z).value;
        Real lt = lambda_t(L, z, t, eps).value;
        Real margin = min(g, lam - (lt - t));
        if (first || margin < res.worst_margin) res.worst_margin = margin;
        first = false;
    }
    res.finish();
    return res;
}

// Half-plane lattice count S(x) = #{w in L, Im w > 0, |w|^2 <= x} against
// the bound (pi / 2b) x + sqrt(x) / b, exhaustively up to x_max.
inline LemmaCheckResult lattice_count_check(const TauLattice& L, double x_max) {
    LemmaCheckResult res;
    res.lemma_id = "half-plane-lattice-count";
    res.certified_error = Real("1e-20");
    std::vector<Real> norms;
    const double b = static_cast<double>(L.b);
    const double a = static_cast<double>(L.a);
    const long n2_max = static_cast<long>(std::sqrt(x_max) / b) + 1;
    for (long n2 = 1; n2 <= n2_max; ++n2) {
        Real y = Real(n2) * L.b;
        if (y * y > x_max) continue;
        // |n1 + n2 a| <= sqrt(x_max - (n2 b)^2)
        double w = std::sqrt(std::max(0.0, x_max - n2 * n2 * b * b));
        long lo = static_cast<long>(std::floor(-n2 * a - w)) - 1;
        long hi = static_cast<long>(std::ceil(-n2 * a + w)) + 1;
        for (long n1 = lo; n1 <= hi; ++n1) {
            Real u = Real(n1) + Real(n2) * L.a;
            Real n = u * u + y * y;
            if (n <= x_max) norms.push_back(n);
        }
    }
    std::sort(norms.begin(), norms.end());
    res.samples = static_cast<long>(norms.size());
    bool first = true;
    for (std::size_t k = 0; k < norms.size(); ++k) {
        Real x = norms[k];
        Real bound = pi() / (2 * L.b) * x + sqrt(x) / L.b;
        Real margin = bound - Real(static_cast<double>(k + 1));
        if (first || margin < res.worst_margin) res.worst_margin = margin;
        first = false;
    }
    res.finish();
    return res;
}

// The constant 16/5 in the pair-sum lower bound splits exactly as the
// origin-bound constant 11/5 plus the smoothing drop 1.
inline bool smoothing_constant_assembly_exact() {
    Rational origin_const(11, 5);
    Rational drop(1);
    return origin_const + drop == Rational(16, 5);
}

}  // namespace neron
