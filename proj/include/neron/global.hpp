#pragma once

// Global discrepancy: the sum of local discrepancies over all contributing
// places, and its verification against the height upper bound
//   D(Z) <= 4 hhat(Z) + (1/N)( (1/2) log N + h(j)/12 + 16/5 ).
// Over Q every degree weight is 1.

#include "neron/arch_discrepancy.hpp"
#include "neron/heights.hpp"
#include "neron/neron_nonarch.hpp"

#include <optional>
#include <set>
#include <vector>

namespace neron {

struct PlaceReport {
    bool archimedean = false;
    Integer p = 0;
    ReductionKind kind = ReductionKind::Good;
    int nu = 0;
    Real D = 0;
    Real err = 0;
    Real Lambda_v = 0;  // (1/N^2) sum_{i != j} lambda_v(P_i - P_j)
    // archimedean dual evaluation
    Real D_direct = 0, D_parseval = 0;
    // exact non-archimedean values
    LogValue D_exact, D_i, D_j;
};

struct GlobalReport {
    std::size_t N = 0;
    Real hhat = 0;
    Real Lambda = 0;
    Real D_global = 0;
    Real err = 0;
    Real rhs = 0;    // 4 hhat + (1/N)((1/2) log N + h(j)/12 + 16/5)
    Real slack = 0;  // rhs - D_global
    std::vector<PlaceReport> places;
};

// Good primes can only contribute through congruent pairs, i.e. through a
// prime dividing some x-denominator of a pairwise difference; together with
// the bad primes this is a finite certified superset of the support.
inline std::set<Integer> discrepancy_support(const Curve& C, const std::vector<Point>& Z) {
    std::set<Integer> S;
    for (const BadPrime& bp : C.bad_primes) S.insert(bp.p);
    for (std::size_t i = 0; i < Z.size(); ++i)
        for (std::size_t j = i + 1; j < Z.size(); ++j) {
            auto sup = height_support(C, C.sub(Z[i], Z[j]));
            S.insert(sup.begin(), sup.end());
        }
    return S;
}

inline Real main_inequality_rhs(const Curve& C, std::size_t N, const Real& hhat) {
    Real rn(static_cast<double>(N));
    return 4 * hhat + (log(rn) / 2 + weil_height(C.j) / 12 + Real(16) / 5) / rn;
}

inline GlobalReport global_discrepancy(const Curve& C, const TauLattice& L,
                                       const std::vector<Point>& Z, Real eps = Real("1e-12")) {
    const std::size_t N = Z.size();
    if (N == 0) throw DomainError("empty point set");
    for (const Point& P : Z) C.require_on_curve(P);
    require_distinct(Z);

    GlobalReport rep;
    rep.N = N;
    rep.hhat = set_height(C, L, Z);
    LambdaSum ls = lambda_sum(C, L, Z);
    rep.Lambda = ls.total;

    std::vector<ArchPoint> zs;
    zs.reserve(N);
    for (const Point& P : Z) zs.push_back(elliptic_log(C, L, P));

    PlaceReport arch;
    arch.archimedean = true;
    Certified dd = arch_discrepancy_direct(L, zs, 0, eps);
    Certified dp = arch_discrepancy_parseval(L, zs, 0, eps);
    arch.D_direct = dd.value;
    arch.D_parseval = dp.value;
    arch.D = dp.value;
    arch.err = dp.err;
    arch.Lambda_v = ls.arch;
    rep.places.push_back(arch);

    KahanSum total;
    total.add(arch.D);
    Real err = arch.err;
    for (const Integer& p : discrepancy_support(C, Z)) {
        PlaceData pd = reduction_type(C, p);
        auto disc = nonarch_discrepancy(C, pd, Z);
        if (disc.D.is_zero() && pd.kind == ReductionKind::Good) continue;
        PlaceReport pr;
        pr.p = p;
        pr.kind = pd.kind;
        pr.nu = pd.nu;
        pr.D_exact = disc.D;
        pr.D_i = disc.D_i;
        pr.D_j = disc.D_j;
        pr.D = disc.D.to_real();
        pr.err = 0;
        if (auto it = ls.finite.find(p); it != ls.finite.end())
            pr.Lambda_v = it->second.to_real();
        rep.places.push_back(pr);
        total.add(pr.D);
    }
    rep.D_global = total.value();
    rep.err = err;
    rep.rhs = main_inequality_rhs(C, N, rep.hhat);
    rep.slack = rep.rhs - rep.D_global;
    return rep;
}

// D_{v0}(Z) <= global discrepancy, since all local terms are nonnegative.
// v0 = nullopt means the archimedean place, otherwise the prime v0.
inline bool local_global_check(const Curve& C, const TauLattice& L, const std::vector<Point>& Z,
                               const std::optional<Integer>& v0, Real budget = Real("1e-9")) {
    GlobalReport rep = global_discrepancy(C, L, Z);
    Real dv;
    if (!v0) {
        dv = rep.places.front().D;
    } else {
        dv = nonarch_discrepancy(C, reduction_type(C, *v0), Z).D.to_real();
    }
    return dv <= rep.D_global + rep.err + budget;
}

// ---------------------------------------------------------------------------
// Analytic torsion-orbit mode: Z = E[m], N = m^2, hhat = 0.
//
// Skips the places over primes dividing m (their contribution is >= 0), so
// the reported global value is a certified lower bound; the slack check
// against the height bound stays sound.

struct TorsionOrbitReport {
    long m = 0;
    std::size_t N = 0;
    Real D_arch = 0;
    Real arch_err = 0;
    std::vector<PlaceReport> finite_places;
    std::vector<Integer> skipped_primes;
    Real D_lower = 0;   // certified lower bound for the global discrepancy
    Real rhs = 0;       // (1/m^2)(log m + h(j)/12 + 16/5)
    Real slack = 0;
};

inline TorsionOrbitReport torsion_orbit_global(const Curve& C, const TauLattice& L, long m,
                                               Real eps = Real("1e-12")) {
    if (m < 2) throw DomainError("torsion order m must be at least 2");
    TorsionOrbitReport rep;
    rep.m = m;
    rep.N = static_cast<std::size_t>(m) * m;

    Certified arch = arch_discrepancy_torsion_closed_form(L, m, eps);
    rep.D_arch = arch.value;
    rep.arch_err = arch.err;

    KahanSum total;
    total.add(rep.D_arch);
    Rational m2(Integer(m) * Integer(m));
    for (const BadPrime& bp : C.bad_primes) {
        if (Integer(m) % bp.p == 0) {
            rep.skipped_primes.push_back(bp.p);
            continue;
        }
        // E[m] meets every component m times and reduces injectively into
        // the congruence classes, so D_i = 0 and D_j = nu log p / (12 m^2).
        PlaceReport pr;
        pr.p = bp.p;
        pr.kind = ReductionKind::Multiplicative;
        pr.nu = bp.ord_disc;
        pr.D_j = LogValue(Rational(bp.ord_disc, 12) / m2, bp.p);
        pr.D_exact = pr.D_j;
        pr.D = pr.D_exact.to_real();
        rep.finite_places.push_back(pr);
        total.add(pr.D);
    }
    rep.D_lower = total.value();
    Real rm(static_cast<double>(m));
    rep.rhs = (log(rm) + weil_height(C.j) / 12 + Real(16) / 5) / (rm * rm);
    rep.slack = rep.rhs - rep.D_lower;
    return rep;
}

}  // namespace neron
