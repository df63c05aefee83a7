#pragma once

// Archimedean local discrepancy of a finite set Z in C/L:
//   D(Z) = (1/N^2) sum_{i,j} lambda_t(z_i - z_j),  t = 1/N by default,
// evaluated two independent ways: the direct double sum, and the Parseval
// form  sum_{w != 0} lambda_hat_t(g_w) |delta_hat(g_w)|^2.  Both share the
// same certified truncation machinery, so their difference is bounded by the
// combined reported errors.

#include "neron/errors.hpp"
#include "neron/lattice.hpp"
#include "neron/neron_arch.hpp"

#include <vector>

namespace neron {

inline void require_distinct(const std::vector<ArchPoint>& Z, const Real& tol) {
    for (std::size_t i = 0; i < Z.size(); ++i)
        for (std::size_t j = i + 1; j < Z.size(); ++j)
            if ((Z[i] - Z[j]).is_lattice_point(tol))
                throw DuplicatePointsError("points coincide modulo the lattice");
}

// Direct double sum, diagonal included.  Cost O(N^2 * box).
inline Certified arch_discrepancy_direct(const TauLattice& L, const std::vector<ArchPoint>& Z,
                                         Real t = 0, Real eps = Real("1e-12"),
                                         long max_M = kDefaultBoxCap) {
    const std::size_t N = Z.size();
    if (N == 0) throw DomainError("empty point set");
    require_distinct(Z, ldexp(Real(1), -static_cast<int>(precision_bits()) + 24));
    if (t == 0) t = Real(1) / Real(static_cast<double>(N));

    auto plan = detail::build_plan(detail::SumKind::SmoothedLambda, L, t, eps, max_M);
    KahanSum acc;
    acc.add(Real(static_cast<double>(N)) * detail::plan_eval(plan, Real(0), Real(0)));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            ArchPoint d = Z[i] - Z[j];
            acc.add(2 * detail::plan_eval(plan, d.r1, d.r2));
        }
    const Real n2 = Real(static_cast<double>(N)) * Real(static_cast<double>(N));
    Certified out;
    out.value = acc.value() / n2;
    out.err = plan.tail + Real(static_cast<double>(plan.terms() * N)) * eps_unit() * 8;
    return out;
}

// Parseval form.  Cost O(N * box).
inline Certified arch_discrepancy_parseval(const TauLattice& L, const std::vector<ArchPoint>& Z,
                                           Real t = 0, Real eps = Real("1e-12"),
                                           long max_M = kDefaultBoxCap) {
    const std::size_t N = Z.size();
    if (N == 0) throw DomainError("empty point set");
    require_distinct(Z, ldexp(Real(1), -static_cast<int>(precision_bits()) + 24));
    if (t == 0) t = Real(1) / Real(static_cast<double>(N));

    auto plan = detail::build_plan(detail::SumKind::SmoothedLambda, L, t, eps, max_M);
    const long M = plan.M;
    const Real rn = Real(static_cast<double>(N));

    std::vector<CNum> c1(N), c1c(N), c2(N), c1_mM(N), rowb(N), cur(N);
    for (std::size_t j = 0; j < N; ++j) {
        c1[j] = unit_phase(-Z[j].r1);  // conjugated characters
        c1c[j] = c1[j].conj();
        c2[j] = unit_phase(-Z[j].r2);
        CNum p(Real(1));
        for (long k = 0; k < M; ++k) p *= c1c[j];
        c1_mM[j] = p;
        rowb[j] = CNum(Real(1));
    }

    KahanSum acc;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < N; ++j) cur[j] = CNum(Real(1));
    for (long n1 = 1; n1 <= M; ++n1) {
        CNum s(Real(0));
        for (std::size_t j = 0; j < N; ++j) {
            cur[j] *= c1[j];
            s += cur[j];
        }
        acc.add(plan.w[idx++] * norm(s / rn));
    }
    for (long n2 = 1; n2 <= M; ++n2) {
        for (std::size_t j = 0; j < N; ++j) {
            rowb[j] *= c2[j];
            cur[j] = rowb[j] * c1_mM[j];
        }
        for (long n1 = -M; n1 <= M; ++n1) {
            CNum s(Real(0));
            for (std::size_t j = 0; j < N; ++j) {
                s += cur[j];
                cur[j] *= c1[j];
            }
            acc.add(plan.w[idx++] * norm(s / rn));
        }
    }
    Certified out;
    out.value = 2 * acc.value();
    out.err = plan.tail + Real(static_cast<double>(plan.terms() * N)) * eps_unit() * 8;
    return out;
}

// Lower-bound gap in the smoothing inequality for the pair sum:
//   sum_{i != j} lambda(z_i - z_j)
//     - [ N^2 D(Z) - (N/2) log N - (N/12) log+|j_E| - (16/5) N ]  >= 0.
inline Certified elkies_gap(const TauLattice& L, const std::vector<ArchPoint>& Z,
                            const Real& log_plus_abs_j, Real eps = Real("1e-12")) {
    const std::size_t N = Z.size();
    if (N < 2) throw DomainError("need at least two points");
    require_distinct(Z, ldexp(Real(1), -static_cast<int>(precision_bits()) + 24));

    KahanSum pair_sum;
    Real pair_err = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            Certified lam = neron_lambda(L, Z[i] - Z[j]);
            pair_sum.add(2 * lam.value);
            pair_err += 2 * lam.err;
        }

    const Real rn = Real(static_cast<double>(N));
    Certified D = arch_discrepancy_direct(L, Z, Real(1) / rn, eps);
    Real rhs = rn * rn * D.value - rn * log(rn) / 2 - rn / 12 * log_plus_abs_j -
               Real(16) / 5 * rn;
    Certified out;
    out.value = pair_sum.value() - rhs;
    out.err = pair_err + rn * rn * D.err;
    return out;
}

// ---------------------------------------------------------------------------
// Full m-torsion sets E[m] = { (j1/m, j2/m) } (lattice-level; N = m^2)

inline std::vector<ArchPoint> torsion_grid(long m) {
    if (m < 1) throw DomainError("m must be positive");
    std::vector<ArchPoint> Z;
    Z.reserve(static_cast<std::size_t>(m) * m);
    for (long j1 = 0; j1 < m; ++j1)
        for (long j2 = 0; j2 < m; ++j2)
            Z.push_back(ArchPoint{Real(j1) / Real(m), Real(j2) / Real(m)});
    return Z;
}

// The direct double sum over E[m], grouped by the m^2 difference classes
// (each difference occurs exactly N = m^2 times).
inline Certified arch_discrepancy_torsion_direct(const TauLattice& L, long m,
                                                 Real eps = Real("1e-12"),
                                                 long max_M = kDefaultBoxCap) {
    if (m < 1) throw DomainError("m must be positive");
    const Real t = Real(1) / (Real(m) * Real(m));
    auto plan = detail::build_plan(detail::SumKind::SmoothedLambda, L, t, eps, max_M);
    KahanSum acc;
    for (long j1 = 0; j1 < m; ++j1)
        for (long j2 = 0; j2 < m; ++j2)
            acc.add(detail::plan_eval(plan, Real(j1) / Real(m), Real(j2) / Real(m)));
    Certified out;
    out.value = acc.value() / (Real(m) * Real(m));
    out.err = plan.tail + Real(static_cast<double>(plan.terms() * m * m)) * eps_unit() * 8;
    return out;
}

// Closed form for the same quantity: characters supported on the sublattice
// mL rescale to lambda_{t=1}(O) / m^2.
inline Certified arch_discrepancy_torsion_closed_form(const TauLattice& L, long m,
                                                      Real eps = Real("1e-12")) {
    Certified lam1 = lambda_t(L, ArchPoint{}, Real(1), eps);
    return {lam1.value / (Real(m) * Real(m)), lam1.err};
}

}  // namespace neron
