#pragma once

// Canonical heights as sums of local Neron functions, an independent
// doubling-limit oracle, and the averaged pair sums Lambda_v / Lambda.

#include "neron/arch_discrepancy.hpp"
#include "neron/curve.hpp"
#include "neron/lattice.hpp"
#include "neron/neron_arch.hpp"
#include "neron/neron_nonarch.hpp"
#include "neron/places.hpp"

#include <map>
#include <set>
#include <vector>

namespace neron {

// Primes where lambda_p(P) can be nonzero: p | disc and p | den(x(P)).
// Denominators of affine points on an integral model are perfect squares.
inline std::set<Integer> height_support(const Curve& C, const Point& P) {
    std::set<Integer> S;
    for (const BadPrime& bp : C.bad_primes) S.insert(bp.p);
    if (!P.infinity) {
        Integer den = denominator(P.x);
        if (den > 1) {
            Integer e = sqrt(den);
            if (e * e != den)
                throw Error("internal error: x-denominator is not a square");
            for (const auto& [p, mult] : factorize(e)) S.insert(p);
        }
    }
    return S;
}

struct HeightBreakdown {
    Real total = 0;
    Real arch = 0;
    Real err = 0;
    std::map<Integer, LogValue> finite;
};

// hhat(P) = lambda_inf(P) + sum_p lambda_p(P); zero at the origin.
inline HeightBreakdown canonical_height_breakdown(const Curve& C, const TauLattice& L,
                                                  const Point& P) {
    HeightBreakdown out;
    if (P.infinity) return out;
    C.require_on_curve(P);

    Certified lam = neron_lambda(L, elliptic_log(C, L, P));
    out.arch = lam.value;
    out.err = lam.err;
    KahanSum total;
    total.add(out.arch);
    for (const Integer& p : height_support(C, P)) {
        LogValue v = neron_lambda_nonarch(C, reduction_type(C, p), P);
        if (!v.is_zero()) {
            out.finite[p] = v;
            total.add(v.to_real());
        }
    }
    out.total = total.value();
    return out;
}

inline Real canonical_height(const Curve& C, const TauLattice& L, const Point& P) {
    return canonical_height_breakdown(C, L, P).total;
}

struct OracleHeight {
    Real value = 0;  // k_max-th doubling term
    Real gap = 0;    // |last - previous| Cauchy-gap estimate
};

// Independent brute-force oracle: 4^{-k} (1/2) h(x(2^k P)).
inline OracleHeight canonical_height_oracle(const Curve& C, const Point& P, int k_max) {
    if (k_max < 1 || k_max > 7)
        throw CoordinateOverflowError("doubling oracle supports 1 <= k_max <= 7");
    C.require_on_curve(P);
    OracleHeight out;
    if (P.infinity) return out;

    Point Q = P;
    Real prev = weil_height(Q.x) / 2;
    for (int k = 1; k <= k_max; ++k) {
        Q = C.add(Q, Q);
        if (Q.infinity) return {Real(0), prev};  // torsion of 2-power order
        Real cur = ldexp(weil_height(Q.x), -2 * k) / 2;
        out.gap = abs(cur - prev);
        out.value = cur;
        prev = cur;
    }
    return out;
}

inline Real set_height(const Curve& C, const TauLattice& L, const std::vector<Point>& Z) {
    if (Z.empty()) throw DomainError("empty point set");
    KahanSum s;
    for (const Point& P : Z) s.add(canonical_height(C, L, P));
    return s.value() / Real(static_cast<double>(Z.size()));
}

// Lambda_v(Z) = (1/N^2) sum_{i != j} lambda_v(P_i - P_j), per place, and the
// global Lambda as their sum (all degree weights are 1 over Q).
struct LambdaSum {
    Real arch = 0;
    std::map<Integer, LogValue> finite;  // exact per-prime values scaled by 1/N^2
    Real total = 0;
    Real err = 0;
};

inline LambdaSum lambda_sum(const Curve& C, const TauLattice& L, const std::vector<Point>& Z) {
    const std::size_t N = Z.size();
    if (N == 0) throw DomainError("empty point set");
    require_distinct(Z);
    LambdaSum out;
    if (N == 1) return out;

    std::vector<ArchPoint> zs;
    zs.reserve(N);
    for (const Point& P : Z) zs.push_back(elliptic_log(C, L, P));

    KahanSum arch;
    LogCombination fin;
    std::map<Integer, LogValue> by_prime;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            Certified lam = neron_lambda(L, zs[i] - zs[j]);
            arch.add(2 * lam.value);
            out.err += 2 * lam.err;

            Point D = C.sub(Z[i], Z[j]);
            for (const Integer& p : height_support(C, D)) {
                LogValue v = neron_lambda_nonarch(C, reduction_type(C, p), D);
                if (v.is_zero()) continue;
                by_prime[p] += Rational(2) * v;
            }
        }
    Rational inv(1, Integer(N) * Integer(N));
    KahanSum total;
    out.arch = arch.value() / (Real(static_cast<double>(N)) * Real(static_cast<double>(N)));
    total.add(out.arch);
    for (auto& [p, v] : by_prime) {
        out.finite[p] = inv * v;
        total.add(out.finite[p].to_real());
    }
    out.total = total.value();
    return out;
}

}  // namespace neron
