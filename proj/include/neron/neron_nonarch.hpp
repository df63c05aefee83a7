#pragma once

// Non-archimedean Neron functions, the intersection/retraction split of
// pair values, and the exact local discrepancy.
//
// For a minimal semistable model at p:
//   nonsingular reduction:  lambda_p(P) = (1/2) log+|x(P)|_p + (1/12) log+|j|_p
//   singular reduction:     lambda_p(P) = (1/2) B2(r(P)) log+|j|_p
// with log+|j|_p = nu log p.  The extension lambda* assigns the origin the
// value (1/12) nu log p.  Everything here is exact LogValue arithmetic.

#include "neron/curve.hpp"
#include "neron/errors.hpp"
#include "neron/logvalue.hpp"
#include "neron/places.hpp"

#include <numeric>
#include <vector>

namespace neron {

inline LogValue log_plus_abs_x(const Curve& C, const PlaceData& place, const Point& P) {
    C.require_on_curve(P);
    if (P.infinity || P.x == 0) return LogValue::zero();
    int v = ord_p(P.x, place.p);
    if (v >= 0) return LogValue::zero();
    return LogValue(Rational(-v), place.p);
}

inline LogValue neron_lambda_nonarch(const Curve& C, const PlaceData& place, const Point& P) {
    if (P.infinity) throw SingularAtOriginError("lambda_p has a pole at the origin");
    C.require_on_curve(P);

    const bool p_integral_x = P.x == 0 || ord_p(P.x, place.p) >= 0;
    const bool singular =
        place.multiplicative() && p_integral_x && detail::reduces_to_singular_point(C, place.p, P);
    if (singular) {
        Rational r = retraction(C, place, P).value;
        return LogValue(bernoulli_b2_periodic(r) / 2 * place.nu, place.p);
    }
    LogValue v = Rational(1, 2) * log_plus_abs_x(C, place, P);
    if (place.nu > 0) v += Rational(place.nu, 12) * LogValue(1, place.p);
    return v;
}

// lambda* extends lambda_p to the whole curve by (1/12) nu log p at O.
inline LogValue lambda_star(const Curve& C, const PlaceData& place, const Point& P) {
    if (P.infinity) {
        if (place.nu == 0) return LogValue::zero();
        return LogValue(Rational(place.nu, 12), place.p);
    }
    return neron_lambda_nonarch(C, place, P);
}

struct PairSplit {
    LogValue i_star;  // intersection part; nonnegative, zero on the diagonal
    LogValue j_pair;  // retraction part; factors through r(P - Q)
};

inline PairSplit pair_split(const Curve& C, const PlaceData& place, const Point& P, const Point& Q) {
    PairSplit out;
    Point D = C.sub(P, Q);
    if (place.nu > 0)
        out.j_pair = LogValue(bernoulli_b2_periodic(retraction(C, place, D).value) / 2 * place.nu,
                              place.p);
    out.i_star = lambda_star(C, place, D) - out.j_pair;
    if (out.i_star.coeff < 0)
        throw Error("internal error: negative intersection term");
    return out;
}

struct NonarchDiscrepancy {
    LogValue D, D_i, D_j;
};

inline void require_distinct(const std::vector<Point>& Z) {
    for (std::size_t i = 0; i < Z.size(); ++i)
        for (std::size_t j = i + 1; j < Z.size(); ++j)
            if (Z[i] == Z[j]) throw DuplicatePointsError("duplicate points in Z");
}

// D(Z) = (1/N^2) sum_{i,j} lambda*(P_i - P_j), exactly, split as D_i + D_j.
inline NonarchDiscrepancy nonarch_discrepancy(const Curve& C, const PlaceData& place,
                                              const std::vector<Point>& Z) {
    const std::size_t N = Z.size();
    if (N == 0) throw DomainError("empty point set");
    require_distinct(Z);

    NonarchDiscrepancy out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            PairSplit s = pair_split(C, place, Z[i], Z[j]);
            out.D_i += s.i_star;
            out.D_j += s.j_pair;
        }
    Rational inv(1, Integer(N) * Integer(N));
    out.D_i = inv * out.D_i;
    out.D_j = inv * out.D_j;
    out.D = out.D_i + out.D_j;
    if (out.D_i.coeff < 0 || out.D_j.coeff < 0)
        throw Error("internal error: negative local discrepancy part");
    return out;
}

// Fourier-side evaluation of the retraction discrepancy from a list of
// skeleton values: nu log p * sum_{0<|k|<=K} (2 pi k)^{-2} |avg e^{2 pi i k r}|^2,
// with the certified tail bound nu log p / (2 pi^2 K).
struct FourierRetraction {
    Real value;
    Real tail;
};

inline FourierRetraction retraction_discrepancy_fourier(const PlaceData& place,
                                                        const std::vector<Rational>& r_values,
                                                        long K_max) {
    if (place.nu < 1) throw DomainError("needs a multiplicative place");
    if (K_max < 1) throw DomainError("K_max must be positive");
    const std::size_t N = r_values.size();
    if (N == 0) throw DomainError("empty retraction profile");

    const Real nulogp = place.logplus_j.to_real();
    KahanSum acc;
    for (long k = 1; k <= K_max; ++k) {
        Real re = 0, im = 0;
        for (const Rational& r : r_values) {
            Real th = two_pi() * Real(k) * to_real(r);
            re += cos(th);
            im += sin(th);
        }
        Real avg2 = (re * re + im * im) / (Real(static_cast<double>(N)) * Real(static_cast<double>(N)));
        acc.add(avg2 / (two_pi() * two_pi() * Real(k) * Real(k)));
    }
    FourierRetraction out;
    out.value = 2 * nulogp * acc.value();  // +-k pairs
    out.tail = nulogp / (2 * pi() * pi() * Real(K_max));
    return out;
}

// The exact pair-sum identity
//   sum_{i != j} lambda_p(P_i - P_j) = N^2 D(Z) - (N/12) nu log p
// verified with zero tolerance; the left side is evaluated through
// neron_lambda_nonarch directly, independent of the pair_split route that
// produced D(Z).  Also asserts D(Z) >= 0.
struct ExactIdentityResult {
    bool ok = false;
    LogValue lhs, rhs;
    NonarchDiscrepancy disc;
};

inline ExactIdentityResult elkiesna_check(const Curve& C, const PlaceData& place,
                                          const std::vector<Point>& Z) {
    const std::size_t N = Z.size();
    require_distinct(Z);
    ExactIdentityResult res;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            Point D = C.sub(Z[i], Z[j]);
            res.lhs += neron_lambda_nonarch(C, place, D);
        }
    res.disc = nonarch_discrepancy(C, place, Z);
    Rational n2(Integer(N) * Integer(N));
    res.rhs = n2 * res.disc.D;
    if (place.nu > 0)
        res.rhs -= LogValue(Rational(Integer(N), 12) * place.nu, place.p);
    res.ok = (res.lhs == res.rhs) && res.disc.D.coeff >= 0;
    return res;
}

// ---------------------------------------------------------------------------
// Berkovich-ball statistics: partition Z into classes of pairwise
// intersection >= k log p and return the squared class-mass sum
//   D_{i,r} = sum_alpha (N_alpha / N)^2,  r = p^{-k}.

struct BallCounts {
    std::vector<long> counts;   // class sizes
    Rational D_i_r = 0;
};

inline BallCounts ball_counts(const Curve& C, const PlaceData& place, const std::vector<Point>& Z,
                              int k) {
    if (k < 1) throw DomainError("k must be positive");
    const std::size_t N = Z.size();
    require_distinct(Z);

    // union-find over the "pairwise close" relation
    std::vector<std::size_t> parent(N);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            PairSplit s = pair_split(C, place, Z[i], Z[j]);
            if (s.i_star.coeff >= k) parent[find(i)] = find(j);
        }

    std::vector<long> sizes(N, 0);
    for (std::size_t i = 0; i < N; ++i) sizes[find(i)] += 1;
    BallCounts out;
    for (std::size_t i = 0; i < N; ++i)
        if (sizes[i] > 0) {
            out.counts.push_back(sizes[i]);
            out.D_i_r += Rational(Integer(sizes[i]) * Integer(sizes[i]),
                                  Integer(N) * Integer(N));
        }
    return out;
}

}  // namespace neron
