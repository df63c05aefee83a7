#pragma once

// Per-prime reduction data and the retraction onto the skeleton.
//
// At a multiplicative prime the component index of a point with singular
// reduction is read off valuations: n = min(ord_p(2y + a1 x + a3), nu/2).
// Valuations cannot see the sign of the index, so retractions are reported
// folded into [0, 1/2]; everything downstream consumes them through the
// periodic even function B2, which is insensitive to the fold.

#include "neron/curve.hpp"
#include "neron/errors.hpp"
#include "neron/logvalue.hpp"
#include "neron/numeric.hpp"

namespace neron {

struct PlaceData {
    Integer p;
    ReductionKind kind = ReductionKind::Good;
    int nu = 0;             // ord_p(disc) = -ord_p(j) for multiplicative reduction
    LogValue logplus_j;     // nu * log p

    bool multiplicative() const { return kind == ReductionKind::Multiplicative; }
};

inline PlaceData reduction_type(const Curve& C, const Integer& p) {
    PlaceData d;
    d.p = p;
    for (const BadPrime& bp : C.bad_primes) {
        if (bp.p == p) {
            d.kind = ReductionKind::Multiplicative;
            d.nu = bp.ord_disc;
            d.logplus_j = LogValue(Rational(d.nu), p);
            return d;
        }
    }
    d.kind = ReductionKind::Good;
    d.nu = 0;
    d.logplus_j = LogValue::zero();
    return d;
}

struct RetractionValue {
    Rational value = 0;  // in [0, 1/2], denominator dividing nu
};

// min(t - [t], 1 - (t - [t])): the fold of a circle point into [0, 1/2]
inline Rational fold_circle(const Rational& t) {
    Rational f = frac_part(t);
    return f <= Rational(1, 2) ? f : 1 - f;
}

namespace detail {

// P affine with p-integral coordinates: does P reduce to the singular point?
inline bool reduces_to_singular_point(const Curve& C, const Integer& p, const Point& P) {
    Rational fy = 2 * P.y + C.a1 * P.x + C.a3;
    Rational fx = C.a1 * P.y - 3 * P.x * P.x - 2 * C.a2 * P.x - C.a4;
    bool fy0 = fy == 0 || ord_p(fy, p) >= 1;
    bool fx0 = fx == 0 || ord_p(fx, p) >= 1;
    return fy0 && fx0;
}

}  // namespace detail

// Image of P on the skeleton R/Z, folded into [0, 1/2].
inline RetractionValue retraction(const Curve& C, const PlaceData& place, const Point& P) {
    RetractionValue r;
    if (!place.multiplicative() || P.infinity) return r;
    C.require_on_curve(P);
    if (P.x != 0 && ord_p(P.x, place.p) < 0) return r;  // kernel of reduction
    if (!detail::reduces_to_singular_point(C, place.p, P)) return r;

    Rational w = 2 * P.y + C.a1 * P.x + C.a3;
    long cap = place.nu / 2;
    long n = cap;
    if (w != 0) {
        long v = ord_p(w, place.p);
        n = v < cap ? v : cap;
    }
    r.value = Rational(n, place.nu);
    return r;
}

}  // namespace neron
