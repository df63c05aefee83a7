#pragma once

// Exact arithmetic for Weierstrass curves over Q: invariants, reduction
// classification at the bad primes, the group law, torsion detection, and
// the logarithmic Weil height.
//
// Models are required to be integral, globally minimal (checked only through
// the necessary criterion ord_p(c4) >= 4 && ord_p(Delta) >= 12), and
// semistable: a prime with ord_p(Delta) > 0 and ord_p(c4) > 0 is rejected.

#include "neron/errors.hpp"
#include "neron/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace neron {

enum class ReductionKind { Good, Multiplicative };

struct BadPrime {
    Integer p;
    int ord_disc = 0;
    int ord_c4 = 0;  // valuation of c4; 0 for multiplicative reduction
    ReductionKind kind = ReductionKind::Multiplicative;
};

struct Point {
    bool infinity = true;
    Rational x = 0, y = 0;

    static Point identity() { return Point{}; }
    static Point affine(Rational px, Rational py) {
        Point pt;
        pt.infinity = false;
        pt.x = std::move(px);
        pt.y = std::move(py);
        return pt;
    }
    bool operator==(const Point& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

class Curve {
public:
    Rational a1, a2, a3, a4, a6;
    Rational b2, b4, b6, b8;
    Rational c4, c6;
    Rational disc;  // discriminant
    Rational j;     // j-invariant
    std::vector<BadPrime> bad_primes;

    bool is_on_curve(const Point& P) const {
        if (P.infinity) return true;
        Rational lhs = P.y * P.y + a1 * P.x * P.y + a3 * P.y;
        Rational rhs = P.x * P.x * P.x + a2 * P.x * P.x + a4 * P.x + a6;
        return lhs == rhs;
    }

    void require_on_curve(const Point& P) const {
        if (!is_on_curve(P)) throw PointNotOnCurveError("point does not satisfy the curve equation");
    }

    Point neg(const Point& P) const {
        require_on_curve(P);
        if (P.infinity) return P;
        return Point::affine(P.x, -P.y - a1 * P.x - a3);
    }

    Point add(const Point& P, const Point& Q) const {
        require_on_curve(P);
        require_on_curve(Q);
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        if (P.x == Q.x) {
            // vertical line or tangent
            if (P.y != Q.y || neg(P) == Q) return Point::identity();
        }
        Rational lam, nu;
        if (P.x == Q.x) {
            Rational den = 2 * P.y + a1 * P.x + a3;
            lam = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / den;
            nu = (-P.x * P.x * P.x + a4 * P.x + 2 * a6 - a3 * P.y) / den;
        } else {
            lam = (Q.y - P.y) / (Q.x - P.x);
            nu = P.y - lam * P.x;
        }
        Rational x3 = lam * lam + a1 * lam - a2 - P.x - Q.x;
        Rational y3 = -(lam + a1) * x3 - nu - a3;
        return Point::affine(x3, y3);
    }

    Point sub(const Point& P, const Point& Q) const { return add(P, neg(Q)); }

    Point mul(Integer n, const Point& P) const {
        Point base = P;
        if (n < 0) {
            base = neg(base);
            n = -n;
        }
        Point acc = Point::identity();
        while (n > 0) {
            if (n % 2 == 1) acc = add(acc, base);
            base = add(base, base);
            n /= 2;
        }
        return acc;
    }
};

// Builds a curve from integral coefficients, computing invariants exactly
// and classifying reduction at every prime dividing the discriminant.
inline Curve make_curve(const Rational& a1, const Rational& a2, const Rational& a3,
                        const Rational& a4, const Rational& a6) {
    for (const Rational* a : {&a1, &a2, &a3, &a4, &a6})
        if (denominator(*a) != 1)
            throw NotIntegralError("coefficients must be integers (integral minimal model required)");

    Curve C;
    C.a1 = a1; C.a2 = a2; C.a3 = a3; C.a4 = a4; C.a6 = a6;
    C.b2 = a1 * a1 + 4 * a2;
    C.b4 = 2 * a4 + a1 * a3;
    C.b6 = a3 * a3 + 4 * a6;
    C.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    C.c4 = C.b2 * C.b2 - 24 * C.b4;
    C.c6 = -C.b2 * C.b2 * C.b2 + 36 * C.b2 * C.b4 - 216 * C.b6;
    C.disc = -C.b2 * C.b2 * C.b8 - 8 * C.b4 * C.b4 * C.b4 - 27 * C.b6 * C.b6 + 9 * C.b2 * C.b4 * C.b6;
    if (C.disc == 0) throw SingularCurveError("discriminant is zero");
    C.j = C.c4 * C.c4 * C.c4 / C.disc;

    // c4^3 - c6^2 = 1728 disc is an identity of the construction; guard it.
    if (C.c4 * C.c4 * C.c4 - C.c6 * C.c6 != 1728 * C.disc)
        throw Error("internal error: invariant relation failed");

    const Integer D = numerator(C.disc);
    const Integer c4n = numerator(C.c4);
    for (const auto& [p, e] : factorize(D)) {
        BadPrime bp;
        bp.p = p;
        bp.ord_disc = e;
        bp.ord_c4 = (c4n == 0) ? 1 << 20 : ord_p(c4n, p);
        if (bp.ord_c4 >= 4 && bp.ord_disc >= 12)
            throw NonMinimalModelError("model is not minimal at p=" + p.str());
        if (bp.ord_c4 > 0)
            throw NonSemistableError("additive reduction at p=" + p.str() +
                                     " (semistable model required)");
        bp.kind = ReductionKind::Multiplicative;
        C.bad_primes.push_back(bp);
    }
    return C;
}

// Exact order of P if it is at most 12 (the uniform torsion bound over Q),
// otherwise nullopt and the point is treated as non-torsion.
inline std::optional<int> torsion_order(const Curve& C, const Point& P) {
    C.require_on_curve(P);
    Point acc = Point::identity();
    for (int m = 1; m <= 12; ++m) {
        acc = C.add(acc, P);
        if (acc.infinity) return m;
    }
    return std::nullopt;
}

// Logarithmic absolute Weil height of a rational number: log max(|m|, |n|)
// for alpha = m/n in lowest terms, with h(0) = 0.
inline Real weil_height(const Rational& alpha) {
    Integer m = abs(numerator(alpha)), n = denominator(alpha);
    Integer mx = m > n ? m : n;
    if (mx <= 1) return Real(0);
    return log(to_real(mx));
}

// --- parsing helpers used by the CLI and by tests ---

inline Rational parse_rational(const std::string& s) {
    Rational r;
    try {
        r = Rational(s);
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational: '" + s + "'");
    }
    // the string constructor performs no canonicalization at all
    if (denominator(r) == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_canonicalize(r.backend().data());
    return r;
}

// "a1,a2,a3,a4,a6"
inline Curve parse_curve(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') { parts.push_back(cur); cur.clear(); }
        else if (!isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    parts.push_back(cur);
    if (parts.size() != 5) throw ParseError("curve must be 'a1,a2,a3,a4,a6'");
    return make_curve(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                      parse_rational(parts[3]), parse_rational(parts[4]));
}

// "x,y" in lowest terms, or the literal "O"
inline Point parse_point(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "O" || t == "o") return Point::identity();
    auto comma = t.find(',');
    if (comma == std::string::npos) throw ParseError("point must be 'x,y' or 'O'");
    return Point::affine(parse_rational(t.substr(0, comma)), parse_rational(t.substr(comma + 1)));
}

inline std::string point_to_string(const Point& P) {
    if (P.infinity) return "O";
    return P.x.str() + "," + P.y.str();
}

}  // namespace neron
