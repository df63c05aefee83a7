#pragma once

// Reference curves used across the test suite.  All are integral, globally
// minimal and semistable; generators / torsion points are standard.

#include "neron/curve.hpp"
#include "neron/numeric.hpp"

#include <random>

namespace fixtures {

using neron::Curve;
using neron::Point;
using neron::Rational;

// y^2 + y = x^3 - x: disc 37, rank 1, generator (0,0)
inline Curve curve37a() { return neron::make_curve(0, 0, 1, -1, 0); }
inline Point gen37a() { return Point::affine(0, 0); }

// y^2 + y = x^3 - x^2: disc -11, (0,0) has order 5
inline Curve curve11a3() { return neron::make_curve(0, -1, 1, 0, 0); }
inline Point tors11a3() { return Point::affine(0, 0); }

// y^2 + y = x^3 - x^2 - 10x - 20: disc -11^5, (5,5) has order 5
inline Curve curve11a1() { return neron::make_curve(0, -1, 1, -10, -20); }
inline Point tors11a1() { return Point::affine(5, 5); }

// y^2 + y = x^3 + x: disc -91 (= -7*13), rank 1, generator (0,0)
inline Curve curve91b() { return neron::make_curve(0, 0, 1, 1, 0); }
inline Point gen91b() { return Point::affine(0, 0); }

// y^2 + y = x^3 + x^2 - 2x: disc 389, rank 2, generators (0,0) and (1,0)
inline Curve curve389a() { return neron::make_curve(0, 1, 1, -2, 0); }
inline Point gen389a_1() { return Point::affine(0, 0); }
inline Point gen389a_2() { return Point::affine(1, 0); }

// y^2 + xy + y = x^3 + x^2 - 10x - 10: disc 3^4 5^4
inline Curve curve15a1() { return neron::make_curve(1, 1, 1, -10, -10); }
inline Point tors15a1() { return Point::affine(-2, 3); }

// y^2 + xy + y = x^3 + 4x - 6: disc -2^6 7^3, torsion Z/6 generated by (9,23)
inline Curve curve14a1() { return neron::make_curve(1, 0, 1, 4, -6); }
inline Point tors14a1() { return Point::affine(9, 23); }

inline std::mt19937_64 seeded_rng(unsigned seed = 42) { return std::mt19937_64(seed); }

}  // namespace fixtures
