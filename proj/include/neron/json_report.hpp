#pragma once

// JSON renderings of the report structures.  Requires nlohmann/json on the
// include path (vendored as json.hpp).

#include "neron/bounds.hpp"
#include "neron/global.hpp"
#include "neron/heights.hpp"
#include "neron/verify.hpp"

#include <json.hpp>

#include <string>

namespace neron {

using json = nlohmann::json;

inline json to_json(const LogValue& v) {
    return json{{"coeff_num", numerator(v.coeff).str()},
                {"coeff_den", denominator(v.coeff).str()},
                {"prime", v.prime.str()}};
}

inline json to_json(const PlaceReport& pr, std::size_t N) {
    if (pr.archimedean) {
        return json{{"place", "arch"},
                    {"N", N},
                    {"D_direct", static_cast<double>(pr.D_direct)},
                    {"D_parseval", static_cast<double>(pr.D_parseval)},
                    {"Lambda_v", static_cast<double>(pr.Lambda_v)},
                    {"err_bound", static_cast<double>(pr.err)}};
    }
    return json{{"place", pr.p.str()},
                {"p", pr.p.str()},
                {"kind", pr.kind == ReductionKind::Good ? "good" : "multiplicative"},
                {"nu", pr.nu},
                {"D", static_cast<double>(pr.D)},
                {"Lambda_v", static_cast<double>(pr.Lambda_v)},
                {"D_i", static_cast<double>(pr.D_i.to_real())},
                {"D_j", static_cast<double>(pr.D_j.to_real())},
                {"D_exact", to_json(pr.D_exact)},
                {"D_i_exact", to_json(pr.D_i)},
                {"D_j_exact", to_json(pr.D_j)}};
}

inline json to_json(const Curve& C, const std::vector<Point>& Z, const GlobalReport& rep) {
    json places = json::array();
    for (const auto& pr : rep.places) places.push_back(to_json(pr, rep.N));
    json zs = json::array();
    for (const Point& P : Z) zs.push_back(point_to_string(P));
    return json{{"curve", C.a1.str() + "," + C.a2.str() + "," + C.a3.str() + "," + C.a4.str() +
                              "," + C.a6.str()},
                {"Z", zs},
                {"N", rep.N},
                {"hhat", static_cast<double>(rep.hhat)},
                {"Lambda", static_cast<double>(rep.Lambda)},
                {"D_global", static_cast<double>(rep.D_global)},
                {"err_bound", static_cast<double>(rep.err)},
                {"rhs", static_cast<double>(rep.rhs)},
                {"slack", static_cast<double>(rep.slack)},
                {"places", places}};
}

inline json to_json(const HeightBreakdown& bd) {
    json finite = json::array();
    for (const auto& [p, v] : bd.finite)
        finite.push_back(json{{"p", p.str()},
                              {"lambda", static_cast<double>(v.to_real())},
                              {"lambda_exact", to_json(v)}});
    return json{{"hhat", static_cast<double>(bd.total)},
                {"lambda_arch", static_cast<double>(bd.arch)},
                {"err_bound", static_cast<double>(bd.err)},
                {"finite_places", finite}};
}

inline json to_json(const TorsionOrbitReport& rep) {
    json places = json::array();
    for (const auto& pr : rep.finite_places) places.push_back(to_json(pr, rep.N));
    json skipped = json::array();
    for (const auto& p : rep.skipped_primes) skipped.push_back(p.str());
    return json{{"m", rep.m},
                {"N", rep.N},
                {"D_arch", static_cast<double>(rep.D_arch)},
                {"arch_err", static_cast<double>(rep.arch_err)},
                {"D_lower", static_cast<double>(rep.D_lower)},
                {"rhs", static_cast<double>(rep.rhs)},
                {"slack", static_cast<double>(rep.slack)},
                {"skipped_primes", skipped},
                {"places", places}};
}

inline json to_json(const BoundsTriple<Rational>& b) {
    return json{{"torsion_bound", b.torsion_bound.str()},
                {"liminf_bound", b.liminf_bound.str()},
                {"min_height_bound", b.min_height_bound.str()},
                {"torsion_bound_real", static_cast<double>(to_real(b.torsion_bound))},
                {"liminf_bound_real", static_cast<double>(to_real(b.liminf_bound))},
                {"min_height_bound_real", static_cast<double>(to_real(b.min_height_bound))}};
}

inline json to_json(const BoundsTriple<Real>& b) {
    return json{{"torsion_bound", static_cast<double>(b.torsion_bound)},
                {"liminf_bound", static_cast<double>(b.liminf_bound)},
                {"min_height_bound", static_cast<double>(b.min_height_bound)}};
}

inline json to_json(const NamedCheck& c) {
    return json{{"name", c.name}, {"passed", c.passed}, {"margin", static_cast<double>(c.margin)}};
}

}  // namespace neron
