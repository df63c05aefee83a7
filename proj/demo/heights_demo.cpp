// Computes canonical heights of the first few multiples of a generator and
// the global discrepancy report for the set, printing a compact summary.

#include "neron/neron.hpp"

#include <cstdio>
#include <vector>

using namespace neron;

int main() {
    set_precision_bits(160);

    // y^2 + y = x^3 - x, rank one with generator (0, 0)
    Curve C = make_curve(0, 0, 1, -1, 0);
    TauLattice L = period_tau(C);
    Point G = Point::affine(0, 0);

    std::printf("curve: disc = %s, j = %s\n", C.disc.str().c_str(), C.j.str().c_str());
    std::printf("tau = %.12f + %.12f i\n\n", static_cast<double>(L.a), static_cast<double>(L.b));

    std::vector<Point> Z;
    for (int k = 1; k <= 8; ++k) {
        Point P = C.mul(k, G);
        Z.push_back(P);
        Real h = canonical_height(C, L, P);
        OracleHeight o = canonical_height_oracle(C, P, 6);
        std::printf("hhat(%dG) = %.12f   doubling oracle: %.12f\n", k,
                    static_cast<double>(h), static_cast<double>(o.value));
    }

    GlobalReport rep = global_discrepancy(C, L, Z);
    std::printf("\nN = %zu points:\n", rep.N);
    std::printf("  average height  = %.12f\n", static_cast<double>(rep.hhat));
    std::printf("  global D        = %.12f\n", static_cast<double>(rep.D_global));
    std::printf("  height bound    = %.12f\n", static_cast<double>(rep.rhs));
    std::printf("  slack           = %.12f\n", static_cast<double>(rep.slack));
    for (const auto& pl : rep.places) {
        if (pl.archimedean)
            std::printf("  place arch: D = %.12f (direct %.12f / parseval %.12f)\n",
                        static_cast<double>(pl.D), static_cast<double>(pl.D_direct),
                        static_cast<double>(pl.D_parseval));
        else
            std::printf("  place %s: D = %.12f (D_i %.10f, D_j %.10f)\n", pl.p.str().c_str(),
                        static_cast<double>(pl.D), static_cast<double>(pl.D_i.to_real()),
                        static_cast<double>(pl.D_j.to_real()));
    }
    return 0;
}
