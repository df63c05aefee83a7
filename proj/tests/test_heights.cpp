#include "neron/global.hpp"
#include "neron/heights.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace neron;

TEST_CASE("canonical height vanishes on torsion") {
    set_precision_bits(160);
    {
        Curve C = fixtures::curve11a3();
        TauLattice L = period_tau(C);
        CHECK(canonical_height(C, L, Point::identity()) == 0);
        CHECK(abs(canonical_height(C, L, fixtures::tors11a3())) < Real("1e-8"));
    }
    {
        // order-5 point with singular reduction on the nu = 5 place
        Curve C = fixtures::curve11a1();
        TauLattice L = period_tau(C);
        for (int k = 1; k <= 4; ++k)
            CHECK(abs(canonical_height(C, L, C.mul(k, fixtures::tors11a1()))) < Real("1e-8"));
    }
}

TEST_CASE("canonical height agrees with the doubling oracle") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);
    Point G = fixtures::gen37a();

    Real h = canonical_height(C, L, G);
    OracleHeight o = canonical_height_oracle(C, G, 6);
    CHECK(h > Real(1) / 100);
    CHECK(abs(h - o.value) < Real(1) / 100);

    // oracle quadraticity: hhat(2P) = 4 hhat(P) up to the gap estimates
    OracleHeight o2 = canonical_height_oracle(C, C.mul(2, G), 6);
    CHECK(abs(o2.value - 4 * o.value) < 20 * (o.gap + o2.gap) + Real(1) / 1000);

    // torsion points: terms decrease to zero
    OracleHeight ot = canonical_height_oracle(fixtures::curve11a3(), fixtures::tors11a3(), 6);
    CHECK(abs(ot.value) < Real(1) / 1000);

    CHECK_THROWS_AS(canonical_height_oracle(C, G, 9), CoordinateOverflowError);
}

TEST_CASE("quadraticity and the parallelogram law") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);
    Point G = fixtures::gen37a();
    Real h1 = canonical_height(C, L, G);
    for (int n = 2; n <= 6; ++n) {
        Real hn = canonical_height(C, L, C.mul(n, G));
        CHECK(abs(hn - n * n * h1) < Real("1e-6"));
    }

    Curve C389 = fixtures::curve389a();
    TauLattice L389 = period_tau(C389);
    Point P = fixtures::gen389a_1(), Q = fixtures::gen389a_2();
    Real lhs = canonical_height(C389, L389, C389.add(P, Q)) +
               canonical_height(C389, L389, C389.sub(P, Q));
    Real rhs = 2 * canonical_height(C389, L389, P) + 2 * canonical_height(C389, L389, Q);
    CHECK(abs(lhs - rhs) < Real("1e-6"));
}

TEST_CASE("height breakdown support") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);
    // x(5G) = 1/4: support is {2, 37}
    auto bd = canonical_height_breakdown(C, L, C.mul(5, fixtures::gen37a()));
    CHECK(bd.finite.count(2) == 1);
    CHECK(bd.finite.count(37) == 1);
    CHECK(bd.finite.at(2) == LogValue(1, 2));
}

TEST_CASE("set height") {
    set_precision_bits(160);
    Curve C = fixtures::curve11a3();
    TauLattice L = period_tau(C);
    std::vector<Point> tors{Point::identity(), Point::affine(0, 0), Point::affine(1, 0),
                            Point::affine(1, -1), Point::affine(0, -1)};
    CHECK(abs(set_height(C, L, tors)) < 5 * Real("1e-8"));

    Curve C37 = fixtures::curve37a();
    TauLattice L37 = period_tau(C37);
    Point G = fixtures::gen37a();
    Real h = canonical_height(C37, L37, G);
    CHECK(abs(set_height(C37, L37, {G}) - h) < Real("1e-9"));
    Real h2 = set_height(C37, L37, {G, C37.mul(2, G)});
    CHECK(abs(h2 - Real(5) / 2 * h) < Real("1e-6"));
}

TEST_CASE("lambda pair sums") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);
    Point G = fixtures::gen37a();

    CHECK(lambda_sum(C, L, {G}).total == 0);

    // Z = {P, -P}: Lambda = hhat(2P)/2 = 2 hhat(P)
    Real h1 = canonical_height(C, L, G);
    LambdaSum pm = lambda_sum(C, L, {G, C.neg(G)});
    CHECK(abs(pm.total - 2 * h1) < Real("1e-6"));

    // Lambda(Z) <= 4 hhat(Z), and Lambda = (1/N^2) sum_{i!=j} hhat(P_i - P_j)
    std::vector<Point> Z;
    for (int k = 1; k <= 5; ++k) Z.push_back(C.mul(k, G));
    LambdaSum ls = lambda_sum(C, L, Z);
    Real hz = set_height(C, L, Z);
    CHECK(ls.total <= 4 * hz + Real("1e-9"));

    KahanSum pairs;
    for (std::size_t i = 0; i < Z.size(); ++i)
        for (std::size_t j = 0; j < Z.size(); ++j) {
            if (i == j) continue;
            pairs.add(canonical_height(C, L, C.sub(Z[i], Z[j])));
        }
    Real direct = pairs.value() / 25;
    CHECK(abs(ls.total - direct) < Real("1e-8"));
}

TEST_CASE("global discrepancy of the single identity point") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);
    GlobalReport rep = global_discrepancy(C, L, {Point::identity()});
    REQUIRE(rep.places.size() == 2);
    Real lam1 = lambda_t(L, ArchPoint{}, Real(1), Real("1e-12")).value;
    CHECK(abs(rep.places[0].D - lam1) < Real("1e-10"));
    CHECK(rep.places[1].D_exact == LogValue(Rational(1, 12), 37));
    CHECK(abs(rep.D_global - (lam1 + log(to_real(Integer(37))) / 12)) < Real("1e-10"));
    // slack against h(j)/12 + 16/5 with hhat = 0
    CHECK(rep.slack >= 0);
    CHECK(abs(rep.rhs - (weil_height(C.j) / 12 + Real(16) / 5)) < Real("1e-20"));
}

TEST_CASE("global discrepancy: torsion set and multiples") {
    set_precision_bits(160);
    {
        Curve C = fixtures::curve11a3();
        TauLattice L = period_tau(C);
        std::vector<Point> tors{Point::identity(), Point::affine(0, 0), Point::affine(1, 0),
                                Point::affine(1, -1), Point::affine(0, -1)};
        GlobalReport rep = global_discrepancy(C, L, tors);
        CHECK(abs(rep.hhat) < Real("1e-7"));
        CHECK(rep.slack >= 0);
        CHECK(rep.D_global >= 0);
    }
    {
        Curve C = fixtures::curve37a();
        TauLattice L = period_tau(C);
        Point G = fixtures::gen37a();
        std::vector<Point> Z;
        for (int k = 1; k <= 5; ++k) Z.push_back(C.mul(k, G));
        GlobalReport rep = global_discrepancy(C, L, Z);
        CHECK(rep.slack >= -Real("1e-6"));
        // dual archimedean evaluations agree
        CHECK(abs(rep.places[0].D_direct - rep.places[0].D_parseval) < Real("1e-9"));

        // negation invariance
        std::vector<Point> Zn;
        for (const Point& P : Z) Zn.push_back(C.neg(P));
        GlobalReport repn = global_discrepancy(C, L, Zn);
        CHECK(abs(rep.D_global - repn.D_global) < Real("1e-9"));
    }
}

TEST_CASE("local-global inequality") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);
    Point G = fixtures::gen37a();
    std::vector<Point> Z{Point::identity(), G, C.mul(2, G), C.mul(6, G)};
    CHECK(local_global_check(C, L, Z, std::nullopt));
    CHECK(local_global_check(C, L, Z, Integer(2)));
    CHECK(local_global_check(C, L, Z, Integer(37)));
}

TEST_CASE("torsion orbit mode") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);

    TorsionOrbitReport r2 = torsion_orbit_global(C, L, 2);
    Real lam1 = lambda_t(L, ArchPoint{}, Real(1), Real("1e-12")).value;
    CHECK(abs(r2.D_arch - lam1 / 4) < Real("1e-11"));
    REQUIRE(r2.finite_places.size() == 1);
    CHECK(r2.finite_places[0].D_exact == LogValue(Rational(1, 48), 37));
    CHECK(r2.slack >= 0);
    CHECK(r2.skipped_primes.empty());

    // m^2-scaled lower bound is independent of m (same skipped set)
    TorsionOrbitReport r3 = torsion_orbit_global(C, L, 3);
    CHECK(abs(r2.D_lower * 4 - r3.D_lower * 9) < Real("1e-10"));
    CHECK(r3.slack >= 0);

    // closed form matches the grouped direct double sum
    Certified direct2 = arch_discrepancy_torsion_direct(L, 2);
    CHECK(abs(direct2.value - r2.D_arch) < Real("1e-10"));

    CHECK_THROWS_AS(torsion_orbit_global(C, L, 1), DomainError);

    // a prime dividing m is skipped and the bound stays valid
    Curve C11 = fixtures::curve11a1();
    TauLattice L11 = period_tau(C11);
    TorsionOrbitReport r11 = torsion_orbit_global(C11, L11, 11);
    REQUIRE(r11.skipped_primes.size() == 1);
    CHECK(r11.skipped_primes[0] == 11);
    CHECK(r11.slack >= 0);
}

TEST_CASE("torsion heights vanish on curves with even-nu and a1 != 0") {
    set_precision_bits(160);
    {
        Curve C = fixtures::curve14a1();
        TauLattice L = period_tau(C);
        Point T = fixtures::tors14a1();
        for (int k = 1; k < 6; ++k)
            CHECK(abs(canonical_height(C, L, C.mul(k, T))) < Real("1e-8"));
    }
    {
        Curve C = fixtures::curve15a1();
        TauLattice L = period_tau(C);
        Point T = fixtures::tors15a1();
        auto ord = torsion_order(C, T);
        REQUIRE(ord.has_value());
        for (int k = 1; k < *ord; ++k)
            CHECK(abs(canonical_height(C, L, C.mul(k, T))) < Real("1e-8"));
    }
}

TEST_CASE("heights are stable across working precisions") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    Point P = C.mul(3, fixtures::gen37a());
    Real h160 = canonical_height(C, period_tau(C), P);

    set_precision_bits(256);
    Real h256 = canonical_height(C, period_tau(C), P);
    CHECK(abs(h256 - h160) < Real("1e-40"));
    set_precision_bits(160);
}

TEST_CASE("local-global inequality is strict when other places contribute") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);
    GlobalReport rep = global_discrepancy(C, L, {Point::identity()});
    Real d37 = nonarch_discrepancy(C, reduction_type(C, 37), {Point::identity()}).D.to_real();
    // the archimedean term lambda_1(O) > 0 makes the inequality strict
    Real lam1 = lambda_t(L, ArchPoint{}, Real(1), Real("1e-12")).value;
    CHECK(lam1 > 0);
    CHECK(abs(rep.D_global - d37 - lam1) < Real("1e-10"));
    CHECK(d37 < rep.D_global - lam1 / 2);
}

TEST_CASE("per-place pair sums appear in the report") {
    set_precision_bits(160);
    Curve C = fixtures::curve37a();
    TauLattice L = period_tau(C);
    Point G = fixtures::gen37a();
    std::vector<Point> Z{G, C.mul(2, G), C.mul(3, G)};
    GlobalReport rep = global_discrepancy(C, L, Z);
    LambdaSum ls = lambda_sum(C, L, Z);
    // archimedean entry carries Lambda_v; the sum over places gives Lambda
    CHECK(abs(rep.places[0].Lambda_v - ls.arch) < Real("1e-30"));
    KahanSum lam;
    for (const auto& pl : rep.places) lam.add(pl.Lambda_v);
    // places with Lambda_v != 0 but zero discrepancy do not appear in the
    // report; here every contributing prime does (multiples of one point)
    CHECK(abs(lam.value() - rep.Lambda) < Real("1e-9"));
    // at good places the discrepancy coincides with the pair sum
    for (const auto& pl : rep.places)
        if (!pl.archimedean && pl.kind == ReductionKind::Good)
            CHECK(abs(pl.D - pl.Lambda_v) < Real("1e-30"));
}
