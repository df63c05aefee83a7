#pragma once

// Bundled verification sweeps: the exact-identity corpus, the appendix
// sample checks, and the height-discrepancy inequality instances.  The CLI
// `verify` subcommand and the acceptance suite both run these.

#include "neron/appendix.hpp"
#include "neron/global.hpp"
#include "neron/neron_nonarch.hpp"

#include <string>
#include <vector>

namespace neron {

struct NamedCheck {
    std::string name;
    bool passed = false;
    Real margin = 0;  // context-dependent: slack, worst margin, ...
};

// ---------------------------------------------------------------------------
// Exact pair-sum identity corpus: two reference curves, the good primes
// 2, 3, 5 and the bad prime of each, point sets of sizes 1..10.

struct IdentityCorpus {
    long instances = 0;
    long failures = 0;
    bool passed() const { return instances > 0 && failures == 0; }
};

inline IdentityCorpus run_identity_corpus() {
    IdentityCorpus res;

    auto run = [&](const Curve& C, const std::vector<std::vector<Point>>& sets) {
        std::vector<Integer> primes{2, 3, 5};
        for (const BadPrime& bp : C.bad_primes) primes.push_back(bp.p);
        for (const Integer& p : primes) {
            PlaceData pd = reduction_type(C, p);
            for (const auto& Z : sets) {
                ++res.instances;
                if (!elkiesna_check(C, pd, Z).ok) ++res.failures;
            }
        }
    };

    {
        Curve C = make_curve(0, 0, 1, -1, 0);
        Point G = Point::affine(0, 0);
        std::vector<std::vector<Point>> sets;
        std::vector<Point> Z{Point::identity()};
        sets.push_back(Z);
        for (int k = 1; k <= 9; ++k) {
            Z.push_back(C.mul(k, G));
            sets.push_back(Z);
        }
        run(C, sets);
    }
    {
        Curve C = make_curve(0, -1, 1, 0, 0);
        Point T = Point::affine(0, 0);
        std::vector<std::vector<Point>> sets;
        std::vector<Point> Z;
        for (int k = 0; k < 5; ++k) {
            Z.push_back(C.mul(k, T));
            sets.push_back(Z);
        }
        run(C, sets);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Appendix estimates

struct AppendixSuite {
    std::vector<NamedCheck> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

inline AppendixSuite run_appendix_suite(unsigned seed = 20240901, long grid_samples = 1000,
                                        long pointwise_samples = 1000) {
    AppendixSuite suite;

    {
        NamedCheck c{"t0-root-bracket-exact"};
        auto [lo, hi] = t0_root_bracket();
        c.passed = (lo == Rational(1, 250) && hi == Rational(1, 249));
        c.margin = 0;
        suite.checks.push_back(c);
    }
    {
        auto r = jinv_lemma_check(grid_samples, 20.0, seed);
        suite.checks.push_back({r.lemma_id, r.passed, r.worst_margin});
    }
    {
        std::vector<TauLattice> lattices{period_tau(make_curve(0, 0, 1, -1, 0)),
                                         period_tau(make_curve(0, -1, 1, 0, 0))};
        std::vector<Real> ts{Real(1), Real(1) / 10, Real(1) / 100, Real(1) / 1000,
                             Real(1) / 10000};
        auto r = smoothed_origin_bound_check(lattices, ts);
        suite.checks.push_back({r.lemma_id, r.passed, r.worst_margin});
    }
    {
        TauLattice L = TauLattice::from_tau(CNum(Real(0), Real(1)));
        auto r = heat_positivity_and_domination_check(L, pointwise_samples / 2, seed + 1);
        NamedCheck c{r.lemma_id + "-square", r.passed, r.worst_margin};
        // require g_t >= -1e-6 specifically
        c.passed = c.passed && r.worst_margin >= -Real("1e-6");
        suite.checks.push_back(c);

        TauLattice Lc = period_tau(make_curve(0, 0, 1, -1, 0));
        auto r2 = heat_positivity_and_domination_check(Lc, pointwise_samples / 2, seed + 2);
        NamedCheck c2{r2.lemma_id + "-curve", r2.passed && r2.worst_margin >= -Real("1e-6"),
                      r2.worst_margin};
        suite.checks.push_back(c2);
    }
    {
        bool ok = true;
        Real worst = 0;
        bool first = true;
        for (CNum tau : {CNum(Real(0), Real(1)), CNum(Real(1) / 2, sqrt(Real(3)) / 2),
                         CNum(Real(1) / 2, Real(2))}) {
            auto r = lattice_count_check(TauLattice::from_tau(tau), 10000.0);
            ok = ok && r.passed;
            if (first || r.worst_margin < worst) worst = r.worst_margin;
            first = false;
        }
        suite.checks.push_back({"half-plane-lattice-count", ok, worst});
    }
    suite.checks.push_back({"pair-sum-constant-assembly", smoothing_constant_assembly_exact(),
                            Real(0)});
    return suite;
}

// ---------------------------------------------------------------------------
// Height-discrepancy inequality instances

struct InequalitySuite {
    std::vector<NamedCheck> checks;  // margin = slack
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

inline InequalitySuite run_inequality_suite(const Real& budget = Real("1e-6")) {
    InequalitySuite suite;
    Curve C37 = make_curve(0, 0, 1, -1, 0);
    TauLattice L37 = period_tau(C37);
    Point G = Point::affine(0, 0);

    for (int n : {2, 5, 10, 25}) {
        std::vector<Point> Z;
        for (int k = 1; k <= n; ++k) Z.push_back(C37.mul(k, G));
        GlobalReport rep = global_discrepancy(C37, L37, Z);
        suite.checks.push_back({"multiples-N" + std::to_string(n), rep.slack >= -budget,
                                rep.slack});
    }
    {
        Curve C11 = make_curve(0, -1, 1, 0, 0);
        TauLattice L11 = period_tau(C11);
        Point T = Point::affine(0, 0);
        std::vector<Point> Z;
        for (int k = 0; k < 5; ++k) Z.push_back(C11.mul(k, T));
        GlobalReport rep = global_discrepancy(C11, L11, Z);
        suite.checks.push_back({"five-torsion", rep.slack >= -budget, rep.slack});
    }
    {
        GlobalReport rep = global_discrepancy(C37, L37, {Point::identity()});
        suite.checks.push_back({"identity-singleton", rep.slack >= -budget, rep.slack});
    }
    return suite;
}

}  // namespace neron
