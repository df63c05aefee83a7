// Acceptance suite: end-to-end checks with pinned tolerances and runtime
// budgets.  Prints one PASS/FAIL line per criterion and exits nonzero if
// any of them fails.

#include "neron/neron.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace neron;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string description, double budget_seconds)
        : number_(number), description_(std::move(description)), budget_(budget_seconds) {
        start_ = std::chrono::steady_clock::now();
    }

    void finish(bool passed, const std::string& detail) {
        auto stop = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(stop - start_).count();
        bool in_budget = secs < budget_;
        bool ok = passed && in_budget;
        if (!ok) ++g_failures;
        std::printf("[%s] criterion %d (%6.2f s / %g s budget): %s: %s%s\n",
                    ok ? "PASS" : "FAIL", number_, secs, budget_, description_.c_str(),
                    detail.c_str(), in_budget ? "" : " [over budget]");
        std::fflush(stdout);
    }

private:
    int number_;
    std::string description_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
};

std::string real_str(const Real& x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", static_cast<double>(x));
    return buf;
}

// --- criterion 1 -----------------------------------------------------------

void criterion1() {
    Criterion c(1, "exact nonarchimedean pair-sum identity corpus", 5.0);
    IdentityCorpus corpus = run_identity_corpus();
    c.finish(corpus.passed() && corpus.instances >= 50,
             std::to_string(corpus.instances) + " instances, " +
                 std::to_string(corpus.failures) + " failures (zero tolerance)");
}

// --- criterion 2 -----------------------------------------------------------

void criterion2() {
    Criterion c(2, "archimedean dual-path agreement on random sets", 120.0);
    Curve C = make_curve(0, 0, 1, -1, 0);
    TauLattice L = period_tau(C);
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> dn(2, 50);
    std::uniform_int_distribution<long> dz(0, (1 << 20) - 1);
    bool ok = true;
    Real worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int n = trial == 0 ? 50 : dn(rng);  // pin the stated edge size once
        std::vector<ArchPoint> Z;
        for (int i = 0; i < n; ++i)
            Z.push_back(ArchPoint{Real(dz(rng)) / (1 << 20), Real(dz(rng)) / (1 << 20)});
        Certified d = arch_discrepancy_direct(L, Z);
        Certified p = arch_discrepancy_parseval(L, Z);
        Real combined = d.err + p.err;
        Real diff = abs(d.value - p.value);
        ok = ok && diff <= combined && combined <= Real("1e-9");
        if (diff > worst) worst = diff;
    }
    c.finish(ok, "20 sets (N <= 50), worst |direct - parseval| = " + real_str(worst));
}

// --- criterion 3 -----------------------------------------------------------

void criterion3() {
    Criterion c(3, "height-discrepancy inequality instances", 300.0);
    InequalitySuite s = run_inequality_suite(Real("1e-6"));
    Real min_slack = s.checks.front().margin;
    for (const auto& ch : s.checks)
        if (ch.margin < min_slack) min_slack = ch.margin;
    c.finish(s.passed(), std::to_string(s.checks.size()) +
                             " instances, min slack = " + real_str(min_slack));
}

// --- criterion 4 -----------------------------------------------------------

void criterion4() {
    Criterion c(4, "torsion equidistribution decay", 300.0);
    Curve C = make_curve(0, 0, 1, -1, 0);
    TauLattice L = period_tau(C);
    bool ok = true;
    Real worst = 0;
    for (long m = 2; m <= 5; ++m) {
        Certified direct = arch_discrepancy_torsion_direct(L, m);
        Certified closed = arch_discrepancy_torsion_closed_form(L, m);
        Real diff = abs(direct.value - closed.value);
        if (diff > worst) worst = diff;
        ok = ok && diff <= Real("1e-8");
        TorsionOrbitReport rep = torsion_orbit_global(C, L, m);
        ok = ok && rep.slack >= 0;
    }
    c.finish(ok, "m in {2..5}: worst |direct - lambda_1(O)/m^2| = " + real_str(worst) +
                     ", all slacks >= 0");
}

// --- criterion 5 -----------------------------------------------------------

void criterion5() {
    Criterion c(5, "canonical height consistency", 300.0);
    bool ok = true;
    Real worst_oracle = 0, worst_quad = 0;

    struct Probe {
        Curve C;
        Point P;
    };
    std::vector<Probe> probes;
    {
        Curve C = make_curve(0, 0, 1, -1, 0);
        Point G = Point::affine(0, 0);
        for (int k = 1; k <= 5; ++k) probes.push_back({C, C.mul(k, G)});
    }
    {
        Curve C = make_curve(0, 0, 1, 1, 0);
        Point G = Point::affine(0, 0);
        for (int k = 1; k <= 3; ++k) probes.push_back({C, C.mul(k, G)});
    }
    {
        Curve C = make_curve(0, 1, 1, -2, 0);
        Point G1 = Point::affine(0, 0), G2 = Point::affine(1, 0);
        probes.push_back({C, C.add(G1, G2)});
        probes.push_back({C, C.sub(C.mul(2, G1), G2)});
    }

    for (const Probe& pr : probes) {
        TauLattice L = period_tau(pr.C);
        Real h = canonical_height(pr.C, L, pr.P);
        OracleHeight o = canonical_height_oracle(pr.C, pr.P, 6);
        Real diff = abs(h - o.value);
        if (diff > worst_oracle) worst_oracle = diff;
        ok = ok && diff <= Real(1) / 100;

        Real h2 = canonical_height(pr.C, L, pr.C.mul(2, pr.P));
        Real quad = abs(h2 - 4 * h);
        if (quad > worst_quad) worst_quad = quad;
        ok = ok && quad <= Real("1e-6");
    }

    // order-5 torsion point has height 0
    Curve C11 = make_curve(0, -1, 1, 0, 0);
    TauLattice L11 = period_tau(C11);
    Real ht = abs(canonical_height(C11, L11, Point::affine(0, 0)));
    ok = ok && ht <= Real("1e-8");

    c.finish(ok, std::to_string(probes.size()) + " points: worst |local sum - oracle| = " +
                     real_str(worst_oracle) + ", worst |h(2P) - 4 h(P)| = " +
                     real_str(worst_quad) + ", torsion height = " + real_str(ht));
}

// --- criterion 6 -----------------------------------------------------------

void criterion6() {
    Criterion c(6, "appendix estimate suite", 120.0);
    AppendixSuite s = run_appendix_suite(20240901, 1000, 1000);
    std::string detail;
    for (const auto& ch : s.checks) {
        if (!detail.empty()) detail += ", ";
        detail += ch.name + (ch.passed ? ":ok" : ":FAIL");
    }
    c.finish(s.passed(), detail);
}

// --- criterion 7 -----------------------------------------------------------

void criterion7() {
    Criterion c(7, "real-locus discrepancy lower bound", 120.0);
    bool ok = true;
    Real worst = 1;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> dr(0, (1 << 20) - 1);
    std::uniform_int_distribution<int> dhalf(0, 1);

    int set_count = 0;
    std::vector<CNum> taus{CNum(Real(0), Real(1)), CNum(Real(1) / 2, Real(1))};
    std::vector<unsigned> sizes{5, 10, 20};
    for (int rep = 0; set_count < 10; ++rep) {
        for (const CNum& tau : taus) {
            for (unsigned N : sizes) {
                if (set_count >= 10) break;
                TauLattice L = TauLattice::from_tau(tau);
                // points with Re(z) in {0, 1/2}: r1 = Re - a r2 mod 1
                std::vector<ArchPoint> Z;
                while (Z.size() < N) {
                    Real r2 = Real(dr(rng)) / (1 << 20);
                    Real re = Real(dhalf(rng)) / 2;
                    ArchPoint z = ArchPoint::reduced(re - L.a * r2, r2);
                    bool dup = false;
                    for (const auto& w : Z)
                        if ((w - z).is_lattice_point(Real("1e-12"))) dup = true;
                    if (!dup) Z.push_back(z);
                }
                Certified D = arch_discrepancy_parseval(L, Z);
                Real bound = real_points_lower_bound(N, L);
                Real margin = D.value - bound;
                if (margin < worst) worst = margin;
                ok = ok && margin >= -Real("1e-9");
                ++set_count;
            }
        }
    }
    c.finish(ok, "10 sets at tau = i and 1/2 + i, min (D - bound) = " + real_str(worst));
}

// --- criterion 8 -----------------------------------------------------------

void criterion8() {
    Criterion c(8, "congruence-class mass inequality at good primes", 120.0);
    Curve C = make_curve(0, 0, 1, -1, 0);
    Point G = Point::affine(0, 0);
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> dk(-20, 20);
    std::uniform_int_distribution<int> dn(6, 12);
    bool ok = true;
    Real worst = 1;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> Z;
        int n = dn(rng);
        while (static_cast<int>(Z.size()) < n) {
            int k = dk(rng);
            if (k == 0) continue;
            Point P = C.mul(k, G);
            bool dup = false;
            for (const auto& q : Z) dup = dup || q == P;
            if (!dup) Z.push_back(P);
        }
        for (Integer p : {Integer(2), Integer(3), Integer(5)}) {
            PlaceData pd = reduction_type(C, p);
            auto disc = nonarch_discrepancy(C, pd, Z);
            for (int k = 1; k <= 3; ++k) {
                auto bc = ball_counts(C, pd, Z, k);
                Real margin = disc.D_i.to_real() / (k * log(to_real(p))) +
                              Real(1) / Real(static_cast<double>(Z.size())) -
                              to_real(bc.D_i_r);
                if (margin < worst) worst = margin;
                ok = ok && margin >= -Real("1e-12");
            }
        }
    }
    c.finish(ok, "20 sets x p in {2,3,5} x k in {1,2,3}, min margin = " + real_str(worst));
}

// --- criterion 9 -----------------------------------------------------------

void criterion9() {
    Criterion c(9, "explicit bound calculators", 120.0);
    bool ok = true;

    auto tr = totally_real_bounds(0);
    ok = ok && tr.torsion_bound == 300 && tr.liminf_bound == Rational(1, 240) &&
         tr.min_height_bound == Rational(1, 21600000);
    auto cyc = cyclotomic_bounds(0);
    ok = ok && cyc.torsion_bound == 360000 && cyc.liminf_bound == Rational(1, 960) &&
         cyc.min_height_bound == Rational(1, 86400000);

    long scan_violations = 0;
    for (double A : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        for (double B : {0.0, 1.0, 5.0, 20.0, 100.0}) {
            Real core = Real(A) * log(Real(A)) + Real(B);
            if (!(core > 0)) continue;
            Real bound = solve_nlogn(Real(A), Real(B));
            long worst_n = nlogn_scan_max(Real(A), Real(B), 1000000);
            if (Real(worst_n) > bound) ++scan_violations;
            if (!(bound < Real(8) / 5 * core)) ++scan_violations;
        }
    }
    ok = ok && scan_violations == 0;

    bool bitexact = true;
    for (Integer p : {Integer(3), Integer(5), Integer(37)}) {
        for (int nu : {0, 1, 5}) {
            auto a = totally_padic_bounds(Real(7) / 2, p, nu);
            auto b = totally_padic_ef_bounds(Real(7) / 2, p, nu, 1, 1);
            bitexact = bitexact && a.torsion_bound == b.torsion_bound &&
                       a.liminf_bound == b.liminf_bound &&
                       a.min_height_bound == b.min_height_bound;
        }
    }
    ok = ok && bitexact;

    c.finish(ok, "tr/cyc exact, scan to 1e6 clean (" + std::to_string(scan_violations) +
                     " violations), (e,f)=(1,1) bit-exact: " + (bitexact ? "yes" : "no"));
}

}  // namespace

int main() {
    set_precision_bits(160);
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
