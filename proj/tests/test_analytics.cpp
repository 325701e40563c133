#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mmis/analytics.hpp"
#include "mmis/clebsch.hpp"
#include "mmis/errors.hpp"

using namespace mmis;
using doctest::Approx;

TEST_CASE("MMIS entanglement closed forms, small SU(2)") {
    auto g = GroupModel::su2();
    CHECK(entanglement_of_formation(g, 2, 1) == Approx(std::log(2)).epsilon(1e-12));
    CHECK(entanglement_of_formation(g, 4, 2) == Approx(0.5 * std::log(3)).epsilon(1e-12));
    CHECK(log_negativity_analytic(g, 2, 1) == Approx(std::log(2)).epsilon(1e-12));
    CHECK(log_negativity_analytic(g, 4, 2) == Approx(std::log(2)).epsilon(1e-12));
    CHECK(entanglement_entropy_A(g, 4, 2) ==
          Approx(std::log(2) + 0.5 * std::log(3)).epsilon(1e-12));
    CHECK(operator_entanglement(g, 2, 1) == Approx(2 * std::log(2)).epsilon(1e-12));
    CHECK(operator_entanglement(g, 4, 2) == Approx(std::log(6)).epsilon(1e-12));
    CHECK_THROWS_AS(entanglement_report(g, 5, 2), EmptySectorError);
}

TEST_CASE("S3 thermodynamic limits") {
    auto g = GroupModel::named("s3");
    double E_lim = 2.0 / 3.0 * std::log(2);
    CHECK(std::abs(entanglement_of_formation(g, 40, 20) - E_lim) < 1e-6);
    CHECK(std::abs(log_negativity_analytic(g, 40, 20) - std::log(5.0 / 3.0)) < 1e-6);
    CHECK(std::abs(entanglement_of_formation(g, 60, 30) - E_lim) < 1e-8);
    CHECK(asymptotic_entanglement_finite_group(g) == Approx(E_lim).epsilon(1e-12));
    // asymptotic operator entanglement: (4/3) log 2 + H[{1/6, 1/6, 2/3}]
    double H = -(std::log(1.0 / 6) / 6 + std::log(1.0 / 6) / 6 + 2 * std::log(2.0 / 3) / 3);
    CHECK(std::abs(operator_entanglement(g, 40, 20) - (4.0 / 3 * std::log(2) + H)) < 1e-5);
}

TEST_CASE("asymptotic values for other finite groups") {
    CHECK(asymptotic_entanglement_finite_group(GroupModel::named("z2")) == 0.0);
    CHECK(asymptotic_entanglement_finite_group(GroupModel::named("z3")) == 0.0);
    // D4: the only d > 1 irrep is killed by its central character
    CHECK(asymptotic_entanglement_finite_group(GroupModel::named("d4")) == 0.0);
    CHECK_THROWS_AS(asymptotic_entanglement_finite_group(GroupModel::su2()), ConfigError);
    CHECK_THROWS_AS(
        asymptotic_entanglement_finite_group(GroupModel::finite(CharacterTable::z2(), "triv")),
        ConfigError);
}

TEST_CASE("entanglement hierarchy and operator-entanglement identity") {
    struct Case {
        const char* id;
        long N, cut;
    };
    for (auto [id, N, cut] : {Case{"su2", 12, 6}, Case{"su2", 12, 3}, Case{"s3", 14, 7},
                              Case{"d4", 12, 6}, Case{"su3", 12, 6}, Case{"su3", 12, 4}}) {
        auto g = GroupModel::named(id);
        auto r = entanglement_report(g, N, cut);
        CHECK(r.E <= r.E_neg + 1e-12);
        CHECK(r.E <= r.S_A + 1e-12);
        CHECK(r.H_p >= -1e-12);
        // recompute the classical term of O from scratch
        auto dist = irrep_distribution(g, cut, N - cut);
        double extra = 0;
        for (const auto& e : dist.entries)
            extra += to_double(e.prob) *
                     (log_big(dist.C_inv) - log_big(e.mult_a) - log_big(e.mult_b));
        CHECK(r.O_op == Approx(2 * r.E + extra).epsilon(1e-10));
    }
}

TEST_CASE("abelian groups are separable") {
    for (const char* id : {"z2", "z3"}) {
        auto g = GroupModel::named(id);
        for (long N = 2; N <= 12; ++N) {
            if (multiplicity(g, trivial_irrep(g), N) == 0) continue;
            for (long cut = 0; cut <= N; ++cut) {
                auto r = entanglement_report(g, N, cut);
                CHECK(r.E == 0.0);
                CHECK(r.E_neg == 0.0);
                CHECK(r.O_op == 0.0);
            }
        }
    }
}

TEST_CASE("swap symmetry of the bipartition") {
    for (const char* id : {"su2", "s3", "su3"}) {
        auto g = GroupModel::named(id);
        auto a = entanglement_report(g, 12, 4);
        auto b = entanglement_report(g, 12, 8);
        CHECK(a.E == Approx(b.E).epsilon(1e-12));
        CHECK(a.E_neg == Approx(b.E_neg).epsilon(1e-12));
        CHECK(a.O_op == Approx(b.O_op).epsilon(1e-12));
        CHECK(a.H_p == Approx(b.H_p).epsilon(1e-12));
    }
}

TEST_CASE("MPDO bounds") {
    auto b = mpdo_bounds(GroupModel::su2(), 2, 1);
    CHECK(b.D == Approx(4.0).epsilon(1e-12));
    CHECK(b.lower == Approx(2.0).epsilon(1e-12));
    CHECK(b.upper == Approx(5.0).epsilon(1e-12));
    // finite non-Abelian group: D constant in N
    auto s3 = GroupModel::named("s3");
    CHECK(std::abs(mpdo_bounds(s3, 40, 20).D - mpdo_bounds(s3, 20, 10).D) < 1e-3);
    // SU(3): log D grows ~ ((d^2-1)/2) log N, i.e. 4 ln 2 per doubling
    auto su3 = GroupModel::sud(3);
    double diff = std::log(mpdo_bounds(su3, 120, 60).D) - std::log(mpdo_bounds(su3, 60, 30).D);
    CHECK(std::abs(diff - 4 * std::log(2)) < 0.6);
}

TEST_CASE("reduced spectrum and local indistinguishability") {
    // k = 1 reduction is always exactly maximally mixed
    for (const char* id : {"su2", "s3", "d4"}) {
        auto g = GroupModel::named(id);
        auto spec = reduced_spectrum(g, 12, 1);
        CHECK(trace_distance_to_identity(g, spec) == 0.0);
    }
    auto su2 = GroupModel::su2();
    auto spec42 = reduced_spectrum(su2, 4, 2);
    CHECK(trace_distance_to_identity(su2, spec42) == Approx(0.25).epsilon(1e-12));
    // eigenvalues {1/2 x1, 1/6 x3}
    REQUIRE(spec42.blocks.size() == 2);
    CHECK(spec42.blocks[0].eigenvalue == Rational(1, 2));
    CHECK(spec42.blocks[0].degeneracy == 1);
    CHECK(spec42.blocks[1].eigenvalue == Rational(1, 6));
    CHECK(spec42.blocks[1].degeneracy == 3);

    // SU(2), k=2: distance falls like 1/N
    double d8 = trace_distance_to_identity(su2, reduced_spectrum(su2, 8, 2));
    double d16 = trace_distance_to_identity(su2, reduced_spectrum(su2, 16, 2));
    double d32 = trace_distance_to_identity(su2, reduced_spectrum(su2, 32, 2));
    CHECK(std::abs(8 * d8 - 16 * d16) / (16 * d16) < 0.2);
    CHECK(std::abs(16 * d16 - 32 * d32) / (32 * d32) < 0.2);

    // S3, k=2: distance falls like 2^{-N}
    auto s3 = GroupModel::named("s3");
    double prev = std::log(trace_distance_to_identity(s3, reduced_spectrum(s3, 8, 2)));
    double slope_sum = 0;
    int count = 0;
    for (long N = 10; N <= 24; N += 2) {
        double cur = std::log(trace_distance_to_identity(s3, reduced_spectrum(s3, N, 2)));
        slope_sum += (cur - prev) / 2;
        prev = cur;
        ++count;
    }
    CHECK(std::abs(slope_sum / count + std::log(2)) < 0.1 * std::log(2));

    // monotone in N for fixed k within a parity class
    for (long N = 8; N + 2 <= 40; N += 2) {
        double a = trace_distance_to_identity(s3, reduced_spectrum(s3, N, 2));
        double b = trace_distance_to_identity(s3, reduced_spectrum(s3, N + 2, 2));
        CHECK(b <= a + 1e-15);
    }
}

TEST_CASE("two-point correlators") {
    auto su2 = GroupModel::su2();
    CHECK(two_point_correlator(su2, 2, CorrelatorKind::Su2SpinSpin) == Approx(-0.75));
    CHECK(two_point_correlator(su2, 5, CorrelatorKind::Su2SpinSpin) == Approx(-3.0 / 16));
    CHECK(two_point_correlator(su2, 6, CorrelatorKind::Su2SpinSpin) == Approx(-0.15));

    auto s3 = GroupModel::named("s3");
    // exact finite-N values; the 6(-1)^{N+1}/2^N form is their large-N limit
    CHECK(two_point_correlator(s3, 4, CorrelatorKind::S3ZZ) == Approx(-1.0 / 3).epsilon(1e-12));
    CHECK(two_point_correlator(s3, 6, CorrelatorKind::S3ZZ) == Approx(-1.0 / 11).epsilon(1e-12));
    for (long N : {20L, 21L}) {
        double exact = two_point_correlator(s3, N, CorrelatorKind::S3ZZ);
        double asymptotic = 6.0 * (N % 2 ? 1 : -1) / std::pow(2.0, N);
        CHECK(std::abs(exact - asymptotic) < 1e-9);
    }
    CHECK(two_point_correlator(s3, 8, CorrelatorKind::S3XXYY) == 0.0);
    CHECK(two_point_correlator(s3, 8, CorrelatorKind::S3ZZQuadratic) == 1.0);
    double q6 = two_point_correlator(s3, 6, CorrelatorKind::S3XXYYQuadratic);
    CHECK(q6 == Approx(2.0 + 12.0 / 66.0).epsilon(1e-12));
    CHECK(std::abs(two_point_correlator(s3, 30, CorrelatorKind::S3XXYYQuadratic) - 2.0) < 1e-7);
    CHECK_THROWS_AS(two_point_correlator(su2, 4, CorrelatorKind::S3ZZ), ConfigError);
    CHECK(parse_correlator_kind("spin-spin") == CorrelatorKind::Su2SpinSpin);
    CHECK_THROWS_AS(parse_correlator_kind("bogus"), ConfigError);
}

TEST_CASE("fidelity correlator") {
    CHECK(fidelity_correlator_su2(4) == Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(fidelity_correlator_su2(40) - 0.375) < 0.02);
    CHECK(std::abs(fidelity_correlator_su2(200) - 0.375) < 0.005);
    CHECK_THROWS_AS(fidelity_correlator_su2(7), EmptySectorError);
}

TEST_CASE("finite temperature entanglement") {
    ThermalSpec inf;
    inf.infinite_T = true;
    inf.N_A = 6;
    inf.N_B = 6;
    CHECK(finite_T_entanglement(inf) ==
          Approx(entanglement_of_formation(GroupModel::su2(), 12, 6)).epsilon(1e-12));

    // T = 4: E saturates as the blocks grow
    auto at = [](double T, long half) {
        ThermalSpec s;
        s.T = T;
        s.N_A = half;
        s.N_B = half;
        return finite_T_entanglement(s);
    };
    CHECK(at(4, 256) - at(4, 128) < 0.02);
    CHECK(at(4, 256) - at(4, 128) < at(4, 64) - at(4, 32));
    CHECK(at(4, 64) >= at(4, 8) - 1e-12);

    // T = N: E keeps growing with log N
    double slope_acc = 0;
    int cnt = 0;
    for (long N : {32L, 64L, 128L}) {
        double hi = at(static_cast<double>(2 * N), N);
        double lo = at(static_cast<double>(N), N / 2);
        slope_acc += (hi - lo) / std::log(2.0);
        ++cnt;
    }
    CHECK(slope_acc / cnt > 0.1);

    ThermalSpec bad;
    bad.T = -1;
    bad.N_A = 4;
    bad.N_B = 4;
    CHECK_THROWS_AS(finite_T_entanglement(bad), ConfigError);
}

TEST_CASE("Clebsch-Gordan coefficients, exact") {
    auto half = [](long a) { return a; };  // arguments already doubled
    auto c = clebsch_gordan(half(1), 1, 1, -1, 0, 0);
    CHECK(c.sign == 1);
    CHECK(c.square == Rational(1, 2));
    auto c2 = clebsch_gordan(1, -1, 1, 1, 0, 0);
    CHECK(c2.sign == -1);
    CHECK(c2.square == Rational(1, 2));
    // <1 0; 1 0 | 2 0> = sqrt(2/3)
    auto c3 = clebsch_gordan(2, 0, 2, 0, 4, 0);
    CHECK(c3.sign == 1);
    CHECK(c3.square == Rational(2, 3));
    // <1 1; 1 -1 | 0 0> = 1/sqrt(3)
    auto c4 = clebsch_gordan(2, 2, 2, -2, 0, 0);
    CHECK(c4.sign == 1);
    CHECK(c4.square == Rational(1, 3));
    // triangle violation and m mismatch are exact zeros
    CHECK(clebsch_gordan(1, 1, 1, 1, 0, 2).sign == 0);
    CHECK(clebsch_gordan(2, 0, 2, 0, 8, 0).sign == 0);
    CHECK_THROWS_AS(clebsch_gordan(1, 2, 1, -1, 0, 1), ConfigError);

    // orthogonality: sum over (m1, m2) of C_{JM} C_{J'M} = delta_{JJ'}
    for (long tJ = 0; tJ <= 4; tJ += 2)
        for (long tJp = 0; tJp <= 4; tJp += 2) {
            double acc = 0;
            for (long tm1 = -2; tm1 <= 2; tm1 += 2)
                for (long tm2 = -2; tm2 <= 2; tm2 += 2) {
                    if (tm1 + tm2 != 0) continue;
                    acc += clebsch_gordan(2, tm1, 2, tm2, tJ, 0).value() *
                           clebsch_gordan(2, tm1, 2, tm2, tJp, 0).value();
                }
            CHECK(acc == Approx(tJ == tJp ? 1.0 : 0.0).epsilon(1e-12));
        }
}

TEST_CASE("(j, m) sector entanglement") {
    auto g = GroupModel::su2();
    for (long N : {4L, 6L, 8L})
        for (long cut = 1; cut < N; ++cut)
            CHECK(jm_sector_entanglement(N, 0, 0, cut) ==
                  Approx(entanglement_of_formation(g, N, cut)).epsilon(1e-10));
    // m-independence within a sector is not generally true, but the j = 1/2
    // sector of N = 3 must agree between m = +-1/2 by spin-flip symmetry
    CHECK(jm_sector_entanglement(3, 1, 1, 1) ==
          Approx(jm_sector_entanglement(3, 1, -1, 1)).epsilon(1e-12));
    CHECK_THROWS_AS(jm_sector_entanglement(4, 1, 3, 2), ConfigError);
    CHECK_THROWS_AS(jm_sector_entanglement(5, 0, 0, 2), EmptySectorError);
}
