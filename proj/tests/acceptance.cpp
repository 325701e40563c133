// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria 2 and 4 run dense simulations and take minutes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mmis/analytics.hpp"
#include "mmis/clebsch.hpp"
#include "mmis/errors.hpp"
#include "mmis/group.hpp"
#include "mmis/multiplicity.hpp"
#include "mmis/sim/channel.hpp"
#include "mmis/sim/projector.hpp"
#include "mmis/sim/runner.hpp"
#include "mmis/sim/steady.hpp"

using namespace mmis;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %-28s %s  [%.1fs]%s\n", number, name.c_str(),
                ok ? "pass" : "FAIL", secs, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool completeness_for(const GroupModel& g, long max_N) {
    for (long N = 1; N <= max_N; ++N) {
        // sum_J C_J^N d_J = d_V^N
        BigInt total = 0;
        for (const auto& J : irreps_for_sites(g, N))
            total += multiplicity(g, J, N) * irrep_dimension(g, J);
        BigInt dv = 1;
        for (long i = 0; i < N; ++i) dv *= g.onsite_dim;
        if (total != dv) return false;
        // factorization sum_J C_J^{N_A} C_{J*}^{N_B} = C_inv^N for all cuts
        // (verified exactly inside irrep_distribution; throws on mismatch)
        for (long cut = 0; cut <= N; ++cut) {
            try {
                irrep_distribution(g, cut, N - cut);
            } catch (const EmptySectorError&) {
                // empty invariant sector: nothing to factorize
            }
        }
    }
    return true;
}

bool criterion1() {
    return completeness_for(GroupModel::su2(), 30) &&
           completeness_for(GroupModel::named("s3"), 30) &&
           completeness_for(GroupModel::sud(3), 20);
}

bool criterion2() {
    auto g = GroupModel::su2();
    for (long N : {4L, 6L, 8L, 10L}) {
        auto program = sim::singlet_triplet_program(N, sim::Boundary::Periodic);
        auto proj = sim::build_su2_projector(N, 0);
        sim::RunOptions opts;  // cap 200, tol 1e-8
        auto res = sim::run_to_steady(program, sim::dimer_state(N),
                                      std::optional<sim::SectorProjector>(proj), opts);
        if (!res.converged || res.steps > 200) return false;
        double target = log_negativity_analytic(g, N, N / 2);
        if (std::abs(res.log.back().logneg_halfchain - target) > 1e-6) return false;
    }
    // analytic sweep slope of E vs ln N
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long m = 0;
    for (long N = 40; N <= 400; N += 20) {
        if (N < 220) continue;  // upper half of the range
        double x = std::log(static_cast<double>(N));
        double y = entanglement_of_formation(g, N, N / 2);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return slope > 0.45 && slope < 0.55;
}

bool criterion3() {
    auto g = GroupModel::named("s3");
    return std::abs(entanglement_of_formation(g, 40, 20) - 2.0 / 3.0 * std::log(2)) < 1e-6 &&
           std::abs(log_negativity_analytic(g, 40, 20) - std::log(5.0 / 3.0)) < 1e-6;
}

bool criterion4() {
    // s3-measure at N=6 reaches the analytic S3 MMIS
    auto program = sim::s3_measurement_program(6, sim::Boundary::Open);
    auto proj = sim::build_s3_projector(6, "inv");
    sim::RunOptions opts;
    auto res = sim::run_to_steady(program, sim::s3_pair_state(6),
                                  std::optional<sim::SectorProjector>(proj), opts);
    if (!res.converged || res.log.back().trace_dist_to_mmis > 1e-6) return false;

    // s3-unitary convergence step count non-increasing over N = 6, 8, 10
    long prev_steps = -1;
    for (long N : {6L, 8L, 10L}) {
        auto uprog = sim::s3_random_unitary_program(N, sim::Boundary::Open, 0.5, M_PI, M_PI / 2);
        sim::RunOptions uopts;
        uopts.tol = 1e-6;
        auto ures = sim::run_to_steady(uprog, sim::s3_pair_state(N), std::nullopt, uopts);
        if (!ures.converged) return false;
        if (prev_steps >= 0 && ures.steps > prev_steps) return false;
        prev_steps = ures.steps;
    }
    return true;
}

bool criterion5() {
    auto su2 = GroupModel::su2();
    for (long N : {4L, 6L, 8L}) {
        auto rho = sim::mmis_state(sim::build_su2_projector(N, 0));
        sim::Mat op = sim::spin_spin_op();
        double expected = -3.0 / (4.0 * (N - 1));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (i == j) continue;
                double val = sim::expectation_local(rho.data, op, {i, j}, N, 2).real();
                if (std::abs(val - expected) > 1e-9) return false;
            }
    }
    auto s3 = GroupModel::named("s3");
    sim::Mat ZZ = sim::two_site(sim::pauli('Z'), sim::pauli('Z'));
    for (long N : {4L, 6L}) {
        auto rho = sim::mmis_state(sim::build_s3_projector(N, "inv"));
        double val = sim::expectation_local(rho.data, ZZ, {0, 1}, N, 2).real();
        // exact finite-N value 6(-1)^{N+1}/(2^N + 2(-1)^N); the large-N form
        // 6(-1)^{N+1}/2^N differs at order 2^{-2N} and cannot meet 1e-9 at
        // N = 4 or 6, so the check is against the exact denominator
        double exact = two_point_correlator(s3, N, CorrelatorKind::S3ZZ);
        if (std::abs(val - exact) > 1e-9) return false;
        double asym = 6.0 * ((N % 2 == 0) ? -1.0 : 1.0) / std::pow(2.0, double(N));
        if (std::abs(exact - asym) > 0.2 * std::abs(exact)) return false;  // same asymptote
    }
    return true;
}

bool criterion6() {
    if (std::abs(fidelity_correlator_su2(40) - 3.0 / 8.0) > 0.02) return false;
    auto rho = sim::mmis_state(sim::build_su2_projector(6, 0));
    double val = sim::expectation_local(rho.data, sim::abs_spin_spin_op(), {0, 1}, 6, 2).real();
    return std::abs(val - fidelity_correlator_su2(6)) < 1e-8;
}

bool criterion7() {
    auto su2rep = sim::steady_state_analysis(
        sim::singlet_triplet_program(4, sim::Boundary::Periodic), sim::build_su2_projector(4, 0));
    if (su2rep.fixed_point_count != 1 || su2rep.dist_to_projected_identity > 1e-10) return false;
    auto s3rep = sim::steady_state_analysis(sim::s3_measurement_program(4, sim::Boundary::Open),
                                            sim::build_s3_projector(4, "inv"));
    return s3rep.fixed_point_count == 1 && s3rep.dist_to_projected_identity < 1e-10;
}

bool criterion8() {
    auto su2 = GroupModel::su2();
    std::vector<double> scaled;
    for (long N : {8L, 16L, 32L})
        scaled.push_back(N * trace_distance_to_identity(su2, reduced_spectrum(su2, N, 2)));
    for (double v : scaled)
        for (double w : scaled)
            if (std::abs(v - w) > 0.2 * std::max(v, w)) return false;

    auto s3 = GroupModel::named("s3");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long m = 0;
    for (long N = 10; N <= 30; N += 2) {
        double d = trace_distance_to_identity(s3, reduced_spectrum(s3, N, 2));
        sx += N;
        sy += std::log(d);
        sxx += static_cast<double>(N) * N;
        sxy += N * std::log(d);
        ++m;
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return std::abs(slope + std::log(2)) < 0.1 * std::log(2);
}

bool criterion9() {
    ThermalSpec inf;
    inf.infinite_T = true;
    inf.N_A = 6;
    inf.N_B = 6;
    if (finite_T_entanglement(inf) != entanglement_of_formation(GroupModel::su2(), 12, 6))
        return false;
    auto at = [](double T, long half) {
        ThermalSpec s;
        s.T = T;
        s.N_A = half;
        s.N_B = half;
        return finite_T_entanglement(s);
    };
    double last_doubling = at(4, 64) - at(4, 32);
    if (last_doubling >= 0.05) {
        // the exact formula gives 0.0538 here; successive doublings shrink
        // (0.138, 0.090, 0.054, 0.030), so saturation holds but the 0.05
        // threshold at this window does not
        std::printf("  [criterion 9] E(T=4, 64) - E(T=4, 32) = %.4f >= 0.05\n", last_doubling);
        return false;  // saturation threshold at fixed T
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long m = 0;
    for (long N : {16L, 32L, 64L, 128L}) {
        double x = std::log(static_cast<double>(N));
        double y = at(static_cast<double>(2 * N), N);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return slope > 0;  // T ~ N keeps the logarithmic growth
}

bool criterion10() {
    struct Case {
        const char* id;
        long N, cut;
    };
    for (auto [id, N, cut] : {Case{"su2", 12, 6}, Case{"su2", 10, 3}, Case{"s3", 14, 7},
                              Case{"d4", 12, 6}, Case{"su3", 12, 6}}) {
        auto g = GroupModel::named(id);
        auto rep = entanglement_report(g, N, cut);
        if (!(rep.E <= rep.E_neg + 1e-12)) return false;
        if (!(rep.E <= rep.S_A + 1e-12)) return false;
        if (std::abs(rep.O_op - (2 * rep.E + rep.H_p)) > 1e-10) return false;
    }
    for (const char* id : {"z2", "z3"}) {
        auto g = GroupModel::named(id);
        for (long N : {4L, 6L, 8L, 12L})
            for (long cut = 0; cut <= N; ++cut) {
                try {
                    if (entanglement_of_formation(g, N, cut) != 0.0) return false;
                } catch (const EmptySectorError&) {
                }
            }
    }
    for (long N : {4L, 6L, 8L})
        for (long cut = 1; cut < N; ++cut)
            if (std::abs(jm_sector_entanglement(N, 0, 0, cut) -
                         entanglement_of_formation(GroupModel::su2(), N, cut)) > 1e-12)
                return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "completeness identities", criterion1);
    criterion(2, "singlet-triplet circuit", criterion2);
    criterion(3, "S3 limits", criterion3);
    criterion(4, "S3 simulation", criterion4);
    criterion(5, "correlators", criterion5);
    criterion(6, "fidelity correlator", criterion6);
    criterion(7, "steady-state uniqueness", criterion7);
    criterion(8, "local indistinguishability", criterion8);
    criterion(9, "finite temperature", criterion9);
    criterion(10, "consistency suite", criterion10);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
