#include "mmis/sim/runner.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "mmis/errors.hpp"

namespace mmis::sim {

RunResult run_to_steady(const ChannelProgram& program, const DensityMatrix& rho0,
                        const std::optional<SectorProjector>& reference,
                        const RunOptions& opts) {
    check_density_budget(program.n_sites, program.local_dim);
    RunResult result;
    DensityMatrix rho = rho0;
    DensityMatrix mmis;
    if (reference) mmis = mmis_state(*reference);

    std::vector<int> half;
    for (long s = 0; s < program.n_sites / 2; ++s) half.push_back(static_cast<int>(s));

    for (long t = 1; t <= opts.max_steps; ++t) {
        DensityMatrix prev = rho;
        apply_timestep(rho, program);

        StepRecord rec;
        rec.t = t;
        rec.f_t = convergence_metric(rho, prev);
        rec.logneg_halfchain = log_negativity_numeric(rho, half);
        if (reference) {
            rec.trace_dist_to_mmis = trace_distance(rho, mmis);
            rec.sector_leakage =
                (rho.data - reference->P * rho.data * reference->P).norm();
        } else {
            rec.trace_dist_to_mmis = std::numeric_limits<double>::quiet_NaN();
            rec.sector_leakage = std::numeric_limits<double>::quiet_NaN();
        }
        result.log.push_back(rec);
        result.steps = t;
        if (rec.f_t < opts.tol) {
            result.converged = true;
            break;
        }
    }
    result.final_state = std::move(rho);
    return result;
}

Vec run_trajectory(const ChannelProgram& program, Vec psi, long steps, unsigned long seed) {
    check_density_budget(program.n_sites, program.local_dim);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Mat col(psi.size(), 1);
    for (long t = 0; t < steps; ++t)
        for (const auto& layer : program.layers)
            for (const auto& gate : layer) {
                col.col(0) = psi;
                std::vector<Vec> branches;
                std::vector<double> weights;
                for (const Mat& K : gate.kraus) {
                    Mat out;
                    apply_left_local(col, out, K, gate.support, program.n_sites,
                                     program.local_dim);
                    branches.push_back(out.col(0));
                    weights.push_back(branches.back().squaredNorm());
                }
                double r = unif(rng), acc = 0;
                std::size_t pick = branches.size() - 1;
                for (std::size_t a = 0; a < branches.size(); ++a) {
                    acc += weights[a];
                    if (r < acc) {
                        pick = a;
                        break;
                    }
                }
                if (weights[pick] < 1e-300) throw Error("trajectory hit a zero-weight branch");
                psi = branches[pick] / std::sqrt(weights[pick]);
            }
    return psi;
}

}  // namespace mmis::sim
