#pragma once

#include <optional>
#include <vector>

#include "mmis/sim/channel.hpp"
#include "mmis/sim/projector.hpp"

namespace mmis::sim {

struct StepRecord {
    long t = 0;
    double f_t = 0;
    double logneg_halfchain = 0;
    double trace_dist_to_mmis = 0;  // NaN when no reference sector given
    double sector_leakage = 0;      // Frobenius norm of rho - P rho P
};

struct RunOptions {
    long max_steps = 200;
    double tol = 1e-8;
};

struct RunResult {
    std::vector<StepRecord> log;
    DensityMatrix final_state;
    bool converged = false;
    long steps = 0;
};

// Evolves rho0 until f(t) < tol or the step cap, recording the per-step
// metrics; `reference` (the sector projector for the initial state) enables
// the distance-to-MMIS and leakage columns.
RunResult run_to_steady(const ChannelProgram& program, const DensityMatrix& rho0,
                        const std::optional<SectorProjector>& reference,
                        const RunOptions& opts);

// Seeded pure-state trajectory sampler for exploratory use: applies the same
// program but draws one Kraus outcome per gate with Born probabilities.
Vec run_trajectory(const ChannelProgram& program, Vec psi0, long steps, unsigned long seed);

}  // namespace mmis::sim
