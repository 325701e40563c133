#pragma once

#include "mmis/sim/channel.hpp"
#include "mmis/sim/projector.hpp"

namespace mmis::sim {

struct SteadyStateReport {
    long fixed_point_count = 0;
    double gap = 0;                        // 1 - |second eigenvalue|
    double dist_to_projected_identity = 0; // trace distance, unique case only
    DensityMatrix fixed_point;             // normalized, unique case only
};

// Builds the one-timestep superoperator restricted to the operator subspace
// P B P of the sector and counts its unit eigenvalues (|lambda - 1| < 1e-9).
SteadyStateReport steady_state_analysis(const ChannelProgram& program,
                                        const SectorProjector& sector);

}  // namespace mmis::sim
