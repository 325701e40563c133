#pragma once

#include <string>

#include "mmis/sim/state.hpp"

namespace mmis::sim {

struct SectorProjector {
    long n_sites = 0;
    std::string group_id;
    std::string sector;
    Mat P;
    long rank = 0;

    // P^2 = P, P = P^dag to 1e-9; rank agrees with the stored value.
    void validate() const;
};

// Projector onto the total-spin-j isotypic sector of N qubits, from the
// eigendecomposition of total S^2 (eigenvalue within 1e-7 of j(j+1)).
// The rank is cross-checked against multiplicity * (2j+1); a mismatch is
// fatal.
SectorProjector build_su2_projector(long n_sites, long twice_j);

// Projector onto an S3 isotypic sector ("inv", "sgn", "2d") of N qubits,
// built from the explicit group elements R = prod e^{2 pi i Z/3} and
// P_x = prod X.
SectorProjector build_s3_projector(long n_sites, const std::string& sector);

SectorProjector build_projector(const std::string& group_id, long n_sites,
                                const std::string& sector);

// MMIS for the sector: P / rank.
DensityMatrix mmis_state(const SectorProjector& proj);

}  // namespace mmis::sim
