#pragma once

#include <vector>

#include "mmis/exact.hpp"
#include "mmis/group.hpp"
#include "mmis/irrep.hpp"

namespace mmis {

// Multiplicity C_J^N of irrep J in the N-fold tensor power of the onsite
// space. Exact; 0 for sectors that are empty (never an error).
BigInt multiplicity(const GroupModel& g, const Irrep& J, long N);

long irrep_dimension(const GroupModel& g, const Irrep& J);
Irrep conjugate_irrep(const GroupModel& g, const Irrep& J);
Irrep trivial_irrep(const GroupModel& g);

std::string irrep_label(const GroupModel& g, const Irrep& J);
Irrep parse_irrep(const GroupModel& g, const std::string& label);

// All J with C_J^N > 0, in deterministic order (table order / increasing j /
// lexicographic weight).
std::vector<Irrep> irreps_for_sites(const GroupModel& g, long N);

struct IrrepEntry {
    Irrep J;
    BigInt mult_a;   // C_J^{N_A}
    BigInt mult_b;   // C_{J*}^{N_B}
    Rational prob;   // p(J) = mult_a * mult_b / C_inv^N, exact
};

// The exact distribution p(J) over the allowed set for a bipartition.
// Construction asserts sum_J C_J^{N_A} C_{J*}^{N_B} = C_inv^{N_A+N_B}.
struct IrrepDistribution {
    GroupModel group;
    long N = 0, N_A = 0, N_B = 0;
    BigInt C_inv;    // C_inv^N
    std::vector<IrrepEntry> entries;
};

IrrepDistribution irrep_distribution(const GroupModel& g, long N_A, long N_B);

// f_J = d_J |Z(G)| / |G|, the leading coefficient of C_J^N / d_V^N for a
// faithful onsite irrep of a finite group.
Rational asymptotic_multiplicity_coefficient(const GroupModel& g, const Irrep& J);

// SU(2) quadratic Casimir j(j+1).
Rational casimir_eigenvalue(const GroupModel& g, const Irrep& J);

// (dim g - dim h)/4, the predicted slope of E vs log N_A for Lie families.
Rational predicted_log_slope(const GroupModel& g);

}  // namespace mmis
