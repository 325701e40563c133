#pragma once

#include <string>
#include <vector>

#include "mmis/multiplicity.hpp"

namespace mmis {

// Entanglement measures of the maximally mixed invariant state for a
// bipartition N_A : N_B. All values in natural log; base conversion happens
// at the presentation layer.
struct EntanglementReport {
    std::string group_id;
    long N = 0, N_A = 0, N_B = 0;
    double E = 0;      // entanglement of formation = distillation
    double S_A = 0;    // entanglement entropy of block A
    double E_neg = 0;  // logarithmic negativity
    double O_op = 0;   // operator entanglement
    double H_p = 0;    // Shannon entropy of p(J)
};

EntanglementReport entanglement_report(const GroupModel& g, long N, long N_A);

double entanglement_of_formation(const GroupModel& g, long N, long N_A);
double log_negativity_analytic(const GroupModel& g, long N, long N_A);
double entanglement_entropy_A(const GroupModel& g, long N, long N_A);
double operator_entanglement(const GroupModel& g, long N, long N_A);

struct MpdoBounds {
    double D = 0;        // e^{O_op}, the MPDO bond dimension at the cut
    double lower = 0;    // sqrt(D) <= purification rank
    double upper = 0;    // purification rank <= D + 1
};
MpdoBounds mpdo_bounds(const GroupModel& g, long N, long N_A);

struct ReducedBlock {
    Irrep J;
    Rational eigenvalue;  // C_{J*}^{N-k} / (C_inv^N d_J)
    BigInt degeneracy;    // d_J * C_J^k
};

// Exact spectrum of the k-site reduced MMIS, including zero-eigenvalue
// blocks for irreps present on k sites but absent on the complement.
struct ReducedSpectrum {
    long N = 0, k = 0;
    std::vector<ReducedBlock> blocks;
};

ReducedSpectrum reduced_spectrum(const GroupModel& g, long N, long k);
double trace_distance_to_identity(const GroupModel& g, const ReducedSpectrum& spec);

enum class CorrelatorKind { Su2SpinSpin, S3ZZ, S3XXYY, S3ZZQuadratic, S3XXYYQuadratic };
CorrelatorKind parse_correlator_kind(const std::string& s);

// Exact finite-N two-point correlators of the MMIS (site-independent by
// permutation invariance). Quadratic kinds return the ratio
// Tr[(rho O)^2] / Tr[rho^2].
double two_point_correlator(const GroupModel& g, long N, CorrelatorKind kind);

// F = sum_J |c_J - 2 c_V| / 2 * p(J) over two-site irreps, SU(2) spin-1/2.
double fidelity_correlator_su2(long N);

struct ThermalSpec {
    double T = 0;
    bool infinite_T = false;
    long N_A = 0, N_B = 0;
};
double finite_T_entanglement(const ThermalSpec& spec);

// Thermodynamic-limit half-chain entanglement of formation for a finite
// group with faithful onsite irrep, from the asymptotic multiplicity
// coefficients (restricted to irreps trivial on the center, the only ones
// compatible with the central character of V^N for the relevant parity).
double asymptotic_entanglement_finite_group(const GroupModel& g);

}  // namespace mmis
