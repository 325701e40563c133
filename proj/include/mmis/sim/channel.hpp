#pragma once

#include <string>
#include <vector>

#include "mmis/sim/state.hpp"

namespace mmis::sim {

struct KrausGate {
    std::vector<int> support;   // 2 or 3 sites, in circuit order
    std::vector<Mat> kraus;
    bool unital = false;

    // Checks sum K^dag K = I (1e-12) and sets the unital flag from
    // sum K K^dag = I (1e-12).
    void validate();
};

enum class Boundary { Periodic, Open };

struct ChannelProgram {
    std::string model;
    long n_sites = 0;
    long local_dim = 2;
    Boundary boundary = Boundary::Open;
    // one timestep applies all layers in order; gates within a layer have
    // disjoint supports
    std::vector<std::vector<KrausGate>> layers;

    void validate() const;
};

// rho evolves through one full timestep of the program.
void apply_timestep(DensityMatrix& rho, const ChannelProgram& program);

// two-qubit S3 measurement Kraus set {K_inv, K_sgn, K_2d}
std::vector<Mat> s3_two_site_kraus();
// three-qubit S3 sector projectors {P_inv, P_sgn, P_2d}
std::vector<Mat> s3_three_site_kraus();

// Singlet-triplet measurement circuit: even-bond layer then odd-bond layer,
// Kraus {P_s, I - P_s} on each bond.
ChannelProgram singlet_triplet_program(long n_sites, Boundary boundary);

// S3 measurement circuit: three layers per timestep — even 2-body, odd
// 2-body, then one sweep of disjoint 3-body gates (remainder sites are left
// to the 2-body brickwork). `three_body = false` drops the 3-body layer,
// exposing the extra steady-state degeneracy of the 2-body-only dynamics.
ChannelProgram s3_measurement_program(long n_sites, Boundary boundary, bool three_body = true);

// Same circuit with every measurement replaced by the unitary mixture
// (1-q) rho + q U rho U^dag, U = K_inv + e^{i phi1} K_sgn + e^{i phi2} K_2d.
ChannelProgram s3_random_unitary_program(long n_sites, Boundary boundary, double q,
                                         double phi1, double phi2);

ChannelProgram program_by_name(const std::string& model, long n_sites, Boundary boundary,
                               double q = 0.5, double phi1 = M_PI, double phi2 = M_PI / 2);

// hard dense-simulation budgets
void check_density_budget(long n_sites, long local_dim);
void check_superop_budget(long n_sites, long local_dim);

}  // namespace mmis::sim
