#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace mmis::sim {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cx = std::complex<double>;

// Dense density matrix on (C^d)^{x n_sites}. Site 0 is the most significant
// digit of the row/column index.
struct DensityMatrix {
    long n_sites = 0;
    long local_dim = 2;
    Mat data;

    long dim() const { return data.rows(); }

    // Throws if the matrix is not Hermitian/unit-trace/positive within the
    // documented tolerances (1e-10 / 1e-10 / -1e-9 eigenvalue floor).
    void validate() const;
};

long pow_long(long base, long exp);

// rho <- sum_a (K_a x I) rho (K_a x I)^dagger with K_a acting on `support`,
// implemented by index contraction on the support digits of each side
// (never building the d^N-dimensional Kraus matrix).
void apply_kraus_local(Mat& rho, const std::vector<Mat>& kraus,
                       const std::vector<int>& support, long n_sites, long local_dim);

// A <- (M x I) A (left factor on the row indices of the support sites).
void apply_left_local(const Mat& in, Mat& out, const Mat& M, const std::vector<int>& support,
                      long n_sites, long local_dim);

// Tr[rho (O x I)] with O on the support sites.
cx expectation_local(const Mat& rho, const Mat& O, const std::vector<int>& support,
                     long n_sites, long local_dim);

double trace_norm(const Mat& herm);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
// f(t) = |rho_t - rho_prev|_1 / sqrt(|rho_t|_1 |rho_prev|_1)
double convergence_metric(const DensityMatrix& now, const DensityMatrix& prev);

// log |rho^{T_A}|_1 over the given A sites.
double log_negativity_numeric(const DensityMatrix& rho, const std::vector<int>& A_sites);
Mat partial_transpose(const Mat& rho, const std::vector<int>& A_sites, long n_sites,
                      long local_dim);

// two-site building blocks (qubits)
Mat pauli(char which);               // 'I', 'X', 'Y', 'Z'
Mat two_site(const Mat& a, const Mat& b);
Mat singlet_projector();             // |s><s| on two qubits
Mat swap_two();
Mat spin_spin_op();                  // S_i . S_j = SWAP/2 - I/4
Mat abs_spin_spin_op();              // |S_i . S_j| = I/4 + P_s/2

// product of nearest-neighbor two-qubit pure states |phi> on (0,1), (2,3), ...
DensityMatrix pair_product_state(long n_sites, const Vec& pair_state);
// dimer covering of singlets
DensityMatrix dimer_state(long n_sites);
// nearest-neighbor pairs in the two-qubit S3 invariant state (|01>+|10>)/sqrt2
DensityMatrix s3_pair_state(long n_sites);
DensityMatrix maximally_mixed(long n_sites, long local_dim);

}  // namespace mmis::sim
