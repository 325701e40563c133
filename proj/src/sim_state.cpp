#include "mmis/sim/state.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

#include "mmis/errors.hpp"

namespace mmis::sim {

namespace {

// absolute positions of the support digits within the full index, for every
// value of the support sub-index (support[0] most significant)
std::vector<long> support_deltas(const std::vector<int>& support, long n_sites, long d) {
    long k = static_cast<long>(support.size());
    long sub_dim = pow_long(d, k);
    std::vector<long> stride(n_sites);
    for (long s = 0; s < n_sites; ++s) stride[s] = pow_long(d, n_sites - 1 - s);
    std::vector<long> delta(sub_dim, 0);
    for (long m = 0; m < sub_dim; ++m) {
        long v = m;
        for (long j = k - 1; j >= 0; --j) {
            delta[m] += (v % d) * stride[support[j]];
            v /= d;
        }
    }
    return delta;
}

// base offsets: every full index whose support digits are all zero
std::vector<long> rest_offsets(const std::vector<int>& support, long n_sites, long d) {
    std::vector<bool> is_support(n_sites, false);
    for (int s : support) is_support[s] = true;
    std::vector<long> rest_stride;
    for (long s = 0; s < n_sites; ++s)
        if (!is_support[s]) rest_stride.push_back(pow_long(d, n_sites - 1 - s));
    long rest_dim = pow_long(d, n_sites - static_cast<long>(support.size()));
    std::vector<long> offsets(rest_dim, 0);
    for (long r = 0; r < rest_dim; ++r) {
        long v = r;
        for (long j = static_cast<long>(rest_stride.size()) - 1; j >= 0; --j) {
            offsets[r] += (v % d) * rest_stride[j];
            v /= d;
        }
    }
    return offsets;
}

}  // namespace

long pow_long(long base, long exp) {
    long r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

void DensityMatrix::validate() const {
    if (data.rows() != data.cols() || data.rows() != pow_long(local_dim, n_sites))
        throw Error("density matrix has wrong shape");
    if ((data - data.adjoint()).norm() > 1e-10 * std::max(1.0, data.norm()))
        throw Error("density matrix is not Hermitian");
    if (std::abs(data.trace() - cx(1, 0)) > 1e-10) throw Error("density matrix trace != 1");
    Eigen::SelfAdjointEigenSolver<Mat> es(data, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) throw Error("density matrix is not positive");
}

void apply_left_local(const Mat& in, Mat& out, const Mat& M, const std::vector<int>& support,
                      long n_sites, long d) {
    long sub = M.rows();
    auto delta = support_deltas(support, n_sites, d);
    auto offsets = rest_offsets(support, n_sites, d);
    out.resize(in.rows(), in.cols());
    Vec v(sub), u(sub);
    for (long col = 0; col < in.cols(); ++col)
        for (long off : offsets) {
            for (long m = 0; m < sub; ++m) v(m) = in(off + delta[m], col);
            u.noalias() = M * v;
            for (long m = 0; m < sub; ++m) out(off + delta[m], col) = u(m);
        }
}

namespace {

// A <- A (M^dagger x I) on the column support digits
void apply_right_local_dagger(Mat& a, const Mat& M, const std::vector<int>& support,
                              long n_sites, long d) {
    long sub = M.rows();
    auto delta = support_deltas(support, n_sites, d);
    auto offsets = rest_offsets(support, n_sites, d);
    Vec w(sub), u(sub);
    for (long row = 0; row < a.rows(); ++row)
        for (long off : offsets) {
            for (long m = 0; m < sub; ++m) w(m) = a(row, off + delta[m]);
            u.noalias() = M.conjugate() * w;
            for (long m = 0; m < sub; ++m) a(row, off + delta[m]) = u(m);
        }
}

}  // namespace

void apply_kraus_local(Mat& rho, const std::vector<Mat>& kraus,
                       const std::vector<int>& support, long n_sites, long d) {
    Mat acc = Mat::Zero(rho.rows(), rho.cols());
    Mat tmp;
    for (const Mat& K : kraus) {
        apply_left_local(rho, tmp, K, support, n_sites, d);
        apply_right_local_dagger(tmp, K, support, n_sites, d);
        acc += tmp;
    }
    rho.swap(acc);
}

cx expectation_local(const Mat& rho, const Mat& O, const std::vector<int>& support,
                     long n_sites, long d) {
    long sub = O.rows();
    auto delta = support_deltas(support, n_sites, d);
    auto offsets = rest_offsets(support, n_sites, d);
    cx total = 0;
    for (long off : offsets)
        for (long mi = 0; mi < sub; ++mi)
            for (long mj = 0; mj < sub; ++mj)
                total += rho(off + delta[mi], off + delta[mj]) * O(mj, mi);
    return total;
}

double trace_norm(const Mat& herm) {
    Eigen::SelfAdjointEigenSolver<Mat> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return 0.5 * trace_norm(a.data - b.data);
}

double convergence_metric(const DensityMatrix& now, const DensityMatrix& prev) {
    double num = trace_norm(now.data - prev.data);
    double den = std::sqrt(trace_norm(now.data) * trace_norm(prev.data));
    return num / den;
}

Mat partial_transpose(const Mat& rho, const std::vector<int>& A_sites, long n_sites, long d) {
    std::vector<long> stride(n_sites);
    for (long s = 0; s < n_sites; ++s) stride[s] = pow_long(d, n_sites - 1 - s);
    Mat out(rho.rows(), rho.cols());
    for (long i = 0; i < rho.rows(); ++i)
        for (long j = 0; j < rho.cols(); ++j) {
            long ip = i, jp = j;
            for (int s : A_sites) {
                long di = (i / stride[s]) % d, dj = (j / stride[s]) % d;
                ip += (dj - di) * stride[s];
                jp += (di - dj) * stride[s];
            }
            out(ip, jp) = rho(i, j);
        }
    return out;
}

double log_negativity_numeric(const DensityMatrix& rho, const std::vector<int>& A_sites) {
    Mat pt = partial_transpose(rho.data, A_sites, rho.n_sites, rho.local_dim);
    return std::log(trace_norm(pt));
}

Mat pauli(char which) {
    Mat m(2, 2);
    switch (which) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, cx(0, -1), cx(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw Error("unknown Pauli label");
    }
    return m;
}

Mat two_site(const Mat& a, const Mat& b) { return Eigen::kroneckerProduct(a, b); }

Mat singlet_projector() {
    Vec s(4);
    s << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
    return s * s.adjoint();
}

Mat swap_two() {
    Mat m = Mat::Zero(4, 4);
    m(0, 0) = m(3, 3) = 1;
    m(1, 2) = m(2, 1) = 1;
    return m;
}

Mat spin_spin_op() { return swap_two() / 2 - Mat::Identity(4, 4) / 4; }

Mat abs_spin_spin_op() { return Mat::Identity(4, 4) / 4 + singlet_projector() / 2; }

DensityMatrix pair_product_state(long n_sites, const Vec& pair_state) {
    if (n_sites % 2 != 0) throw ConfigError("pair product states need an even site count");
    Vec psi = Vec::Ones(1);
    for (long b = 0; b < n_sites / 2; ++b) psi = Eigen::kroneckerProduct(psi, pair_state).eval();
    DensityMatrix rho;
    rho.n_sites = n_sites;
    rho.local_dim = 2;
    rho.data = psi * psi.adjoint();
    return rho;
}

DensityMatrix dimer_state(long n_sites) {
    Vec s(4);
    s << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
    return pair_product_state(n_sites, s);
}

DensityMatrix s3_pair_state(long n_sites) {
    Vec s(4);
    s << 0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0;
    return pair_product_state(n_sites, s);
}

DensityMatrix maximally_mixed(long n_sites, long local_dim) {
    DensityMatrix rho;
    rho.n_sites = n_sites;
    rho.local_dim = local_dim;
    long D = pow_long(local_dim, n_sites);
    rho.data = Mat::Identity(D, D) / static_cast<double>(D);
    return rho;
}

}  // namespace mmis::sim
