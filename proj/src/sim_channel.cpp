#include "mmis/sim/channel.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <set>

#include "mmis/errors.hpp"

namespace mmis::sim {

void KrausGate::validate() {
    if (kraus.empty()) throw Error("gate with no Kraus operators");
    long sub = kraus[0].rows();
    Mat tp = Mat::Zero(sub, sub);
    Mat un = Mat::Zero(sub, sub);
    for (const Mat& K : kraus) {
        if (K.rows() != sub || K.cols() != sub) throw Error("ragged Kraus set");
        tp += K.adjoint() * K;
        un += K * K.adjoint();
    }
    if ((tp - Mat::Identity(sub, sub)).norm() > 1e-12 * sub)
        throw Error("Kraus set is not trace-preserving");
    unital = (un - Mat::Identity(sub, sub)).norm() <= 1e-12 * sub;
}

void ChannelProgram::validate() const {
    for (const auto& layer : layers) {
        std::set<int> used;
        for (const auto& gate : layer)
            for (int s : gate.support) {
                if (s < 0 || s >= n_sites) throw Error("gate support outside the chain");
                if (!used.insert(s).second) throw Error("overlapping gates within a layer");
            }
    }
}

void apply_timestep(DensityMatrix& rho, const ChannelProgram& program) {
    if (rho.n_sites != program.n_sites || rho.local_dim != program.local_dim)
        throw ConfigError("state and program dimensions do not match");
    for (const auto& layer : program.layers)
        for (const auto& gate : layer)
            apply_kraus_local(rho.data, gate.kraus, gate.support, rho.n_sites, rho.local_dim);
}

std::vector<Mat> s3_two_site_kraus() {
    Mat I4 = Mat::Identity(4, 4);
    Mat ZZ = two_site(pauli('Z'), pauli('Z'));
    Mat XX = two_site(pauli('X'), pauli('X'));
    Mat K_inv = (I4 - ZZ) / 2 * (I4 + XX) / 2;
    Mat K_sgn = (I4 - ZZ) / 2 * (I4 - XX) / 2;
    Mat K_2d = (I4 + ZZ) / 2;
    return {K_inv, K_sgn, K_2d};
}

std::vector<Mat> s3_three_site_kraus() {
    Mat R1(2, 2);
    const cx w = std::exp(cx(0, 2.0 * M_PI / 3.0));
    R1 << w, 0, 0, std::conj(w);
    Mat R = Eigen::kroneckerProduct(R1, Eigen::kroneckerProduct(R1, R1).eval()).eval();
    Mat Px = Eigen::kroneckerProduct(pauli('X'),
                                     Eigen::kroneckerProduct(pauli('X'), pauli('X')).eval())
                 .eval();
    Mat I8 = Mat::Identity(8, 8);
    Mat Prot = (I8 + R + R * R) / 3;
    Mat P_inv = Prot * (I8 + Px) / 2;
    Mat P_sgn = Prot * (I8 - Px) / 2;
    Mat P_2d = I8 - Prot;
    return {P_inv, P_sgn, P_2d};
}

namespace {

KrausGate make_gate(std::vector<int> support, std::vector<Mat> kraus) {
    KrausGate g;
    g.support = std::move(support);
    g.kraus = std::move(kraus);
    g.validate();
    return g;
}

// even bonds then odd bonds (including the wrap-around bond when periodic)
std::vector<std::vector<std::vector<int>>> brickwork_bonds(long N, Boundary boundary) {
    std::vector<std::vector<int>> even, odd;
    for (long i = 0; i + 1 < N; i += 2) even.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    for (long i = 1; i + 1 < N; i += 2) odd.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    if (boundary == Boundary::Periodic && N % 2 == 0 && N > 2)
        odd.push_back({static_cast<int>(N - 1), 0});
    return {even, odd};
}

// one layer of disjoint triples left to right; a timestep is always exactly
// three measurement layers, so any remainder sites are simply not covered by
// the 3-body sweep (the 2-body brickwork still reaches them)
std::vector<std::vector<std::vector<int>>> triple_sweep(long N) {
    std::vector<std::vector<int>> layer;
    for (long i = 0; i + 2 < N; i += 3)
        layer.push_back({static_cast<int>(i), static_cast<int>(i + 1), static_cast<int>(i + 2)});
    return {layer};
}

std::vector<Mat> unitary_mixture(const std::vector<Mat>& projectors, double q, double phi1,
                                 double phi2) {
    std::vector<cx> phases = {1.0, std::exp(cx(0, phi1)), std::exp(cx(0, phi2))};
    Mat U = Mat::Zero(projectors[0].rows(), projectors[0].cols());
    for (std::size_t a = 0; a < projectors.size(); ++a) U += phases[a] * projectors[a];
    Mat id = Mat::Identity(U.rows(), U.cols());
    return {std::sqrt(1 - q) * id, std::sqrt(q) * U};
}

}  // namespace

ChannelProgram singlet_triplet_program(long n_sites, Boundary boundary) {
    if (n_sites < 2) throw ConfigError("need at least two sites");
    ChannelProgram p;
    p.model = "su2-singlet-triplet";
    p.n_sites = n_sites;
    p.boundary = boundary;
    Mat Ps = singlet_projector();
    Mat Pt = Mat::Identity(4, 4) - Ps;
    for (const auto& layer_bonds : brickwork_bonds(n_sites, boundary)) {
        std::vector<KrausGate> layer;
        for (const auto& bond : layer_bonds) layer.push_back(make_gate(bond, {Ps, Pt}));
        if (!layer.empty()) p.layers.push_back(std::move(layer));
    }
    p.validate();
    return p;
}

ChannelProgram s3_measurement_program(long n_sites, Boundary boundary, bool three_body) {
    if (n_sites < 3) throw ConfigError("S3 programs need at least three sites");
    ChannelProgram p;
    p.model = three_body ? "s3-measure" : "s3-measure-2body";
    p.n_sites = n_sites;
    p.boundary = boundary;
    auto k2 = s3_two_site_kraus();
    for (const auto& layer_bonds : brickwork_bonds(n_sites, boundary)) {
        std::vector<KrausGate> layer;
        for (const auto& bond : layer_bonds) layer.push_back(make_gate(bond, k2));
        if (!layer.empty()) p.layers.push_back(std::move(layer));
    }
    if (three_body) {
        auto k3 = s3_three_site_kraus();
        for (const auto& layer_triples : triple_sweep(n_sites)) {
            std::vector<KrausGate> layer;
            for (const auto& t : layer_triples) layer.push_back(make_gate(t, k3));
            p.layers.push_back(std::move(layer));
        }
    }
    p.validate();
    return p;
}

ChannelProgram s3_random_unitary_program(long n_sites, Boundary boundary, double q,
                                         double phi1, double phi2) {
    if (q < 0 || q > 1) throw ConfigError("mixing probability q must be in [0, 1]");
    ChannelProgram p = s3_measurement_program(n_sites, boundary, true);
    p.model = "s3-unitary";
    auto u2 = unitary_mixture(s3_two_site_kraus(), q, phi1, phi2);
    auto u3 = unitary_mixture(s3_three_site_kraus(), q, phi1, phi2);
    for (auto& layer : p.layers)
        for (auto& gate : layer) {
            gate.kraus = gate.support.size() == 2 ? u2 : u3;
            gate.validate();
        }
    return p;
}

ChannelProgram program_by_name(const std::string& model, long n_sites, Boundary boundary,
                               double q, double phi1, double phi2) {
    if (model == "su2-singlet-triplet") return singlet_triplet_program(n_sites, boundary);
    if (model == "s3-measure") return s3_measurement_program(n_sites, boundary, true);
    if (model == "s3-measure-2body") return s3_measurement_program(n_sites, boundary, false);
    if (model == "s3-unitary") return s3_random_unitary_program(n_sites, boundary, q, phi1, phi2);
    throw ConfigError("unknown model: '" + model + "'");
}

void check_density_budget(long n_sites, long local_dim) {
    if (pow_long(local_dim, n_sites) > 4096)
        throw BudgetExceeded("density-matrix evolution limited to dimension 4096 (12 qubits)");
}

void check_superop_budget(long n_sites, long local_dim) {
    if (pow_long(local_dim, n_sites) > 64)
        throw BudgetExceeded("superoperator analysis limited to dimension 64 (6 qubits)");
}

}  // namespace mmis::sim
