#include "mmis/sim/projector.hpp"

#include <cmath>
#include <vector>

#include "mmis/errors.hpp"
#include "mmis/multiplicity.hpp"
#include "mmis/sim/channel.hpp"

namespace mmis::sim {

void SectorProjector::validate() const {
    double scale = std::max(1.0, P.norm());
    if ((P - P.adjoint()).norm() > 1e-9 * scale) throw Error("projector is not Hermitian");
    if ((P * P - P).norm() > 1e-9 * scale) throw Error("projector is not idempotent");
    if (std::lround(P.trace().real()) != rank) throw Error("projector trace != rank");
}

SectorProjector build_su2_projector(long n_sites, long twice_j) {
    check_density_budget(n_sites, 2);
    if (twice_j < 0 || twice_j > n_sites) throw ConfigError("spin sector out of range");
    const long D = pow_long(2, n_sites);
    const double target = (twice_j / 2.0) * (twice_j / 2.0 + 1.0);

    SectorProjector proj;
    proj.n_sites = n_sites;
    proj.group_id = "su2";
    proj.sector = twice_j % 2 == 0 ? "j=" + std::to_string(twice_j / 2)
                                   : "j=" + std::to_string(twice_j) + "/2";
    proj.P = Mat::Zero(D, D);

    // S^2 commutes with Sz, so diagonalize it inside each Sz sector
    for (long ones = 0; ones <= n_sites; ++ones) {
        std::vector<long> basis;
        for (long s = 0; s < D; ++s)
            if (__builtin_popcountll(static_cast<unsigned long long>(s)) == ones)
                basis.push_back(s);
        const long m = static_cast<long>(basis.size());
        std::vector<long> index(D, -1);
        for (long i = 0; i < m; ++i) index[basis[i]] = i;

        Eigen::MatrixXd S2 = Eigen::MatrixXd::Zero(m, m);
        for (long i = 0; i < m; ++i) {
            long s = basis[i];
            double diag = 0.75 * n_sites;
            for (long a = 0; a < n_sites; ++a)
                for (long b = a + 1; b < n_sites; ++b) {
                    bool za = s & (1L << a), zb = s & (1L << b);
                    diag += (za == zb) ? 0.5 : -0.5;
                    if (za != zb) S2(index[s ^ (1L << a) ^ (1L << b)], i) += 1.0;
                }
            S2(i, i) += diag;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S2);
        for (long v = 0; v < m; ++v) {
            if (std::abs(es.eigenvalues()[v] - target) > 1e-7) continue;
            Vec full = Vec::Zero(D);
            for (long i = 0; i < m; ++i) full(basis[i]) = es.eigenvectors()(i, v);
            proj.P.noalias() += full * full.adjoint();
            ++proj.rank;
        }
    }

    auto g = GroupModel::su2();
    BigInt expect = multiplicity(g, Irrep::spin_twice(twice_j), n_sites) * (twice_j + 1);
    if (expect != proj.rank)
        throw OracleMismatch("S^2 projector rank " + std::to_string(proj.rank) +
                             " != multiplicity * (2j+1)");
    proj.validate();
    return proj;
}

SectorProjector build_s3_projector(long n_sites, const std::string& sector) {
    check_density_budget(n_sites, 2);
    const long D = pow_long(2, n_sites);
    // R is diagonal with entry omega^{N - 2k} on a basis state with k up
    // spins, so (I + R + R^2)/3 keeps exactly the states with N = 2k mod 3
    auto rot = [&](long s) {
        long k = __builtin_popcountll(static_cast<unsigned long long>(s));
        return ((n_sites - 2 * k) % 3 + 3) % 3 == 0;
    };
    const long mask = D - 1;

    SectorProjector proj;
    proj.n_sites = n_sites;
    proj.group_id = "s3";
    proj.sector = sector;
    proj.P = Mat::Zero(D, D);
    if (sector == "2d") {
        for (long s = 0; s < D; ++s)
            if (!rot(s)) proj.P(s, s) = 1;
    } else if (sector == "inv" || sector == "sgn") {
        double sign = sector == "inv" ? 1.0 : -1.0;
        for (long s = 0; s < D; ++s) {
            if (!rot(s)) continue;
            proj.P(s, s) += 0.5;
            proj.P(s, s ^ mask) += 0.5 * sign;  // prod X flips every spin
        }
    } else {
        throw ConfigError("unknown S3 sector: '" + sector + "'");
    }
    proj.rank = std::lround(proj.P.trace().real());

    auto g = GroupModel::named("s3");
    BigInt expect = multiplicity(g, parse_irrep(g, sector), n_sites) *
                    irrep_dimension(g, parse_irrep(g, sector));
    if (expect != proj.rank)
        throw OracleMismatch("S3 projector rank " + std::to_string(proj.rank) +
                             " != multiplicity * d_J");
    proj.validate();
    return proj;
}

SectorProjector build_projector(const std::string& group_id, long n_sites,
                                const std::string& sector) {
    if (group_id == "su2") {
        auto g = GroupModel::su2();
        return build_su2_projector(n_sites, parse_irrep(g, sector).twice_j);
    }
    if (group_id == "s3") return build_s3_projector(n_sites, sector);
    throw ConfigError("dense projectors available for su2 and s3 only");
}

DensityMatrix mmis_state(const SectorProjector& proj) {
    if (proj.rank == 0) throw EmptySectorError("sector " + proj.sector + " is empty");
    DensityMatrix rho;
    rho.n_sites = proj.n_sites;
    rho.local_dim = 2;
    rho.data = proj.P / static_cast<double>(proj.rank);
    return rho;
}

}  // namespace mmis::sim
