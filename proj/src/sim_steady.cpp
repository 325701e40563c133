#include "mmis/sim/steady.hpp"

#include <algorithm>

#include "mmis/errors.hpp"

namespace mmis::sim {

SteadyStateReport steady_state_analysis(const ChannelProgram& program,
                                        const SectorProjector& sector) {
    check_superop_budget(program.n_sites, program.local_dim);
    if (sector.n_sites != program.n_sites) throw ConfigError("sector/program size mismatch");
    if (sector.rank == 0) throw EmptySectorError("sector " + sector.sector + " is empty");
    const long D = sector.P.rows();
    const long m = sector.rank;

    // orthonormal basis of the sector from the projector's unit eigenvectors
    Eigen::SelfAdjointEigenSolver<Mat> es(sector.P);
    Mat V(D, m);
    long col = 0;
    for (long i = 0; i < D; ++i)
        if (es.eigenvalues()[i] > 0.5) V.col(col++) = es.eigenvectors().col(i);
    if (col != m) throw Error("projector eigenvalue count disagrees with rank");

    // one-timestep superoperator on the m^2-dimensional sector operator space
    Mat super(m * m, m * m);
    DensityMatrix work;
    work.n_sites = program.n_sites;
    work.local_dim = program.local_dim;
    for (long gamma = 0; gamma < m; ++gamma)
        for (long delta = 0; delta < m; ++delta) {
            work.data = V.col(gamma) * V.col(delta).adjoint();
            apply_timestep(work, program);
            Mat back = V.adjoint() * work.data * V;
            super.col(gamma * m + delta) =
                Eigen::Map<Vec>(back.data(), m * m);  // column-major vec
        }

    Eigen::ComplexEigenSolver<Mat> ces(super);
    std::vector<std::pair<double, long>> mags;
    for (long i = 0; i < m * m; ++i)
        mags.push_back({std::abs(ces.eigenvalues()[i]), i});
    std::sort(mags.rbegin(), mags.rend());

    SteadyStateReport rep;
    for (long i = 0; i < m * m; ++i)
        if (std::abs(ces.eigenvalues()[i] - cx(1, 0)) < 1e-9) ++rep.fixed_point_count;
    rep.gap = rep.fixed_point_count < m * m
                  ? 1.0 - mags[rep.fixed_point_count].first
                  : 0.0;

    if (rep.fixed_point_count == 1) {
        long idx = -1;
        for (long i = 0; i < m * m; ++i)
            if (std::abs(ces.eigenvalues()[i] - cx(1, 0)) < 1e-9) idx = i;
        Vec v = ces.eigenvectors().col(idx);
        Mat X = Eigen::Map<Mat>(v.data(), m, m);
        X = (X + Mat(X.adjoint())) / 2;  // fixed points of CPTP maps can be
                                          // chosen Hermitian
        Mat full = V * X * V.adjoint();
        cx tr = full.trace();
        if (std::abs(tr) < 1e-12) throw Error("traceless fixed point");
        rep.fixed_point.n_sites = program.n_sites;
        rep.fixed_point.local_dim = program.local_dim;
        rep.fixed_point.data = full / tr;
        DensityMatrix projected;
        projected.n_sites = program.n_sites;
        projected.local_dim = program.local_dim;
        projected.data = sector.P / static_cast<double>(sector.rank);
        rep.dist_to_projected_identity = trace_distance(rep.fixed_point, projected);
    }
    return rep;
}

}  // namespace mmis::sim
