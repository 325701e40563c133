#include "mmis/analytics.hpp"

#include <cmath>

#include "mmis/errors.hpp"

namespace mmis {

namespace {

// compensated (Kahan) accumulator for the sums over irreps
struct KahanSum {
    double sum = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

double log_bigint(const BigInt& z) { return log_big(z); }

}  // namespace

EntanglementReport entanglement_report(const GroupModel& g, long N, long N_A) {
    if (N_A < 0 || N_A > N) throw ConfigError("cut outside [0, N]");
    auto dist = irrep_distribution(g, N_A, N - N_A);
    EntanglementReport r;
    r.group_id = g.id;
    r.N = N;
    r.N_A = N_A;
    r.N_B = N - N_A;
    double logC = log_bigint(dist.C_inv);
    KahanSum E, S_A, H_p;
    Rational neg_sum = 0;
    for (const auto& e : dist.entries) {
        double p = to_double(e.prob);
        double logd = std::log(static_cast<double>(irrep_dimension(g, e.J)));
        E.add(p * logd);
        S_A.add(p * (logC + logd - log_bigint(e.mult_b)));
        H_p.add(p * (logC - log_bigint(e.mult_a) - log_bigint(e.mult_b)));
        neg_sum += e.prob * irrep_dimension(g, e.J);
    }
    r.E = E.sum;
    r.S_A = S_A.sum;
    r.H_p = H_p.sum;
    r.E_neg = log_rational(neg_sum);
    r.O_op = 2 * r.E + r.H_p;
    return r;
}

double entanglement_of_formation(const GroupModel& g, long N, long N_A) {
    return entanglement_report(g, N, N_A).E;
}
double log_negativity_analytic(const GroupModel& g, long N, long N_A) {
    return entanglement_report(g, N, N_A).E_neg;
}
double entanglement_entropy_A(const GroupModel& g, long N, long N_A) {
    return entanglement_report(g, N, N_A).S_A;
}
double operator_entanglement(const GroupModel& g, long N, long N_A) {
    return entanglement_report(g, N, N_A).O_op;
}

MpdoBounds mpdo_bounds(const GroupModel& g, long N, long N_A) {
    MpdoBounds b;
    b.D = std::exp(operator_entanglement(g, N, N_A));
    b.lower = std::sqrt(b.D);
    b.upper = b.D + 1;
    return b;
}

ReducedSpectrum reduced_spectrum(const GroupModel& g, long N, long k) {
    if (k < 1 || k > N - 1) throw ConfigError("k must be in [1, N-1]");
    BigInt C_inv = multiplicity(g, trivial_irrep(g), N);
    if (C_inv == 0)
        throw EmptySectorError("invariant sector is empty for " + g.id + " at N=" +
                               std::to_string(N));
    ReducedSpectrum spec;
    spec.N = N;
    spec.k = k;
    Rational total = 0;
    for (const Irrep& J : irreps_for_sites(g, k)) {
        long d = irrep_dimension(g, J);
        BigInt cb = multiplicity(g, conjugate_irrep(g, J), N - k);
        ReducedBlock b;
        b.J = J;
        b.eigenvalue = Rational(cb, C_inv * d);
        b.eigenvalue.canonicalize();
        b.degeneracy = d * multiplicity(g, J, k);
        total += b.eigenvalue * Rational(b.degeneracy);
        spec.blocks.push_back(std::move(b));
    }
    if (total != 1) throw OracleMismatch("reduced spectrum does not sum to unit trace");
    return spec;
}

double trace_distance_to_identity(const GroupModel& g, const ReducedSpectrum& spec) {
    BigInt dk = 1;
    for (long i = 0; i < spec.k; ++i) dk *= g.onsite_dim;
    Rational uniform(1, dk);
    Rational dist = 0;
    for (const auto& b : spec.blocks) {
        Rational diff = b.eigenvalue - uniform;
        if (diff < 0) diff = -diff;
        dist += Rational(b.degeneracy) * diff;
    }
    dist /= 2;
    return to_double(dist);
}

CorrelatorKind parse_correlator_kind(const std::string& s) {
    if (s == "spin-spin" || s == "su2-spin-spin") return CorrelatorKind::Su2SpinSpin;
    if (s == "s3-zz" || s == "zz") return CorrelatorKind::S3ZZ;
    if (s == "s3-xxyy" || s == "xxyy") return CorrelatorKind::S3XXYY;
    if (s == "s3-zz-quadratic" || s == "zz-quadratic") return CorrelatorKind::S3ZZQuadratic;
    if (s == "s3-xxyy-quadratic" || s == "xxyy-quadratic")
        return CorrelatorKind::S3XXYYQuadratic;
    throw ConfigError("unknown correlator kind: '" + s + "'");
}

double two_point_correlator(const GroupModel& g, long N, CorrelatorKind kind) {
    if (N < 2) throw ConfigError("correlators need N >= 2");
    if (kind == CorrelatorKind::Su2SpinSpin) {
        if (g.family != GroupModel::Family::SU2) throw ConfigError("spin-spin requires su2");
        // <S_i . S_j> = -3 / (4(N-1)), from Casimir(MMIS) = 0
        return to_double(Rational(-3, 4 * (N - 1)));
    }
    if (g.family != GroupModel::Family::Finite || g.id != "s3")
        throw ConfigError("this correlator kind requires the s3 group");
    // C_inv^N = (2^N + 2(-1)^N)/6
    Rational C(multiplicity(g, trivial_irrep(g), N));
    int sgn = (N % 2 == 0) ? 1 : -1;
    switch (kind) {
        case CorrelatorKind::S3ZZ:
            // Tr[P_inv Z_i Z_j] = (-1)^{N+1} exactly
            return to_double(Rational(-sgn) / C);
        case CorrelatorKind::S3XXYY:
            // rotations are traceless against X and Y; reflections vanish
            // through any third site, so the correlator is 0 for N >= 3
            return N == 2 ? 2.0 : 0.0;
        case CorrelatorKind::S3ZZQuadratic:
            if (N < 3) throw ConfigError("quadratic correlators need N >= 3");
            // Tr[P (ZZ) P (ZZ)] = C_inv^N exactly, so the ratio is 1
            return 1.0;
        case CorrelatorKind::S3XXYYQuadratic: {
            if (N < 3) throw ConfigError("quadratic correlators need N >= 3");
            // Tr[P O P O] = (2^N + 8(-1)^N)/3 for O = XX + YY
            Rational num = Rational((BigInt(1) << N) + 8 * sgn, 3);
            num.canonicalize();
            return to_double(num / C);
        }
        default:
            throw ConfigError("unsupported correlator kind");
    }
}

double fidelity_correlator_su2(long N) {
    if (N < 3) throw ConfigError("fidelity correlator needs N >= 3");
    auto g = GroupModel::su2();
    BigInt C_inv = multiplicity(g, trivial_irrep(g), N);
    if (C_inv == 0) throw EmptySectorError("invariant sector is empty for odd N");
    // two-site irreps j in {0, 1}; |c_j - 2 c_V|/2 with c_V = 3/4
    Rational F = 0;
    for (long tj : {0L, 2L}) {
        Irrep J = Irrep::spin_twice(tj);
        Rational weight = casimir_eigenvalue(g, J) - Rational(3, 2);
        if (weight < 0) weight = -weight;
        weight /= 2;
        F += weight * Rational(multiplicity(g, J, 2) * multiplicity(g, J, N - 2), C_inv);
    }
    F.canonicalize();
    return to_double(F);
}

double finite_T_entanglement(const ThermalSpec& spec) {
    if (spec.N_A < 1 || spec.N_B < 1) throw ConfigError("both blocks must be non-empty");
    auto g = GroupModel::su2();
    if (spec.infinite_T)
        return entanglement_of_formation(g, spec.N_A + spec.N_B, spec.N_A);
    if (!(spec.T > 0)) throw ConfigError("temperature must be positive");
    KahanSum numer, Z;
    for (const Irrep& J : irreps_for_sites(g, spec.N_A)) {
        BigInt ca = multiplicity(g, J, spec.N_A);
        BigInt cb = multiplicity(g, J, spec.N_B);
        if (ca == 0 || cb == 0) continue;
        double j = J.twice_j / 2.0;
        double w = std::exp(-2.0 * j * (j + 1.0) / spec.T + log_bigint(ca) + log_bigint(cb));
        Z.add(w);
        numer.add(w * std::log(static_cast<double>(J.twice_j + 1)));
    }
    if (Z.sum <= 0) throw EmptySectorError("no common sector between the blocks");
    return numer.sum / Z.sum;
}

double asymptotic_entanglement_finite_group(const GroupModel& g) {
    if (g.family != GroupModel::Family::Finite)
        throw ConfigError("asymptotic value defined for finite groups");
    const auto& t = *g.table;
    if (!t.irrep_faithful(g.onsite.finite_index))
        throw ConfigError("asymptotic value requires a faithful onsite irrep");
    // p(J) -> f_J f_{J*} / f_inv = d_J^2 |Z|/|G| on irreps trivial on the
    // center; irreps with a different central character drop out of the
    // relevant parity sector entirely
    KahanSum E;
    for (std::size_t j = 0; j < t.num_irreps(); ++j) {
        if (!t.irrep_trivial_on_center(static_cast<int>(j))) continue;
        long d = t.irreps[j].dim;
        Rational p(d * d * t.center_order, t.order);
        E.add(to_double(p) * std::log(static_cast<double>(d)));
    }
    return E.sum;
}

}  // namespace mmis
