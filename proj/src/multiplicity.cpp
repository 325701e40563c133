#include "mmis/multiplicity.hpp"

#include <sstream>

#include "mmis/errors.hpp"
#include "mmis/young.hpp"

namespace mmis {

namespace {

BigInt finite_multiplicity(const CharacterTable& t, int irrep, int onsite, long N) {
    CharValue acc(0);
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        CharValue term = CharValue(t.classes[c].size) * t.chars[irrep][c].conj() *
                         t.chars[onsite][c].pow(static_cast<unsigned long>(N));
        acc += term;
    }
    if (!acc.is_rational())
        throw CorruptTableError(t.name + ": irrational multiplicity sum");
    Rational q = acc.rational() / t.order;
    q.canonicalize();
    if (q.get_den() != 1 || q < 0)
        throw CorruptTableError(t.name + ": multiplicity sum is not a non-negative integer");
    return q.get_num();
}

BigInt su2_multiplicity(long twice_j, long N) {
    if (twice_j < 0 || twice_j > N || (N - twice_j) % 2 != 0) return 0;
    long k = (N - twice_j) / 2;
    return binomial(N, k) - binomial(N, k - 1);
}

void enumerate_weights(long d, long N, long idx, long used, std::vector<long>& cur,
                       std::vector<std::vector<long>>& out) {
    if (idx == d) {
        if ((N - used) % d == 0) out.push_back(cur);
        return;
    }
    for (long v = 0; idx * v <= N - used; ++v) {
        cur[idx - 1] = v;
        enumerate_weights(d, N, idx + 1, used + idx * v, cur, out);
    }
    cur[idx - 1] = 0;
}

}  // namespace

BigInt multiplicity(const GroupModel& g, const Irrep& J, long N) {
    if (N < 0) throw ConfigError("negative site count");
    switch (g.family) {
        case GroupModel::Family::Finite:
            if (J.kind != Irrep::Kind::Finite) throw ConfigError("irrep kind mismatch");
            return finite_multiplicity(*g.table, J.finite_index, g.onsite.finite_index, N);
        case GroupModel::Family::SU2:
            if (J.kind != Irrep::Kind::Spin) throw ConfigError("irrep kind mismatch");
            return su2_multiplicity(J.twice_j, N);
        case GroupModel::Family::SUd: {
            if (J.kind != Irrep::Kind::Weight) throw ConfigError("irrep kind mismatch");
            return YoungDiagram::from_weight(g.d, J.p, N).sn_dimension();
        }
    }
    throw Error("unreachable");
}

long irrep_dimension(const GroupModel& g, const Irrep& J) {
    switch (g.family) {
        case GroupModel::Family::Finite:
            return g.table->irreps.at(J.finite_index).dim;
        case GroupModel::Family::SU2:
            return J.twice_j + 1;
        case GroupModel::Family::SUd:
            return static_cast<long>(weyl_dimension(g.d, J.p).get_si());
    }
    throw Error("unreachable");
}

Irrep conjugate_irrep(const GroupModel& g, const Irrep& J) {
    switch (g.family) {
        case GroupModel::Family::Finite:
            return Irrep::finite(g.table->conjugate_index(J.finite_index));
        case GroupModel::Family::SU2:
            return J;
        case GroupModel::Family::SUd: {
            std::vector<long> rev(J.p.rbegin(), J.p.rend());
            return Irrep::weight(std::move(rev));
        }
    }
    throw Error("unreachable");
}

Irrep trivial_irrep(const GroupModel& g) {
    switch (g.family) {
        case GroupModel::Family::Finite: {
            const auto& t = *g.table;
            for (std::size_t j = 0; j < t.num_irreps(); ++j) {
                bool all_one = true;
                for (std::size_t c = 0; c < t.num_classes(); ++c)
                    if (!(t.chars[j][c] == CharValue(1))) all_one = false;
                if (all_one) return Irrep::finite(static_cast<int>(j));
            }
            throw CorruptTableError(t.name + ": no trivial irrep");
        }
        case GroupModel::Family::SU2:
            return Irrep::spin_twice(0);
        case GroupModel::Family::SUd:
            return Irrep::weight(std::vector<long>(g.d - 1, 0));
    }
    throw Error("unreachable");
}

std::string irrep_label(const GroupModel& g, const Irrep& J) {
    switch (g.family) {
        case GroupModel::Family::Finite:
            return g.table->irreps.at(J.finite_index).label;
        case GroupModel::Family::SU2:
            if (J.twice_j % 2 == 0) return "j=" + std::to_string(J.twice_j / 2);
            return "j=" + std::to_string(J.twice_j) + "/2";
        case GroupModel::Family::SUd: {
            std::ostringstream os;
            os << "p=";
            for (std::size_t i = 0; i < J.p.size(); ++i) os << (i ? "," : "") << J.p[i];
            return os.str();
        }
    }
    throw Error("unreachable");
}

Irrep parse_irrep(const GroupModel& g, const std::string& label) {
    std::string body = label;
    if (g.family == GroupModel::Family::SU2) {
        if (body.rfind("j=", 0) == 0) body = body.substr(2);
        Rational j = parse_rational(body);
        Rational tj = j * 2;
        tj.canonicalize();
        if (tj.get_den() != 1 || tj < 0) throw ConfigError("bad spin label: '" + label + "'");
        return Irrep::spin_twice(tj.get_num().get_si());
    }
    if (g.family == GroupModel::Family::SUd) {
        if (body.rfind("p=", 0) == 0) body = body.substr(2);
        std::vector<long> p;
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) p.push_back(std::stol(tok));
        if (static_cast<long>(p.size()) != g.d - 1)
            throw ConfigError("weight vector needs " + std::to_string(g.d - 1) + " entries");
        for (long v : p)
            if (v < 0) throw ConfigError("negative weight entry");
        return Irrep::weight(std::move(p));
    }
    return Irrep::finite(g.table->index_of(label));
}

std::vector<Irrep> irreps_for_sites(const GroupModel& g, long N) {
    std::vector<Irrep> out;
    switch (g.family) {
        case GroupModel::Family::Finite:
            for (std::size_t j = 0; j < g.table->num_irreps(); ++j) {
                Irrep J = Irrep::finite(static_cast<int>(j));
                if (multiplicity(g, J, N) > 0) out.push_back(J);
            }
            break;
        case GroupModel::Family::SU2:
            for (long t = N % 2; t <= N; t += 2) out.push_back(Irrep::spin_twice(t));
            break;
        case GroupModel::Family::SUd: {
            std::vector<long> cur(g.d - 1, 0);
            std::vector<std::vector<long>> weights;
            enumerate_weights(g.d, N, 1, 0, cur, weights);
            for (auto& p : weights) {
                Irrep J = Irrep::weight(std::move(p));
                if (multiplicity(g, J, N) > 0) out.push_back(std::move(J));
            }
            break;
        }
    }
    return out;
}

IrrepDistribution irrep_distribution(const GroupModel& g, long N_A, long N_B) {
    if (N_A < 0 || N_B < 0) throw ConfigError("negative block size");
    IrrepDistribution dist;
    dist.group = g;
    dist.N = N_A + N_B;
    dist.N_A = N_A;
    dist.N_B = N_B;
    dist.C_inv = multiplicity(g, trivial_irrep(g), dist.N);
    if (dist.C_inv == 0)
        throw EmptySectorError("invariant sector is empty for " + g.id + " at N=" +
                               std::to_string(dist.N));
    BigInt total = 0;
    Rational prob_sum = 0;
    for (const Irrep& J : irreps_for_sites(g, N_A)) {
        BigInt ca = multiplicity(g, J, N_A);
        BigInt cb = multiplicity(g, conjugate_irrep(g, J), N_B);
        if (ca == 0 || cb == 0) continue;
        Rational p(ca * cb, dist.C_inv);
        p.canonicalize();
        dist.entries.push_back({J, ca, cb, p});
        total += ca * cb;
        prob_sum += p;
    }
    if (total != dist.C_inv || prob_sum != 1)
        throw OracleMismatch("multiplicity factorization identity failed for " + g.id +
                             " N_A=" + std::to_string(N_A) + " N_B=" + std::to_string(N_B));
    return dist;
}

Rational asymptotic_multiplicity_coefficient(const GroupModel& g, const Irrep& J) {
    if (g.family != GroupModel::Family::Finite)
        throw ConfigError("asymptotic multiplicity coefficients require a finite group");
    if (!g.table->irrep_faithful(g.onsite.finite_index))
        throw ConfigError("asymptotic coefficients require a faithful onsite irrep");
    Rational f(g.table->irreps.at(J.finite_index).dim * g.table->center_order, g.table->order);
    f.canonicalize();
    return f;
}

Rational casimir_eigenvalue(const GroupModel& g, const Irrep& J) {
    if (g.family != GroupModel::Family::SU2)
        throw ConfigError("Casimir eigenvalues implemented for SU(2) only");
    Rational c(J.twice_j * (J.twice_j + 2), 4);
    c.canonicalize();
    return c;
}

Rational predicted_log_slope(const GroupModel& g) {
    if (!g.is_lie()) throw ConfigError("log-slope prediction applies to Lie families only");
    Rational s(g.dim_g - g.dim_h, 4);
    s.canonicalize();
    return s;
}

}  // namespace mmis
