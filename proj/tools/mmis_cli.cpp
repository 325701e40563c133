// mmis: exact representation-theoretic entanglement of maximally mixed
// invariant states, with a dense channel simulator as numeric cross-check.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mmis/analytics.hpp"
#include "mmis/errors.hpp"
#include "mmis/group.hpp"
#include "mmis/multiplicity.hpp"
#include "mmis/sim/channel.hpp"
#include "mmis/sim/projector.hpp"
#include "mmis/sim/runner.hpp"
#include "mmis/sim/steady.hpp"

using json = nlohmann::json;
using namespace mmis;

namespace {

std::string sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// "N", "lo:hi" or "lo:hi:step", inclusive of hi when it lands on the grid
std::vector<long> parse_sites(const std::string& s) {
    std::vector<long> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        try {
            parts.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw ConfigError("bad site count '" + tok + "'");
        }
    }
    if (parts.empty() || parts.size() > 3) throw ConfigError("bad --sites range '" + s + "'");
    if (parts.size() == 1) return parts;
    long lo = parts[0], hi = parts[1], step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0 || hi < lo) throw ConfigError("bad --sites range '" + s + "'");
    std::vector<long> out;
    for (long n = lo; n <= hi; n += step) out.push_back(n);
    return out;
}

long worker_count(std::size_t tasks) {
    long w = static_cast<long>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MMIS_WORKERS")) {
        try {
            w = std::stol(env);
        } catch (const std::exception&) {
            throw ConfigError("MMIS_WORKERS is not an integer");
        }
        if (w < 1) throw ConfigError("MMIS_WORKERS must be >= 1");
    }
    if (w < 1) w = 1;
    return std::min<long>(w, static_cast<long>(tasks));
}

// evaluates fn(i) for i in [0, n) on the worker pool; results land in a
// pre-sized slot table so output order is independent of completion order
template <typename F>
void parallel_for(long n, F&& fn) {
    if (n <= 0) return;
    long w = worker_count(static_cast<std::size_t>(n));
    if (w == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    std::vector<std::thread> pool;
    for (long t = 0; t < w; ++t)
        pool.emplace_back([&, t] {
            try {
                for (long i = next++; i < n; i = next++) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw ConfigError("cannot open output file '" + path + "'");
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

double base_factor(const std::string& base) {
    if (base == "e") return 1.0;
    if (base == "2") return std::log(2.0);
    throw ConfigError("log base must be 'e' or '2'");
}

sim::Boundary parse_boundary(const std::string& b, const std::string& model) {
    if (b == "periodic") return sim::Boundary::Periodic;
    if (b == "open") return sim::Boundary::Open;
    if (!b.empty()) throw ConfigError("boundary must be 'periodic' or 'open'");
    // per-model defaults: the singlet-triplet chain is studied on a ring,
    // the S3 circuits on an open chain
    return model == "su2-singlet-triplet" ? sim::Boundary::Periodic : sim::Boundary::Open;
}

std::string default_sector(const std::string& model) {
    return model == "su2-singlet-triplet" ? "j=0" : "inv";
}

std::string projector_group(const std::string& model) {
    return model == "su2-singlet-triplet" ? "su2" : "s3";
}

sim::DensityMatrix initial_state(const std::string& model, long n) {
    return model == "su2-singlet-triplet" ? sim::dimer_state(n) : sim::s3_pair_state(n);
}

void dump_state(const sim::DensityMatrix& rho, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open dump file '" + path + "'");
    auto put32 = [&](std::uint32_t v) {
        unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16),
                              static_cast<unsigned char>(v >> 24)};
        out.write(reinterpret_cast<const char*>(b), 4);
    };
    put32(static_cast<std::uint32_t>(rho.n_sites));
    put32(static_cast<std::uint32_t>(rho.local_dim));
    for (long i = 0; i < rho.dim(); ++i)  // row-major
        for (long j = 0; j < rho.dim(); ++j) {
            double re = rho.data(i, j).real(), im = rho.data(i, j).imag();
            out.write(reinterpret_cast<const char*>(&re), sizeof(double));
            out.write(reinterpret_cast<const char*>(&im), sizeof(double));
        }
}

struct FitResult {
    double slope = 0, intercept = 0;
    long points_used = 0;
};

// least squares of E against ln N, restricted to the upper half of the N
// range to suppress additive finite-size terms
FitResult fit_upper_half(std::vector<std::pair<long, double>> data) {
    if (data.size() < 4) throw ConfigError("slope fit needs at least 4 points");
    long lo = data[0].first, hi = data[0].first;
    for (auto& [n, e] : data) {
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    if (lo == hi) throw ConfigError("degenerate fit: all points share one N");
    double mid = (lo + hi) / 2.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long m = 0;
    for (auto& [n, e] : data) {
        if (n < mid) continue;
        double x = std::log(static_cast<double>(n));
        sx += x;
        sy += e;
        sxx += x * x;
        sxy += x * e;
        ++m;
    }
    double det = m * sxx - sx * sx;
    if (m < 2 || std::abs(det) < 1e-14) throw ConfigError("degenerate fit");
    FitResult r;
    r.slope = (m * sxy - sx * sy) / det;
    r.intercept = (sy * sxx - sx * sxy) / det;
    r.points_used = m;
    return r;
}

std::vector<std::pair<long, double>> read_fit_csv(const std::string& path) {
    std::ifstream fin;
    std::istream* in = &std::cin;
    if (path != "-") {
        fin.open(path);
        if (!fin) throw ConfigError("cannot open input file '" + path + "'");
        in = &fin;
    }
    std::vector<std::pair<long, double>> data;
    std::string line;
    int col_n = 0, col_e = 1;
    bool header_done = false;
    while (std::getline(*in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) fields.push_back(tok);
        if (!header_done) {
            header_done = true;
            bool is_header = false;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (fields[i] == "N") {
                    col_n = static_cast<int>(i);
                    is_header = true;
                }
                if (fields[i] == "E") {
                    col_e = static_cast<int>(i);
                    is_header = true;
                }
            }
            if (is_header) continue;
        }
        if (static_cast<int>(fields.size()) <= std::max(col_n, col_e))
            throw ConfigError("short CSV row: '" + line + "'");
        try {
            data.push_back({std::stol(fields[col_n]), std::stod(fields[col_e])});
        } catch (const std::exception&) {
            throw ConfigError("bad CSV row: '" + line + "'");
        }
    }
    return data;
}

// --config file.json supplies defaults; explicit flags override because the
// injected arguments come first and every option takes the last value
std::vector<std::string> merge_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_path = args[i + 1];
    if (config_path.empty()) return args;

    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw ConfigError("config file must hold a JSON object");

    std::vector<std::string> injected;
    for (auto& [key, value] : cfg.items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) injected.push_back("--" + key);
            continue;
        }
        injected.push_back("--" + key);
        injected.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
    // insert right after the subcommand token
    std::size_t pos = 0;
    while (pos < args.size() && !args[pos].empty() && args[pos][0] == '-') ++pos;
    if (pos < args.size()) ++pos;
    args.insert(args.begin() + static_cast<long>(pos), injected.begin(), injected.end());
    return args;
}

void ent_row(std::ostream& os, const GroupModel& g, long N, long cut, double bf,
             const std::string& base, bool nan_on_empty) {
    os << g.id << ',' << N << ',' << cut << ',';
    try {
        auto rep = entanglement_report(g, N, cut);
        os << sig12(rep.E / bf) << ',' << sig12(rep.S_A / bf) << ',' << sig12(rep.E_neg / bf)
           << ',' << sig12(rep.O_op / bf) << ',' << sig12(rep.H_p / bf);
    } catch (const EmptySectorError&) {
        if (!nan_on_empty) throw;
        os << "nan,nan,nan,nan,nan";  // row kept so sweeps have a fixed shape
    }
    os << ',' << base << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"exact entanglement structure of maximally mixed invariant states"};
    app.require_subcommand(1);

    std::string group = "su2", sites = "4", irrep, base = "e", out_path, config_path;
    std::string model = "su2-singlet-triplet", boundary, sector, kind = "spin-spin";
    std::string temperature = "inf", input_path, dump_path;
    long cut = -1, k = 2, steps = 200, na = 4, nb = 4;
    unsigned long seed = 0;
    double tol = 1e-8, q = 0.5, phi1 = M_PI, phi2 = M_PI / 2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file with option defaults");
        sub->add_option("--out", out_path, "output path (default stdout)");
        return sub;
    };

    auto* c_mult = add_common(app.add_subcommand("mult", "exact irrep multiplicities"));
    c_mult->add_option("--group", group);
    c_mult->add_option("--irrep", irrep)->required();
    c_mult->add_option("--sites", sites);

    auto* c_ent = add_common(app.add_subcommand("ent", "MMIS entanglement report"));
    c_ent->add_option("--group", group);
    c_ent->add_option("--sites", sites);
    c_ent->add_option("--cut", cut, "block size N_A (default N/2)");
    c_ent->add_option("--base", base, "log base: e or 2");

    auto* c_slope = add_common(app.add_subcommand("slope-fit", "fit E against ln N"));
    c_slope->add_option("--input", input_path, "CSV with N and E columns ('-' for stdin)");
    c_slope->add_option("--group", group);
    c_slope->add_option("--sites", sites, "range for a generated analytic sweep");

    auto* c_sim = add_common(app.add_subcommand("simulate", "dense channel evolution run log"));
    c_sim->add_option("--model", model, "su2-singlet-triplet | s3-measure | s3-unitary");
    c_sim->add_option("--sites", sites);
    c_sim->add_option("--boundary", boundary, "periodic | open (default per model)");
    c_sim->add_option("--steps", steps, "timestep cap");
    c_sim->add_option("--tol", tol, "convergence threshold on f(t)");
    c_sim->add_option("--seed", seed, "seed for stochastic paths");
    c_sim->add_option("--sector", sector, "reference sector (default per model)");
    c_sim->add_option("--q", q, "unitary-mixture probability (s3-unitary)");
    c_sim->add_option("--phi1", phi1);
    c_sim->add_option("--phi2", phi2);
    c_sim->add_option("--dump-state", dump_path, "binary dump of the final state");

    auto* c_steady = add_common(app.add_subcommand("steady-check", "superoperator fixed points"));
    c_steady->add_option("--model", model);
    c_steady->add_option("--sites", sites);
    c_steady->add_option("--boundary", boundary);
    c_steady->add_option("--sector", sector);
    c_steady->add_option("--q", q);
    c_steady->add_option("--phi1", phi1);
    c_steady->add_option("--phi2", phi2);

    auto* c_corr = add_common(app.add_subcommand("correlator", "exact MMIS two-point functions"));
    c_corr->add_option("--group", group);
    c_corr->add_option("--sites", sites);
    c_corr->add_option("--kind", kind);

    auto* c_ft = add_common(app.add_subcommand("finite-t", "finite-temperature entanglement"));
    c_ft->add_option("--na", na);
    c_ft->add_option("--nb", nb);
    c_ft->add_option("--temperature", temperature, "positive number or 'inf'");
    c_ft->add_option("--base", base);

    auto* c_red = add_common(app.add_subcommand("reduced", "k-site reduced MMIS spectrum"));
    c_red->add_option("--group", group);
    c_red->add_option("--sites", sites);
    c_red->add_option("--k", k);

    auto* c_fid = add_common(app.add_subcommand("fidelity", "SU(2) fidelity correlator"));
    c_fid->add_option("--sites", sites);

    auto* c_mpdo = add_common(app.add_subcommand("mpdo-bounds", "MPDO bond-dimension bounds"));
    c_mpdo->add_option("--group", group);
    c_mpdo->add_option("--sites", sites);
    c_mpdo->add_option("--cut", cut);

    for (auto* sub : app.get_subcommands({}))
        for (auto* opt : sub->get_options())
            opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    auto args = merge_config(argc, argv);
    std::vector<const char*> cargs = {argv[0]};
    for (auto& a : args) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output output(out_path);
    std::ostream& os = output.stream();

    if (*c_mult) {
        auto g = GroupModel::named(group);
        Irrep J = parse_irrep(g, irrep);
        auto Ns = parse_sites(sites);
        if (Ns.size() == 1) {
            os << multiplicity(g, J, Ns[0]).get_str() << '\n';
        } else {
            std::vector<std::string> rows(Ns.size());
            parallel_for(static_cast<long>(Ns.size()), [&](long i) {
                rows[i] = multiplicity(g, J, Ns[i]).get_str();
            });
            os << "group,irrep,N,multiplicity\n";
            for (std::size_t i = 0; i < Ns.size(); ++i)
                os << group << ',' << irrep << ',' << Ns[i] << ',' << rows[i] << '\n';
        }
        return 0;
    }

    if (*c_ent) {
        auto g = GroupModel::named(group);
        double bf = base_factor(base);
        auto Ns = parse_sites(sites);
        os << "group,N,N_A,E,S_A,E_neg,O_op,H_p,base\n";
        std::vector<std::string> rows(Ns.size());
        bool sweep = Ns.size() > 1;
        parallel_for(static_cast<long>(Ns.size()), [&](long i) {
            long N = Ns[i];
            long c = cut >= 0 ? cut : N / 2;
            if (c > N) throw ConfigError("cut exceeds the chain length");
            std::ostringstream row;
            ent_row(row, g, N, c, bf, base, sweep);
            rows[i] = row.str();
        });
        for (auto& r : rows) os << r;
        return 0;
    }

    if (*c_slope) {
        std::vector<std::pair<long, double>> data;
        bool have_group = c_slope->count("--group") > 0;
        if (!input_path.empty()) {
            data = read_fit_csv(input_path);
        } else {
            if (!have_group || c_slope->count("--sites") == 0)
                throw ConfigError("slope-fit needs --input or --group with a --sites range");
            auto g = GroupModel::named(group);
            auto Ns = parse_sites(sites);
            data.resize(Ns.size());
            parallel_for(static_cast<long>(Ns.size()), [&](long i) {
                data[i] = {Ns[i], entanglement_of_formation(g, Ns[i], Ns[i] / 2)};
            });
        }
        auto fit = fit_upper_half(data);
        json rep = {{"slope", fit.slope},
                    {"intercept", fit.intercept},
                    {"points_used", fit.points_used}};
        if (have_group || input_path.empty()) {
            auto g = GroupModel::named(group);
            rep["predicted_slope"] = g.is_lie() ? to_double(predicted_log_slope(g)) : 0.0;
        }
        os << rep.dump(2) << '\n';
        return 0;
    }

    if (*c_sim) {
        auto Ns = parse_sites(sites);
        if (Ns.size() != 1) throw ConfigError("simulate takes a single --sites value");
        long N = Ns[0];
        auto bound = parse_boundary(boundary, model);
        auto program = sim::program_by_name(model, N, bound, q, phi1, phi2);
        if (sector.empty()) sector = default_sector(model);
        auto proj = sim::build_projector(projector_group(model), N, sector);
        sim::RunOptions opts;
        opts.max_steps = steps;
        opts.tol = tol;
        auto res = sim::run_to_steady(program, initial_state(model, N),
                                      std::optional<sim::SectorProjector>(proj), opts);
        os << "t,f_t,logneg_halfchain,trace_dist_to_mmis,sector_leakage\n";
        for (const auto& rec : res.log)
            os << rec.t << ',' << sig12(rec.f_t) << ',' << sig12(rec.logneg_halfchain) << ','
               << sig12(rec.trace_dist_to_mmis) << ',' << sig12(rec.sector_leakage) << '\n';
        const auto& last = res.log.back();
        os << "# final logneg=" << sig12(last.logneg_halfchain)
           << " trace_dist_to_mmis=" << sig12(last.trace_dist_to_mmis)
           << " converged=" << (res.converged ? 1 : 0) << " steps=" << res.steps << '\n';
        if (!dump_path.empty()) dump_state(res.final_state, dump_path);
        return 0;
    }

    if (*c_steady) {
        auto Ns = parse_sites(sites);
        if (Ns.size() != 1) throw ConfigError("steady-check takes a single --sites value");
        long N = Ns[0];
        auto program = sim::program_by_name(model, N, parse_boundary(boundary, model), q, phi1,
                                            phi2);
        if (sector.empty()) sector = default_sector(model);
        auto proj = sim::build_projector(projector_group(model), N, sector);
        auto rep = sim::steady_state_analysis(program, proj);
        json j = {{"model", model},
                  {"sites", N},
                  {"sector", sector},
                  {"fixed_point_count", rep.fixed_point_count},
                  {"gap", rep.gap}};
        if (rep.fixed_point_count == 1)
            j["dist_to_projected_identity"] = rep.dist_to_projected_identity;
        os << j.dump(2) << '\n';
        return 0;
    }

    if (*c_corr) {
        auto g = GroupModel::named(group);
        auto Ns = parse_sites(sites);
        if (Ns.size() != 1) throw ConfigError("correlator takes a single --sites value");
        os << sig12(two_point_correlator(g, Ns[0], parse_correlator_kind(kind))) << '\n';
        return 0;
    }

    if (*c_ft) {
        ThermalSpec spec;
        spec.N_A = na;
        spec.N_B = nb;
        if (temperature == "inf" || temperature == "infinite") {
            spec.infinite_T = true;
        } else {
            try {
                spec.T = std::stod(temperature);
            } catch (const std::exception&) {
                throw ConfigError("bad --temperature '" + temperature + "'");
            }
        }
        os << sig12(finite_T_entanglement(spec) / base_factor(base)) << '\n';
        return 0;
    }

    if (*c_red) {
        auto g = GroupModel::named(group);
        auto Ns = parse_sites(sites);
        if (Ns.size() != 1) throw ConfigError("reduced takes a single --sites value");
        auto spec = reduced_spectrum(g, Ns[0], k);
        json blocks = json::array();
        for (const auto& b : spec.blocks)
            blocks.push_back({{"irrep", irrep_label(g, b.J)},
                              {"eigenvalue_num", b.eigenvalue.get_num().get_str()},
                              {"eigenvalue_den", b.eigenvalue.get_den().get_str()},
                              {"degeneracy", b.degeneracy.get_str()}});
        json j = {{"k", spec.k},
                  {"N", spec.N},
                  {"blocks", blocks},
                  {"trace_distance_to_identity", trace_distance_to_identity(g, spec)}};
        os << j.dump(2) << '\n';
        return 0;
    }

    if (*c_fid) {
        auto Ns = parse_sites(sites);
        if (Ns.size() == 1) {
            os << sig12(fidelity_correlator_su2(Ns[0])) << '\n';
        } else {
            std::vector<double> vals(Ns.size());
            parallel_for(static_cast<long>(Ns.size()), [&](long i) {
                vals[i] = fidelity_correlator_su2(Ns[i]);
            });
            os << "N,fidelity\n";
            for (std::size_t i = 0; i < Ns.size(); ++i)
                os << Ns[i] << ',' << sig12(vals[i]) << '\n';
        }
        return 0;
    }

    if (*c_mpdo) {
        auto g = GroupModel::named(group);
        auto Ns = parse_sites(sites);
        if (Ns.size() != 1) throw ConfigError("mpdo-bounds takes a single --sites value");
        long N = Ns[0];
        long c = cut >= 0 ? cut : N / 2;
        auto b = mpdo_bounds(g, N, c);
        json j = {{"group", g.id},
                  {"N", N},
                  {"N_A", c},
                  {"bond_dimension", b.D},
                  {"lower", b.lower},
                  {"upper", b.upper}};
        os << j.dump(2) << '\n';
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const EmptySectorError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
