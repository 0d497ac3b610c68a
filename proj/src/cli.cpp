#include "circlephase/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "circlephase/density.hpp"
#include "circlephase/dynamics.hpp"
#include "circlephase/phasespace.hpp"
#include "circlephase/specialfn.hpp"
#include "circlephase/state.hpp"
#include "circlephase/verify.hpp"
#include "circlephase/version.hpp"

namespace circlephase::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kEmitPeriodicityTol = 1e-10;

/// Fixed 17-significant-digit float formatting, locale-independent: CSV
/// output must be byte-identical across runs.
std::string format17(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

struct CommonOptions {
    double radius = 1.0;
    double sigma = 0.1;
    std::string sigma_sweep;  // "lo:hi:count", empty means no sweep
    double a_re = 1.0;
    double a_im = 0.0;
    int n_max = 32;
    int panels = 2048;
    double time = 0.0;
    std::string k_spec;
    int x_points = 128;
    std::string output_dir = ".";
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--radius", opt.radius, "circle radius r");
    cmd->add_option("--sigma", opt.sigma, "dimensionless flux sigma");
    cmd->add_option("--a-re", opt.a_re, "Re A of the Gaussian parameter");
    cmd->add_option("--a-im", opt.a_im, "Im A of the Gaussian parameter");
    cmd->add_option("--nmax", opt.n_max, "basis truncation n_max");
    cmd->add_option("--panels", opt.panels, "Simpson panels (even)");
    cmd->add_option("--output-dir", opt.output_dir, "directory for output files");
    cmd->add_option("--format", opt.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

struct SweepSpec {
    double lo = 0.0;
    double hi = 1.0;
    int count = 64;
};

SweepSpec parse_sweep(const std::string& spec) {
    SweepSpec sweep;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(spec);
    if (!(in >> sweep.lo >> colon1 >> sweep.hi >> colon2 >> sweep.count) ||
        colon1 != ':' || colon2 != ':' || !in.eof() || sweep.count < 1)
        throw std::invalid_argument("--sigma-sweep expects lo:hi:count");
    return sweep;
}

struct IndexRange {
    int lo = 0;
    int hi = 0;
};

/// "lo:hi" or a single value; a single value v means [-|v|, |v|] when
/// `symmetric`, the single row [v, v] otherwise.
IndexRange parse_index_range(const std::string& spec, bool symmetric) {
    IndexRange range;
    const auto colon = spec.find(':');
    try {
        if (colon == std::string::npos) {
            const int v = std::stoi(spec);
            range = symmetric ? IndexRange{-std::abs(v), std::abs(v)}
                              : IndexRange{v, v};
        } else {
            range.lo = std::stoi(spec.substr(0, colon));
            range.hi = std::stoi(spec.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--k expects an integer or lo:hi");
    }
    if (range.lo > range.hi)
        throw std::invalid_argument("--k range is empty");
    return range;
}

std::vector<double> sample_half_open(double length, int count) {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i) xs[i] = length * i / count;
    return xs;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

json manifest_skeleton(const std::string& command, const CommonOptions& opt) {
    json m;
    m["tool"] = "circlephase";
    m["version"] = circlephase::version;
    m["command"] = command;
    json params;
    params["radius"] = opt.radius;
    params["sigma"] = opt.sigma;
    params["sigma-sweep"] = opt.sigma_sweep;
    params["a-re"] = opt.a_re;
    params["a-im"] = opt.a_im;
    params["nmax"] = opt.n_max;
    params["panels"] = opt.panels;
    params["time"] = opt.time;
    params["k"] = opt.k_spec;
    params["x-points"] = opt.x_points;
    params["output-dir"] = opt.output_dir;
    params["format"] = opt.format;
    m["parameters"] = std::move(params);
    m["outputs"] = json::array();
    return m;
}

void finish_manifest(json& manifest, const std::vector<std::string>& outputs,
                     const fs::path& dir, const std::string& name) {
    for (const auto& f : outputs) manifest["outputs"].push_back(f);
    write_file(dir / name, manifest.dump(2) + "\n");
}

/// Long-format table that serializes either as CSV (header + records) or as
/// a JSON document with the same columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const {
        std::string text;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) text += ',';
            text += columns[c];
        }
        text += '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) text += ',';
                text += format17(row[c]);
            }
            text += '\n';
        }
        return text;
    }

    std::string to_json(const CommonOptions& opt) const {
        json doc;
        doc["columns"] = columns;
        doc["config"] = {{"radius", opt.radius},
                         {"sigma", opt.sigma},
                         {"nmax", opt.n_max},
                         {"panels", opt.panels},
                         {"time", opt.time}};
        doc["rows"] = rows;
        return doc.dump(2) + "\n";
    }
};

std::string table_filename(const std::string& base, const CommonOptions& opt) {
    return base + (opt.format == "csv" ? ".csv" : ".json");
}

void emit_table(const Table& table, const CommonOptions& opt,
                const fs::path& dir, const std::string& base,
                std::vector<std::string>& outputs) {
    const std::string name = table_filename(base, opt);
    write_file(dir / name,
               opt.format == "csv" ? table.to_csv() : table.to_json(opt));
    outputs.push_back(name);
}

void require_all_finite(const Table& table) {
    for (const auto& row : table.rows)
        for (double v : row)
            if (!std::isfinite(v))
                throw std::runtime_error("emitter self-check: non-finite value");
}

MomentumState build_state(const CommonOptions& opt, double sigma) {
    const CircleConfig cfg(opt.radius, sigma, opt.n_max, opt.panels);
    MomentumState state = zak_state(cfg, GaussianParams{{opt.a_re, opt.a_im}});
    if (opt.time != 0.0) state = evolve_free(state, {opt.time, +1});
    return state;
}

Table state_table(const MomentumState& state) {
    Table table;
    table.columns = {"n", "p", "re", "im", "abs2"};
    const CircleConfig& cfg = state.config();
    for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
        const cdouble c = state.coeff(n);
        table.rows.push_back({double(n), cfg.momentum(n), c.real(), c.imag(),
                              std::norm(c)});
    }
    return table;
}

int cmd_state(const CommonOptions& opt, const std::string& command,
              std::ostream& err) {
    const fs::path dir(opt.output_dir);
    fs::create_directories(dir);
    const MomentumState state = build_state(opt, opt.sigma);

    if (command == "evolve") {
        // two-route self-check: phase evolution against the closed form
        const MomentumState closed = evolved_zak_coefficients(
            state.config(), GaussianParams{{opt.a_re, opt.a_im}}, opt.time);
        const double dev =
            (state.coeffs() - closed.coeffs()).cwiseAbs().maxCoeff();
        if (dev > 1e-12) {
            err << "evolve self-check failed: two evolution routes differ by "
                << dev << "\n";
            return 2;
        }
    }
    if (std::abs(state.norm_squared() - 1.0) > 1e-12) {
        err << command << " self-check failed: state norm deviates from 1\n";
        return 2;
    }

    const Table table = state_table(state);
    require_all_finite(table);

    std::vector<std::string> outputs;
    const std::string base = command == "state" ? "state" : "evolved_state";
    emit_table(table, opt, dir, base, outputs);
    json manifest = manifest_skeleton(command, opt);
    finish_manifest(manifest, outputs, dir, command + "_manifest.json");
    return 0;
}

int cmd_wigner(const CommonOptions& opt, std::ostream& err) {
    const fs::path dir(opt.output_dir);
    fs::create_directories(dir);
    const IndexRange nr = parse_index_range(opt.k_spec, true);
    const std::vector<double> sigmas =
        opt.sigma_sweep.empty()
            ? std::vector<double>{opt.sigma}
            : [&] {
                  const SweepSpec sweep = parse_sweep(opt.sigma_sweep);
                  std::vector<double> out(sweep.count);
                  for (int i = 0; i < sweep.count; ++i)
                      out[i] = sweep.lo + (sweep.hi - sweep.lo) * i / sweep.count;
                  return out;
              }();
    const bool sweeping = !opt.sigma_sweep.empty();

    Table table;
    table.columns = sweeping
                        ? std::vector<std::string>{"x", "sigma", "n", "p", "w"}
                        : std::vector<std::string>{"x", "n", "p", "w"};
    for (double sigma : sigmas) {
        const MomentumState state = build_state(opt, sigma);
        const DensityOperator rho = density_from_pure(state);
        const CircleConfig& cfg = state.config();
        if (!cfg.in_basis(nr.lo) || !cfg.in_basis(nr.hi))
            throw std::invalid_argument("--k range exceeds the basis");
        const std::vector<double> xs =
            sample_half_open(cfg.circumference(), opt.x_points);
        const PhaseGrid grid = wigner_grid(rho, xs, nr.lo, nr.hi);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (int n = nr.lo; n <= nr.hi; ++n) {
                const double w = grid.at(i, std::size_t(n - nr.lo)).real();
                // emit-time periodicity check, period pi r
                const double translated =
                    wigner_function(rho, xs[i] + pi * cfg.radius(), n);
                if (std::abs(w - translated) > kEmitPeriodicityTol) {
                    err << "wigner self-check failed: period pi*r violated at x="
                        << xs[i] << " n=" << n << "\n";
                    return 2;
                }
                if (sweeping)
                    table.rows.push_back(
                        {xs[i], sigma, double(n), cfg.momentum(n), w});
                else
                    table.rows.push_back({xs[i], double(n), cfg.momentum(n), w});
            }
        }
    }
    require_all_finite(table);

    std::vector<std::string> outputs;
    emit_table(table, opt, dir, "wigner_grid", outputs);
    json manifest = manifest_skeleton("wigner", opt);
    finish_manifest(manifest, outputs, dir, "wigner_manifest.json");
    return 0;
}

int cmd_weyl(const CommonOptions& opt, std::ostream& err) {
    const fs::path dir(opt.output_dir);
    fs::create_directories(dir);
    const IndexRange kr = parse_index_range(opt.k_spec, false);
    const std::vector<double> sigmas =
        opt.sigma_sweep.empty()
            ? std::vector<double>{opt.sigma}
            : [&] {
                  const SweepSpec sweep = parse_sweep(opt.sigma_sweep);
                  std::vector<double> out(sweep.count);
                  for (int i = 0; i < sweep.count; ++i)
                      out[i] = sweep.lo + (sweep.hi - sweep.lo) * i / sweep.count;
                  return out;
              }();
    const bool sweeping = !opt.sigma_sweep.empty();

    Table table;
    table.columns =
        sweeping
            ? std::vector<std::string>{"alpha", "sigma", "k", "re", "im", "abs"}
            : std::vector<std::string>{"alpha", "k", "re", "im", "abs"};
    for (double sigma : sigmas) {
        const MomentumState state = build_state(opt, sigma);
        const DensityOperator rho = density_from_pure(state);
        const CircleConfig& cfg = state.config();
        const std::vector<double> alphas =
            sample_half_open(cfg.circumference(), opt.x_points);
        const PhaseGrid grid = weyl_grid(rho, alphas, kr.lo, kr.hi);
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            for (int k = kr.lo; k <= kr.hi; ++k) {
                const cdouble w = grid.at(i, std::size_t(k - kr.lo));
                // emit-time quasi-periodicity check across one full period
                const cdouble factor = (k % 2 == 0 ? 1.0 : -1.0) *
                                       std::polar(1.0, -2.0 * pi * sigma);
                const cdouble translated = weyl_function(
                    rho, alphas[i] + cfg.circumference(), k);
                if (std::abs(translated - factor * w) > kEmitPeriodicityTol) {
                    err << "weyl self-check failed: quasi-periodicity violated "
                           "at alpha="
                        << alphas[i] << " k=" << k << "\n";
                    return 2;
                }
                if (sweeping)
                    table.rows.push_back({alphas[i], sigma, double(k), w.real(),
                                          w.imag(), std::abs(w)});
                else
                    table.rows.push_back(
                        {alphas[i], double(k), w.real(), w.imag(), std::abs(w)});
            }
        }
    }
    require_all_finite(table);

    std::vector<std::string> outputs;
    emit_table(table, opt, dir, "weyl_grid", outputs);
    json manifest = manifest_skeleton("weyl", opt);
    finish_manifest(manifest, outputs, dir, "weyl_manifest.json");
    return 0;
}

int cmd_marginals(const CommonOptions& opt, std::ostream& err) {
    const fs::path dir(opt.output_dir);
    fs::create_directories(dir);
    const MomentumState state = build_state(opt, opt.sigma);
    const DensityOperator rho = density_from_pure(state);
    const CircleConfig& cfg = state.config();

    Table momentum;
    momentum.columns = {"n", "p", "value"};
    double total = 0.0;
    for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
        const double value = wigner_marginal_momentum(rho, n, opt.panels);
        total += value;
        momentum.rows.push_back({double(n), cfg.momentum(n), value});
    }
    if (std::abs(total - 1.0) > 1e-8) {
        err << "marginals self-check failed: momentum marginal sums to " << total
            << "\n";
        return 2;
    }

    Table position;
    position.columns = {"x", "value"};
    for (double x : sample_half_open(cfg.circumference(), opt.x_points))
        position.rows.push_back({x, wigner_marginal_position(rho, x)});

    require_all_finite(momentum);
    require_all_finite(position);

    std::vector<std::string> outputs;
    emit_table(momentum, opt, dir, "marginal_momentum", outputs);
    emit_table(position, opt, dir, "marginal_position", outputs);
    json manifest = manifest_skeleton("marginals", opt);
    finish_manifest(manifest, outputs, dir, "marginals_manifest.json");
    return 0;
}

int cmd_verify(const CommonOptions& opt, std::ostream& out) {
    VerifyOptions options;
    options.radius = opt.radius;
    options.sigma = opt.sigma;
    options.n_max = opt.n_max;
    options.panels = opt.panels;
    options.a = cdouble(opt.a_re, opt.a_im);
    const VerifyReport report = run_identity_suite(options);
    print_report(report, out);
    return report.all_pass() ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"phase-space toolkit for a charged particle on a circle"};
    app.require_subcommand(1);

    CommonOptions state_opt, wigner_opt, weyl_opt, marg_opt, evolve_opt,
        verify_opt;
    wigner_opt.k_spec = "-5:5";
    weyl_opt.k_spec = "1";
    evolve_opt.time = 1.0;

    CLI::App* state_cmd =
        app.add_subcommand("state", "emit momentum coefficients of the state");
    add_common_flags(state_cmd, state_opt);

    CLI::App* wigner_cmd =
        app.add_subcommand("wigner", "emit a Wigner function grid");
    add_common_flags(wigner_cmd, wigner_opt);
    wigner_cmd->add_option("--sigma-sweep", wigner_opt.sigma_sweep,
                           "sweep sigma as lo:hi:count");
    wigner_cmd->add_option("--time", wigner_opt.time, "evolution time");
    wigner_cmd->add_option("--k", wigner_opt.k_spec,
                           "momentum index range lo:hi (or v for [-v,v])");
    wigner_cmd->add_option("--x-points", wigner_opt.x_points,
                           "position samples over one period");

    CLI::App* weyl_cmd = app.add_subcommand("weyl", "emit a Weyl function grid");
    add_common_flags(weyl_cmd, weyl_opt);
    weyl_cmd->add_option("--sigma-sweep", weyl_opt.sigma_sweep,
                         "sweep sigma as lo:hi:count");
    weyl_cmd->add_option("--time", weyl_opt.time, "evolution time");
    weyl_cmd->add_option("--k", weyl_opt.k_spec,
                         "momentum increment range lo:hi (or a single k)");
    weyl_cmd->add_option("--x-points", weyl_opt.x_points,
                         "displacement samples over one period");

    CLI::App* marg_cmd = app.add_subcommand(
        "marginals", "emit position and momentum marginals of the Wigner grid");
    add_common_flags(marg_cmd, marg_opt);
    marg_cmd->add_option("--time", marg_opt.time, "evolution time");
    marg_cmd->add_option("--x-points", marg_opt.x_points,
                         "position samples over one period");

    CLI::App* evolve_cmd = app.add_subcommand(
        "evolve", "emit momentum coefficients after free evolution");
    add_common_flags(evolve_cmd, evolve_opt);
    evolve_cmd->add_option("--time", evolve_opt.time, "evolution time");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the closed-form identity suite and report deviations");
    add_common_flags(verify_cmd, verify_opt);

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(std::move(argv));
    } catch (const CLI::ParseError& e) {
        std::stringstream capture_out, capture_err;
        const int code = app.exit(e, capture_out, capture_err);
        out << capture_out.str();
        err << capture_err.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (state_cmd->parsed()) return cmd_state(state_opt, "state", err);
        if (wigner_cmd->parsed()) return cmd_wigner(wigner_opt, err);
        if (weyl_cmd->parsed()) return cmd_weyl(weyl_opt, err);
        if (marg_cmd->parsed()) return cmd_marginals(marg_opt, err);
        if (evolve_cmd->parsed()) return cmd_state(evolve_opt, "evolve", err);
        if (verify_cmd->parsed()) return cmd_verify(verify_opt, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand given\n";
    return 1;
}

}  // namespace circlephase::cli
