// speclab: spectral-instability laboratory CLI.
//
// One binary, one flat key=value config format, CSV/SVG artifacts, and a
// manifest per run that reproduces the run byte-for-byte when fed back via
// --config.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "speclab/config.hpp"
#include "speclab/csv.hpp"
#include "speclab/errors.hpp"
#include "speclab/grushin.hpp"
#include "speclab/linalg.hpp"
#include "speclab/oscillator.hpp"
#include "speclab/parallel.hpp"
#include "speclab/pseudospectrum.hpp"
#include "speclab/quasimode.hpp"
#include "speclab/random_weyl.hpp"
#include "speclab/rng.hpp"
#include "speclab/svg.hpp"
#include "speclab/torus2d.hpp"
#include "speclab/zero_count.hpp"

namespace fs = std::filesystem;
using namespace speclab;

namespace {

struct RunContext {
    Config config;
    fs::path out_dir;
    uint64_t seed = 1;
    int workers = 1;
    std::string subcommand;
    std::vector<std::pair<std::string, uint64_t>> artifacts; // name, checksum
};

void write_artifact(RunContext& ctx, const std::string& name,
                    const std::string& content) {
    fs::path path = ctx.out_dir / name;
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ConfigError("cannot write artifact: " + path.string());
        out << content;
    }
    ctx.artifacts.emplace_back(name, file_checksum(path.string()));
}

void write_manifest(RunContext& ctx) {
    ctx.config.set("run.subcommand", Config::json(ctx.subcommand));
    ctx.config.set("run.seed", Config::json(ctx.seed));
    ctx.config.set("run.workers", Config::json(ctx.workers));
    std::ostringstream os;
    os << "# speclab run manifest; feed back with --config to reproduce\n";
    os << ctx.config.render();
    for (const auto& [name, sum] : ctx.artifacts) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(sum));
        os << "# artifact " << name << " fnv64=" << buf << "\n";
    }
    std::ofstream out(ctx.out_dir / "manifest.txt", std::ios::binary);
    out << os.str();
}

std::set<std::string> common_keys() {
    return {"run.subcommand", "run.seed", "run.workers"};
}

void add_symbol_keys(std::set<std::string>& keys, const Config& c,
                     const std::string& prefix = "symbol") {
    symbol_from_config(c, prefix, &keys); // fills known key names
}

RegionSpec region_from_config(const Config& c, const std::string& key,
                              const std::vector<double>& fallback) {
    std::vector<double> r = c.number_list(key, fallback);
    if (r.size() != 4)
        throw ConfigError("'" + key + "' must be [xmin, xmax, ymin, ymax]");
    return RegionSpec::rectangle(r[0], r[1], r[2], r[3]);
}

cplx complex_from_list(const Config& c, const std::string& key, cplx fallback) {
    if (!c.has(key)) return fallback;
    std::vector<double> v = c.number_list(key);
    if (v.size() != 2) throw ConfigError("'" + key + "' must be [re, im]");
    return {v[0], v[1]};
}

// ---------------------------------------------------------------- pseudospec

void run_pseudospec(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    add_symbol_keys(keys, c);
    keys.insert({"pseudospec.h", "pseudospec.K", "pseudospec.grid",
                 "pseudospec.nx", "pseudospec.ny", "pseudospec.contours",
                 "pseudospec.failed_nodes"});
    c.require_known(keys);

    Symbol1D symbol = symbol_from_config(c, "symbol");
    const double h = c.number("pseudospec.h", 0.1);
    const int K = static_cast<int>(c.integer("pseudospec.K", 40));
    std::vector<double> grid =
        c.number_list("pseudospec.grid", {-1.5, 1.5, -1.0, 1.0});
    if (grid.size() != 4) throw ConfigError("pseudospec.grid must have 4 entries");
    const int nx = static_cast<int>(c.integer("pseudospec.nx", 41));
    const int ny = static_cast<int>(c.integer("pseudospec.ny", 31));
    std::vector<double> eps_list =
        c.number_list("pseudospec.contours", {1e-1, 1e-2, 1e-4, 1e-8});

    FourierOperator op = assemble(symbol, h, K);
    PseudospecField field =
        scan(op, grid[0], grid[1], grid[2], grid[3], nx, ny, ctx.workers);

    std::ostringstream csv;
    field_to_csv(field, csv);
    write_artifact(ctx, "pseudospec.csv", csv.str());

    auto contours = level_contours(field, eps_list);
    SvgCanvas svg(grid[0], grid[1], grid[2], grid[3]);
    const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                             "#9467bd", "#8c564b"};
    for (size_t i = 0; i < contours.size(); ++i)
        for (const auto& line : contours[i].polylines)
            svg.polyline(line, palette[i % 6], 1.2);
    Vec ev = eig(op.matrix).eigenvalues;
    for (Eigen::Index i = 0; i < ev.size(); ++i) svg.circle(ev(i), 1.5, "#000000");
    std::ostringstream svgos;
    svg.write(svgos);
    write_artifact(ctx, "contours.svg", svgos.str());

    ctx.config.set("pseudospec.failed_nodes",
                   Config::json(static_cast<long>(field.failed.size())));
}

// ---------------------------------------------------------------- quasimode

void run_quasimode(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    add_symbol_keys(keys, c);
    keys.insert({"quasimode.z", "quasimode.h_list", "quasimode.K_factor",
                 "quasimode.cutoff_radius"});
    c.require_known(keys);

    Symbol1D symbol = symbol_from_config(c, "symbol");
    if (symbol.order() != 1)
        throw HypothesisError("quasimode subcommand needs the model symbol xi + g(x)");
    const PeriodicFunction& g = symbol.coeffs[0];
    const cplx z = complex_from_list(c, "quasimode.z", cplx(0, 0.5));
    std::vector<double> h_list =
        c.number_list("quasimode.h_list", {0.1, 0.05, 0.025});
    const double k_factor = c.number("quasimode.K_factor", 8.0);
    const double radius = c.number("quasimode.cutoff_radius", 0.0);

    std::ostringstream csv;
    csv << "h,K,residual,smin\n";
    std::string profile;
    for (double h : h_list) {
        const int K = static_cast<int>(std::ceil(k_factor / h));
        FourierOperator op = assemble(symbol, h, K);
        WkbQuasimode qm = build_quasimode(g, z, h, K, radius);
        const double r = residual(op, qm);
        Mat shifted = op.matrix;
        shifted.diagonal().array() -= z;
        const double smin = smallest_singular(shifted).s_min;
        csv_cell(csv, h);
        csv << K << ",";
        csv_cell(csv, r);
        csv_cell(csv, smin, true);
        std::ostringstream pr;
        quasimode_to_csv(qm, pr);
        profile = pr.str(); // keep the finest h
    }
    write_artifact(ctx, "quasimode_residuals.csv", csv.str());
    write_artifact(ctx, "quasimode_profile.csv", profile);
}

// --------------------------------------------------------------- grushin-map

void run_grushin_map(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    add_symbol_keys(keys, c);
    keys.insert({"grushin.h", "grushin.K", "grushin.grid", "grushin.nx",
                 "grushin.ny"});
    c.require_known(keys);

    Symbol1D symbol = symbol_from_config(c, "symbol");
    const double h = c.number("grushin.h", 0.25);
    const int K = static_cast<int>(c.integer("grushin.K", 32));
    std::vector<double> grid =
        c.number_list("grushin.grid", {-0.5363, 0.5637, -0.53, 0.53});
    if (grid.size() != 4) throw ConfigError("grushin.grid must have 4 entries");
    const int nx = static_cast<int>(c.integer("grushin.nx", 21));
    const int ny = static_cast<int>(c.integer("grushin.ny", 21));

    FourierOperator op = assemble(symbol, h, K);
    std::vector<GrushinData> rows(static_cast<size_t>(nx) * ny);
    parallel_for(nx * ny, ctx.workers, [&](int t) {
        const int ix = t % nx, iy = t / nx;
        const cplx z(grid[0] + (grid[1] - grid[0]) * ix / (nx - 1.0),
                     grid[2] + (grid[3] - grid[2]) * iy / (ny - 1.0));
        rows[t] = effective_function(op, z);
    });
    std::ostringstream csv;
    csv << "re,im,t0,t1,reEmp,imEmp\n";
    for (const auto& d : rows) grushin_to_csv_row(d, csv);
    write_artifact(ctx, "grushin.csv", csv.str());
}

// ---------------------------------------------------------------- dbar-check

void run_dbar_check(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    add_symbol_keys(keys, c);
    keys.insert({"dbar.z", "dbar.h", "dbar.K", "dbar.steps"});
    c.require_known(keys);

    Symbol1D symbol = symbol_from_config(c, "symbol");
    const cplx z = complex_from_list(c, "dbar.z", cplx(0.1, 0.45));
    const double h = c.number("dbar.h", 0.05);
    const int K = static_cast<int>(c.integer("dbar.K", 80));
    std::vector<double> steps = c.number_list("dbar.steps", {1e-3, 5e-4});

    FourierOperator op = assemble(symbol, h, K);
    std::ostringstream csv;
    csv << "re,im,step,f_re,f_im,residual,scale,relative\n";
    for (double step : steps) {
        DbarSample s = dbar_residual(op.matrix, z, step);
        csv_cell(csv, z.real());
        csv_cell(csv, z.imag());
        csv_cell(csv, step);
        csv_cell(csv, s.f_estimate.real());
        csv_cell(csv, s.f_estimate.imag());
        csv_cell(csv, s.identity_residual);
        csv_cell(csv, s.scale);
        csv_cell(csv, s.identity_residual / s.scale, true);
    }
    write_artifact(ctx, "dbar.csv", csv.str());
}

// ------------------------------------------------------------------ weyl-mc

ExperimentConfig weyl_config_from(const Config& c, uint64_t seed) {
    ExperimentConfig cfg{symbol_from_config(c, "symbol"),
                         c.number_list("weyl.h_list", {0.05}),
                         c.number("weyl.kappa_prime", 4.0),
                         c.number("weyl.C1", 2.0),
                         c.number("weyl.K_factor", 2.0),
                         region_from_config(c, "weyl.region", {-1, 1, -0.5, 0.5}),
                         static_cast<int>(c.integer("weyl.trials", 10)),
                         seed};
    cfg.ring_width = c.number("weyl.ring_width", -1.0);
    cfg.C_cal = c.number("weyl.C_cal", 1.0);
    cfg.volume_resolution =
        static_cast<int>(c.integer("weyl.volume_resolution", 1500));
    return cfg;
}

void run_weyl_mc(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    add_symbol_keys(keys, c);
    keys.insert({"weyl.h_list", "weyl.kappa_prime", "weyl.C1", "weyl.K_factor",
                 "weyl.trials", "weyl.region", "weyl.ring_width", "weyl.C_cal",
                 "weyl.volume_resolution"});
    c.require_known(keys);

    WeylResult r = run_weyl_experiment(weyl_config_from(c, ctx.seed), ctx.workers);
    std::ostringstream trials, summary;
    weyl_trials_to_csv(r, trials);
    weyl_summary_to_csv(r, summary);
    write_artifact(ctx, "weyl_trials.csv", trials.str());
    write_artifact(ctx, "weyl_summary.csv", summary.str());
}

// ------------------------------------------------------------------ weyl-2d

void run_weyl_2d(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    keys.insert({"weyl2d.h", "weyl2d.K2", "weyl2d.L", "weyl2d.delta",
                 "weyl2d.trials", "weyl2d.region", "weyl2d.v_amp",
                 "weyl2d.volume_resolution"});
    c.require_known(keys);

    Torus2DConfig cfg;
    cfg.h = c.number("weyl2d.h", 0.15);
    cfg.K2 = static_cast<int>(c.integer("weyl2d.K2", 10));
    cfg.L = c.number("weyl2d.L", 1.0);
    cfg.delta = c.number("weyl2d.delta", 1e-2);
    cfg.trials = static_cast<int>(c.integer("weyl2d.trials", 4));
    cfg.seed = ctx.seed;
    cfg.region = region_from_config(c, "weyl2d.region", {0.5, 1.5, -0.5, 0.5});
    cfg.v_coeffs = torus_potential_icos(c.number("weyl2d.v_amp", 1.0));
    cfg.volume_resolution =
        static_cast<int>(c.integer("weyl2d.volume_resolution", 400));

    Torus2DResult r = torus2d_demo(cfg, ctx.workers);
    std::ostringstream trials;
    torus_trials_to_csv(r, cfg, trials);
    write_artifact(ctx, "weyl2d_trials.csv", trials.str());

    std::ostringstream summary;
    summary << "h,delta,prediction,baseline_count,mean_count,median_count\n";
    csv_cell(summary, r.h);
    csv_cell(summary, r.delta);
    csv_cell(summary, r.prediction);
    summary << r.baseline_count << ",";
    csv_cell(summary, r.mean_count);
    csv_cell(summary, r.median_count, true);
    write_artifact(ctx, "weyl2d_summary.csv", summary.str());
}

// --------------------------------------------------------------- zero-count

void run_zero_count(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    keys.insert({"zero.roots", "zero.exp_coeffs", "zero.center", "zero.radius",
                 "zero.nodes"});
    c.require_known(keys);

    std::vector<cplx> roots;
    if (c.has("zero.roots")) {
        for (const auto& e : c.raw("zero.roots"))
            roots.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
        roots = {cplx(0.3, 0), cplx(0, -0.4), cplx(0.2, 0.2)};
    }
    std::vector<cplx> expc;
    if (c.has("zero.exp_coeffs"))
        for (const auto& e : c.raw("zero.exp_coeffs"))
            expc.emplace_back(e[0].get<double>(), e[1].get<double>());

    auto f = [&](cplx z) {
        cplx prod = 1.0;
        for (const auto& w : roots) prod *= (z - w);
        cplx expo = 0.0, pw = 1.0;
        for (const auto& a : expc) {
            expo += a * pw;
            pw *= z;
        }
        return prod * std::exp(expo);
    };
    const cplx center = complex_from_list(c, "zero.center", cplx(0, 0));
    const double radius = c.number("zero.radius", 1.0);
    const int nodes = static_cast<int>(c.integer("zero.nodes", 64));
    ZeroCountReport r =
        argument_count(f, ContourSpec::circle(center, radius, nodes));
    std::ostringstream csv;
    report_to_csv(r, csv);
    write_artifact(ctx, "zero_count.csv", csv.str());
}

// -------------------------------------------------------------- hager-verify

void run_hager_verify(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    keys.insert({"hager.h", "hager.eps", "hager.region", "hager.margin",
                 "hager.C_cal"});
    c.require_known(keys);

    const double h = c.number("hager.h", 0.02);
    const double eps = c.number("hager.eps", h);
    RegionSpec region =
        region_from_config(c, "hager.region", {0.013, 1.013, 0.027, 1.027});
    const double margin = c.number("hager.margin", 0.35);
    const double C_cal = c.number("hager.C_cal", 5.0);

    // lattice-product family with density matched to Laplacian(|z|^2/2)
    const double pitch = std::sqrt(kPi * h);
    double a, b, d0, d1;
    region.bounding_box(a, b, d0, d1);
    std::vector<cplx> roots;
    for (long i = std::lround((a - margin) / pitch) - 1;; ++i) {
        const double x = i * pitch;
        if (x > b + margin) break;
        if (x < a - margin) continue;
        for (long j = std::lround((d0 - margin) / pitch) - 1;; ++j) {
            const double y = j * pitch;
            if (y > d1 + margin) break;
            if (y < d0 - margin) continue;
            roots.emplace_back(x, y);
        }
    }
    auto u = [&roots](cplx z) {
        cplx prod = 1.0;
        for (const auto& w : roots) prod *= (z - w);
        return prod;
    };
    auto phi = [](cplx z) { return 0.5 * std::norm(z); };

    std::vector<cplx> boundary;
    const auto& v = region.vertices();
    const double spacing = std::sqrt(eps) * 0.9;
    for (size_t i = 0; i < v.size(); ++i) {
        cplx p0 = v[i], p1 = v[(i + 1) % v.size()];
        const int m =
            std::max(2, static_cast<int>(std::ceil(std::abs(p1 - p0) / spacing)));
        for (int s = 0; s < m; ++s)
            boundary.push_back(p0 + (p1 - p0) * (static_cast<double>(s) / m));
    }
    ZeroCountReport r = hager_verify(u, phi, region, h, eps, boundary, C_cal);
    std::ostringstream csv;
    report_to_csv(r, csv);
    write_artifact(ctx, "hager.csv", csv.str());
}

// ------------------------------------------------------------ resolvent-scan

void run_resolvent_scan(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    keys.insert({"resolvent.n", "resolvent.lambdas", "resolvent.mus",
                 "resolvent.guard"});
    c.require_known(keys);

    const int n = static_cast<int>(c.integer("resolvent.n", 256));
    std::vector<double> lambdas = c.number_list("resolvent.lambdas", {10, 20, 40});
    std::vector<double> mus = c.number_list("resolvent.mus", {0, 1, 2, 4, 6.6});
    const double guard = c.number("resolvent.guard", 3.0);

    HermiteOperator op = build_rotated_oscillator(n);
    auto cells = resolvent_scan(op, lambdas, mus, guard, ctx.workers);
    std::ostringstream csv;
    scan_to_csv(cells, csv);
    write_artifact(ctx, "resolvent.csv", csv.str());
}

// ------------------------------------------------------------- rescale-check

void run_rescale_check(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    keys.insert({"rescale.lambda_list", "rescale.mu_list", "rescale.K"});
    c.require_known(keys);

    std::vector<double> lambdas = c.number_list("rescale.lambda_list", {20.0});
    std::vector<double> mus = c.number_list("rescale.mu_list", {0.0, 3.0});
    const int K = static_cast<int>(c.integer("rescale.K", 160));

    std::ostringstream csv;
    csv << "lambda,mu,lhs,rhs,relative_gap\n";
    for (double lambda : lambdas)
        for (double mu : mus) {
            RescaleCheck r = rescaling_check(lambda, mu, K);
            csv_cell(csv, lambda);
            csv_cell(csv, mu);
            csv_cell(csv, r.lhs);
            csv_cell(csv, r.rhs);
            csv_cell(csv, r.relative_gap, true);
        }
    write_artifact(ctx, "rescale.csv", csv.str());
}

// ------------------------------------------------------------- tail-bound-mc

void run_tail_bound_mc(RunContext& ctx) {
    const Config& c = ctx.config;
    std::set<std::string> keys = common_keys();
    keys.insert({"tail.sigmas", "tail.x_list", "tail.samples"});
    c.require_known(keys);

    std::vector<double> sigmas = c.number_list("tail.sigmas", {1, 1, 1, 1, 1});
    std::vector<double> xs = c.number_list("tail.x_list", {5, 10, 20});
    const long samples = c.integer("tail.samples", 100000);

    Philox rng = Philox::split(ctx.seed, "tail.mc", 0);
    std::vector<double> sums(samples, 0.0);
    for (long s = 0; s < samples; ++s) {
        double acc = 0;
        for (double sigma : sigmas) acc += sigma * sigma * std::norm(rng.gaussian_complex());
        sums[s] = acc;
    }
    std::ostringstream csv;
    csv << "x,bound,empirical,samples\n";
    for (double x : xs) {
        long exceed = 0;
        for (double s : sums)
            if (s >= x) ++exceed;
        csv_cell(csv, x);
        csv_cell(csv, tail_bound(sigmas, x));
        csv_cell(csv, static_cast<double>(exceed) / static_cast<double>(samples));
        csv << samples << "\n";
    }
    write_artifact(ctx, "tail.csv", csv.str());
}

} // namespace

int main(int argc, char** argv) {
    setenv("OPENBLAS_NUM_THREADS", "1", 0);

    CLI::App app{"speclab: pseudospectra, quasimodes, Grushin reductions and "
                 "random-perturbation eigenvalue statistics on the circle"};
    app.require_subcommand(0, 1);

    std::string config_path, out_dir = "out";
    uint64_t seed = 0;
    int workers = 0;
    std::vector<std::string> sets;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--out", out_dir, "output directory");
    CLI::Option* seed_opt = app.add_option("--seed", seed, "64-bit master seed");
    app.add_option("--workers", workers, "worker threads (0: SPECLAB_WORKERS or 1)");
    app.add_option("--set", sets, "override a config key, e.g. --set weyl.trials=5");

    const std::map<std::string, void (*)(RunContext&)> commands = {
        {"pseudospec", run_pseudospec},   {"quasimode", run_quasimode},
        {"grushin-map", run_grushin_map}, {"dbar-check", run_dbar_check},
        {"weyl-mc", run_weyl_mc},         {"weyl-2d", run_weyl_2d},
        {"zero-count", run_zero_count},   {"hager-verify", run_hager_verify},
        {"resolvent-scan", run_resolvent_scan},
        {"rescale-check", run_rescale_check},
        {"tail-bound-mc", run_tail_bound_mc}};
    const std::map<std::string, std::string> descriptions = {
        {"pseudospec", "s_min map over a z-grid plus level contours (CSV + SVG)"},
        {"quasimode", "WKB quasimode profile and residual sweep over h"},
        {"grushin-map", "t0, t1 and the effective function over a z-grid"},
        {"dbar-check", "d-bar identity residual for the effective function"},
        {"weyl-mc", "random-perturbation eigenvalue counts vs the volume law"},
        {"weyl-2d", "2-torus Schroedinger demo of the volume law"},
        {"zero-count", "argument-principle zero count of a product fixture"},
        {"hager-verify", "zero count vs Laplacian mass on the lattice family"},
        {"resolvent-scan", "rotated-oscillator resolvent norms over (lambda, mu)"},
        {"rescale-check", "semiclassical rescaling identity for the oscillator"},
        {"tail-bound-mc", "chi-square tail bound vs Monte-Carlo exceedance"}};
    for (const auto& [name, fn] : commands)
        app.add_subcommand(name, descriptions.at(name))->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        RunContext ctx;
        if (!config_path.empty()) ctx.config = Config::parse_file(config_path);
        for (const auto& s : sets) ctx.config.set_kv(s);

        std::string sub;
        for (const auto& [name, fn] : commands)
            if (app.got_subcommand(name)) sub = name;
        if (sub.empty()) sub = ctx.config.str("run.subcommand", "");
        if (sub.empty())
            throw ConfigError("no subcommand given (and none in the config)");
        if (!commands.count(sub))
            throw ConfigError("unknown subcommand in config: " + sub);
        ctx.subcommand = sub;

        ctx.seed = seed_opt->count() > 0 ? seed : ctx.config.uinteger("run.seed", 1);
        if (workers > 0)
            ctx.workers = workers;
        else if (const char* env = std::getenv("SPECLAB_WORKERS"))
            ctx.workers = std::max(1, std::atoi(env));
        else
            ctx.workers = static_cast<int>(ctx.config.integer("run.workers", 1));

        ctx.out_dir = out_dir;
        fs::create_directories(ctx.out_dir);

        commands.at(sub)(ctx);
        write_manifest(ctx);
        std::cout << "wrote " << ctx.artifacts.size()
                  << " artifact(s) + manifest to " << ctx.out_dir.string() << "\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
