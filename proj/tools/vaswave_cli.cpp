// Command line driver: wave profile construction, full experiments, decay
// re-fitting and admissibility reports.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vaswave/errors.hpp"
#include "vaswave/harness/config.hpp"
#include "vaswave/harness/csv.hpp"
#include "vaswave/harness/experiment.hpp"
#include "vaswave/model/admissibility.hpp"
#include "vaswave/version.hpp"
#include "vaswave/wave/profile.hpp"

namespace fs = std::filesystem;
using namespace vaswave;

namespace {

constexpr const char* kConfigHelp = R"(Config file: flat key=value lines, '#' comments, unknown keys fatal.
Keys and defaults:
  alpha=1 mu=1 a=1 b=1 dd=1 kappa=2 rho_minus=0.8 rho_plus=1.2
  xi_max=8 n_pts=4001 profile_tol=1e-9
  x_min=-400 x_max=400 nx=8192
  cfl=0.45 diffusion_mode=implicit scheme_order=2
  perturbation=none|shift|bump perturbation_shift=1
  bump_amplitude=0.01 bump_center=0 bump_width=2 bump_zero_mass=false
  t_end=200 snapshots=40 snapshot_times=<comma list, overrides snapshots>
  fit_t_min=<t_end/10> fit_t_max=<t_end> energy_weight=<4/alpha+1>
  out_dir=out seed=0
)";

ExperimentConfig config_from(const std::optional<std::string>& path) {
    if (path) return load_config(*path);
    ExperimentConfig cfg;
    cfg.validate();
    return cfg;
}

int exit_code(const Error& e) {
    switch (e.category()) {
        case ErrorCategory::Validation: return 2;
        case ErrorCategory::Numerical: return 3;
        case ErrorCategory::Io: return 4;
    }
    return 1;
}

void cmd_check(const ExperimentConfig& cfg) {
    const Params prm = cfg.params();
    const StructuralCheck sc = check_admissible(prm, cfg.pressure());
    std::printf("admissibility: pass\n");
    std::printf("  band        [%.6g, %.6g]\n", sc.band_lo, sc.band_hi);
    std::printf("  min q'      %.6g\n", sc.dq_min);
    std::printf("  c1, c2      %.12g, %.12g\n", sc.c1, sc.c2);
    std::printf("  delta0      %.6g\n", prm.delta0());
}

void cmd_profile(const ExperimentConfig& cfg) {
    const Params prm = cfg.params();
    const PressureModel pm = cfg.pressure();
    check_admissible(prm, pm);
    const WaveProfile wp =
        build_profile(prm, pm, cfg.xi_max, cfg.n_pts, cfg.profile_tol);
    fs::create_directories(cfg.out_dir);
    const std::string path = (fs::path(cfg.out_dir) / "profile.csv").string();
    dump_profile_csv(wp, path);
    std::printf("profile: %d nodes on [%.3g, %.3g] -> %s\n", wp.n_pts,
                -wp.xi_max, wp.xi_max, path.c_str());
    std::printf("  endpoint defect  %.3e\n", wp.endpoint_err);
    std::printf("  fd residual      %.3e\n", wp.fd_residual());
    if (prm.delta0() > 0.0) {
        const TailFit tf = tail_check(wp);
        std::printf("  tail fit         c = %.4g (r2 = %.6f, %s)\n", tf.c_fit,
                    tf.r2, tf.ok ? "ok" : "suspect");
    }
}

void cmd_run(const ExperimentConfig& cfg) {
    const RunManifest man = run_experiment(cfg);
    std::printf("run complete: %zu snapshots, x0 = %.6g\n",
                man.snapshot_times.size(), man.x0);
    std::ifstream in(fs::path(cfg.out_dir) / "decay_report.csv");
    std::string line;
    while (std::getline(in, line)) std::printf("  %s\n", line.c_str());
}

void cmd_fit(const std::string& out_dir, std::optional<double> t_min,
             std::optional<double> t_max) {
    const SeriesTable snap =
        read_snapshot_series((fs::path(out_dir) / "snapshots.csv").string());
    if (snap.t.empty()) throw ValidationError("snapshots.csv has no rows");
    FitWindow w;
    w.t_hi = t_max.value_or(snap.t.back());
    w.t_lo = t_min.value_or(w.t_hi / 10.0);
    refit_decay(out_dir, w);
    std::printf("decay_report.csv refit over t in [%.6g, %.6g]\n", w.t_lo, w.t_hi);
    std::ifstream in(fs::path(out_dir) / "decay_report.csv");
    std::string line;
    while (std::getline(in, line)) std::printf("  %s\n", line.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D hyperbolic-parabolic chemotaxis waves: simulation and "
                 "decay-rate verification"};
    app.set_version_flag("--version", kVersion);
    app.footer(kConfigHelp);
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::optional<std::string> out_dir;
    std::optional<double> t_end;
    std::optional<int> nx;
    std::optional<int> snapshots;
    std::optional<long> seed;

    auto add_common = [&](CLI::App* sub, bool with_overrides) {
        sub->add_option("--config", config_path, "config file (key=value)");
        sub->add_option("--out", out_dir, "output directory override");
        if (with_overrides) {
            sub->add_option("--t-end", t_end, "horizon override");
            sub->add_option("--nx", nx, "cell count override");
            sub->add_option("--snapshots", snapshots, "snapshot count override");
            sub->add_option("--seed", seed, "rng seed override");
        }
    };

    CLI::App* c_check = app.add_subcommand("check", "admissibility report");
    add_common(c_check, false);
    CLI::App* c_profile =
        app.add_subcommand("profile", "build and dump the wave profile");
    add_common(c_profile, false);
    CLI::App* c_run = app.add_subcommand("run", "full experiment");
    add_common(c_run, true);

    CLI::App* c_fit =
        app.add_subcommand("fit", "re-fit decay rates from snapshots.csv");
    std::string fit_dir;
    std::optional<double> fit_tmin, fit_tmax;
    c_fit->add_option("--out", fit_dir, "directory holding snapshots.csv")
        ->required();
    c_fit->add_option("--t-min", fit_tmin, "fit window lower bound");
    c_fit->add_option("--t-max", fit_tmax, "fit window upper bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_fit->parsed()) {
            cmd_fit(fit_dir, fit_tmin, fit_tmax);
            return 0;
        }
        ExperimentConfig cfg = config_from(config_path);
        if (out_dir) cfg.out_dir = *out_dir;
        if (t_end) cfg.t_end = *t_end;
        if (nx) cfg.nx = *nx;
        if (snapshots) cfg.snapshots = *snapshots;
        if (seed) cfg.seed = *seed;
        cfg.validate();

        if (c_check->parsed()) cmd_check(cfg);
        if (c_profile->parsed()) cmd_profile(cfg);
        if (c_run->parsed()) cmd_run(cfg);
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
