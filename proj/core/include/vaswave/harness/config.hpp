#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vaswave/model/params.hpp"
#include "vaswave/model/pressure.hpp"
#include "vaswave/solver/grid.hpp"
#include "vaswave/solver/scheme.hpp"

namespace vaswave {

// Fully resolved experiment description. Parsed from a flat key=value file
// (one pair per line, '#' comments); unknown keys are a hard error. Every
// field has a default; the canonical key table lives in config.cpp and is
// printed by the CLI --help.
struct ExperimentConfig {
    // model
    double alpha = 1.0;
    double mu = 1.0;
    double a = 1.0;
    double b = 1.0;
    double dd = 1.0;
    double kappa = 2.0;
    double rho_minus = 0.8;
    double rho_plus = 1.2;
    // wave profile
    double xi_max = 8.0;
    int n_pts = 4001;
    double profile_tol = 1e-9;
    // grid
    double x_min = -400.0;
    double x_max = 400.0;
    int nx = 8192;
    // scheme
    double cfl = 0.45;
    DiffusionMode diffusion_mode = DiffusionMode::Implicit;
    int scheme_order = 2;
    // initial perturbation
    InitPerturbation::Kind perturbation = InitPerturbation::Kind::None;
    double perturbation_shift = 1.0;
    double bump_amplitude = 0.01;
    double bump_center = 0.0;
    double bump_width = 2.0;
    bool bump_zero_mass = false;
    // experiment
    double t_end = 200.0;
    int snapshots = 40;                  // log-spaced in 1+t when the
    std::vector<double> snapshot_times;  // explicit list is empty
    double fit_t_min = -1.0;             // < 0: auto (t_end / 10)
    double fit_t_max = -1.0;             // < 0: auto (t_end)
    double energy_weight = -1.0;         // < 0: auto (4/alpha + 1)
    std::string out_dir = "out";
    long seed = 0;  // reserved for randomized probes

    Params params() const;
    PressureModel pressure() const;
    Grid grid() const;
    SchemeConfig scheme_config() const;  // snapshot times resolved
    InitPerturbation init_perturbation() const;
    std::vector<double> resolved_snapshots() const;
    double resolved_fit_t_min() const { return fit_t_min < 0 ? t_end / 10.0 : fit_t_min; }
    double resolved_fit_t_max() const { return fit_t_max < 0 ? t_end : fit_t_max; }
    double resolved_energy_weight() const {
        return energy_weight < 0 ? 4.0 / alpha + 1.0 : energy_weight;
    }

    // Checks every module-level invariant reachable from the config,
    // including structural admissibility and the wave/boundary separation.
    void validate() const;

    // Canonical (key, value) echo; loading the echo reproduces this config
    // exactly (doubles are printed with 17 significant digits).
    std::vector<std::pair<std::string, std::string>> echo() const;
};

// Parse + defaults + validate(). ParseError carries the line number.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& text,
                              const std::string& origin = "<string>");

}  // namespace vaswave
