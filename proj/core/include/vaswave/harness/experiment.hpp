#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vaswave/diag/decay.hpp"
#include "vaswave/harness/config.hpp"

namespace vaswave {

// Column-oriented time series extracted from (or destined for) snapshots.csv.
struct SeriesTable {
    std::vector<double> t;
    std::vector<std::pair<std::string, std::vector<double>>> cols;

    const std::vector<double>* find(const std::string& name) const;
};

struct RunManifest {
    std::string out_dir;
    std::string version;
    std::string start_time;
    std::string end_time;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<double> snapshot_times;
    std::vector<std::string> files;
    double x0 = 0.0;
    int exit_status = -1;  // -1 while running
    std::string error;
};

// Decay series derived from the snapshot table, with the predicted
// asymptotic exponents. g_sq is the squared L^2 norm of the wave residual g.
struct DecaySeriesSpec {
    const char* name;
    const char* column;  // snapshots.csv column it derives from
    double theory;
    bool squared;  // series = column^2
};
const std::vector<DecaySeriesSpec>& decay_series_specs();

// Full pipeline: profile -> initial data -> time integration with
// per-snapshot diagnostics -> decay fits, monitors and plot data. Writes
// manifest.json, resolved_config.cfg, profile.csv, snapshots.csv,
// decay_report.csv, monitors.csv and plotdata/ under cfg.out_dir. Failures
// are recorded in the manifest (nonzero exit_status) and rethrown.
RunManifest run_experiment(const ExperimentConfig& cfg);

// Re-fit the decay report from an existing snapshots.csv.
void refit_decay(const std::string& out_dir, const FitWindow& window);

// Two-column (log10(1+t), log10 value) files plus a gnuplot commands file.
// Strict mode throws MissingSeries when a requested series has no positive
// samples; the run pipeline uses permissive mode and skips such series.
void emit_plotdata(const std::string& out_dir, const SeriesTable& table,
                   const std::vector<std::string>& series, bool strict);

SeriesTable read_snapshot_series(const std::string& csv_path);

// Frozen snapshots.csv column order.
const std::vector<std::string>& snapshot_columns();

}  // namespace vaswave
