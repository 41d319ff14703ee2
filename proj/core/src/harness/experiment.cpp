#include "vaswave/harness/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vaswave/diag/energy.hpp"
#include "vaswave/diag/monitors.hpp"
#include "vaswave/diag/norms.hpp"
#include "vaswave/diag/perturbation.hpp"
#include "vaswave/diag/residuals.hpp"
#include "vaswave/errors.hpp"
#include "vaswave/harness/csv.hpp"
#include "vaswave/model/admissibility.hpp"
#include "vaswave/version.hpp"
#include "vaswave/wave/profile.hpp"

namespace fs = std::filesystem;

namespace vaswave {

namespace {

std::string now_iso() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const RunManifest& m) {
    nlohmann::json j;
    j["version"] = m.version;
    j["start_time"] = m.start_time;
    j["end_time"] = m.end_time;
    j["exit_status"] = m.exit_status;
    j["error"] = m.error;
    j["x0"] = m.x0;
    nlohmann::json snaps = nlohmann::json::array();
    for (size_t i = 0; i < m.snapshot_times.size(); ++i) {
        snaps.push_back({{"t", m.snapshot_times[i]}, {"row", i}});
    }
    j["snapshots"] = snaps;
    j["files"] = m.files;
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : m.config_echo) cfg[k] = v;
    j["config"] = cfg;
    j["config_file"] = "resolved_config.cfg";

    std::ofstream out(fs::path(m.out_dir) / "manifest.json", std::ios::binary);
    if (!out) throw IoError("cannot write manifest.json in " + m.out_dir);
    out << j.dump(2) << "\n";
}

void write_resolved_config(const ExperimentConfig& cfg) {
    std::ofstream out(fs::path(cfg.out_dir) / "resolved_config.cfg",
                      std::ios::binary);
    if (!out) throw IoError("cannot write resolved_config.cfg");
    for (const auto& [k, v] : cfg.echo()) out << k << "=" << v << "\n";
}

}  // namespace

const std::vector<std::string>& snapshot_columns() {
    static const std::vector<std::string> cols = [] {
        std::vector<std::string> c{"t"};
        for (const char* f : {"rho", "m", "phi"}) {
            c.push_back(std::string(f) + "_diff_linf");
            c.push_back(std::string(f) + "_diff_l2");
            c.push_back(std::string("d") + f + "_diff_linf");
            c.push_back(std::string("d") + f + "_diff_l2");
        }
        for (int k = 0; k <= 3; ++k) c.push_back("v_l2_k" + std::to_string(k));
        for (int k = 0; k <= 2; ++k) c.push_back("m_l2_k" + std::to_string(k));
        for (int k = 0; k <= 3; ++k) c.push_back("phi_l2_k" + std::to_string(k));
        c.insert(c.end(), {"energy", "energy_equiv", "energy_ceq"});
        c.insert(c.end(), {"h_l2", "f_l2", "g_l2", "band_ok"});
        for (int k = 0; k <= 2; ++k) c.push_back("w_vx_k" + std::to_string(k));
        for (int k = 0; k <= 2; ++k) c.push_back("w_phi_k" + std::to_string(k));
        for (int k = 0; k <= 2; ++k) c.push_back("w_vt_k" + std::to_string(k));
        c.insert(c.end(), {"v_right", "x0"});
        return c;
    }();
    return cols;
}

const std::vector<DecaySeriesSpec>& decay_series_specs() {
    static const std::vector<DecaySeriesSpec> specs = {
        {"rho_linf", "rho_diff_linf", -0.75, false},
        {"drho_linf", "drho_diff_linf", -1.25, false},
        {"m_linf", "m_diff_linf", -1.25, false},
        {"dm_linf", "dm_diff_linf", -1.75, false},
        {"phi_linf", "phi_diff_linf", -0.75, false},
        {"dphi_linf", "dphi_diff_linf", -1.25, false},
        {"vx_l2", "rho_diff_l2", -0.5, false},
        {"m_l2", "m_diff_l2", -1.0, false},
        {"phi_l2", "phi_diff_l2", -0.5, false},
        {"g_sq", "g_l2", -1.5, true},
    };
    return specs;
}

const std::vector<double>* SeriesTable::find(const std::string& name) const {
    for (const auto& [n, v] : cols) {
        if (n == name) return &v;
    }
    return nullptr;
}

namespace {

SeriesTable decay_series_from(const SeriesTable& snap) {
    SeriesTable out;
    out.t = snap.t;
    for (const auto& spec : decay_series_specs()) {
        const std::vector<double>* col = snap.find(spec.column);
        if (!col) continue;
        std::vector<double> v = *col;
        if (spec.squared) {
            for (double& x : v) x *= x;
        }
        out.cols.emplace_back(spec.name, std::move(v));
    }
    return out;
}

void write_decay_report(const std::string& out_dir, const SeriesTable& series,
                        const FitWindow& window) {
    CsvWriter csv(fs::path(out_dir) / "decay_report.csv",
                  {"series", "exponent", "r2", "theory_exponent", "status"});
    for (const auto& spec : decay_series_specs()) {
        const std::vector<double>* v = series.find(spec.name);
        if (!v) continue;
        std::string status = "ok";
        double expn = std::nan(""), r2 = std::nan("");
        // values at the double-precision noise floor carry no decay signal
        double vmax = 0.0;
        for (size_t i = 0; i < series.t.size(); ++i) {
            if (series.t[i] >= window.t_lo - 1e-9 &&
                series.t[i] <= window.t_hi + 1e-9) {
                vmax = std::max(vmax, (*v)[i]);
            }
        }
        try {
            if (vmax < 1e-12) throw NonpositiveValues("series at noise floor");
            const DecayFit fit = fit_decay(series.t, *v, window);
            expn = fit.exponent;
            r2 = fit.r2;
        } catch (const NonpositiveValues&) {
            status = "degenerate";
        } catch (const DegenerateFit&) {
            status = "degenerate";
        } catch (const WindowTooNarrow&) {
            status = "window_too_narrow";
        }
        csv.row(spec.name, {format_g17(expn), format_g17(r2),
                            format_g17(spec.theory), status});
    }
}

}  // namespace

void emit_plotdata(const std::string& out_dir, const SeriesTable& table,
                   const std::vector<std::string>& series, bool strict) {
    const fs::path dir = fs::path(out_dir) / "plotdata";
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string());

    std::vector<std::string> written;
    for (const auto& name : series) {
        const std::vector<double>* v = table.find(name);
        if (!v) {
            if (strict) throw MissingSeries("no series named '" + name + "'");
            continue;
        }
        size_t n_pos = 0;
        for (double x : *v) {
            if (x > 0.0) ++n_pos;
        }
        if (n_pos == 0) {
            if (strict) throw MissingSeries("series '" + name + "' has no positive samples");
            continue;
        }
        std::ofstream out(dir / (name + ".dat"), std::ios::binary);
        if (!out) throw IoError("cannot write plot data for " + name);
        for (size_t i = 0; i < table.t.size(); ++i) {
            if (!((*v)[i] > 0.0)) continue;
            out << format_g17(std::log10(1.0 + table.t[i])) << " "
                << format_g17(std::log10((*v)[i])) << "\n";
        }
        written.push_back(name);
    }

    std::ofstream gp(fs::path(out_dir) / "plot.gp", std::ios::binary);
    if (!gp) throw IoError("cannot write plot.gp");
    gp << "# gnuplot commands for the decay series (log10-log10 data)\n";
    gp << "set xlabel 'log10(1+t)'\n";
    gp << "set ylabel 'log10 value'\n";
    gp << "set key outside\n";
    if (!written.empty()) {
        gp << "plot ";
        for (size_t i = 0; i < written.size(); ++i) {
            if (i) gp << ", \\\n     ";
            gp << "'plotdata/" << written[i] << ".dat' w lp title '"
               << written[i] << "'";
        }
        gp << "\n";
    }
}

SeriesTable read_snapshot_series(const std::string& csv_path) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + csv_path);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty csv " + csv_path);
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) header.push_back(tok);
    }
    if (header.empty() || header[0] != "t") {
        throw IoError("first snapshots.csv column must be t");
    }
    SeriesTable table;
    for (size_t i = 1; i < header.size(); ++i) {
        table.cols.emplace_back(header[i], std::vector<double>{});
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        size_t col = 0;
        while (std::getline(ss, tok, ',')) {
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str()) throw IoError("bad number in " + csv_path);
            if (col == 0) table.t.push_back(v);
            else if (col - 1 < table.cols.size()) table.cols[col - 1].second.push_back(v);
            ++col;
        }
        if (col != header.size()) throw IoError("ragged row in " + csv_path);
    }
    return table;
}

void refit_decay(const std::string& out_dir, const FitWindow& window) {
    const SeriesTable snap =
        read_snapshot_series((fs::path(out_dir) / "snapshots.csv").string());
    write_decay_report(out_dir, decay_series_from(snap), window);
}

RunManifest run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();

    RunManifest man;
    man.out_dir = cfg.out_dir;
    man.version = kVersion;
    man.start_time = now_iso();
    man.config_echo = cfg.echo();

    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + cfg.out_dir);
    write_resolved_config(cfg);
    write_manifest(man);  // status: running

    try {
        const Params prm = cfg.params();
        const PressureModel pm = cfg.pressure();
        check_admissible(prm, pm);

        const WaveProfile wp =
            build_profile(prm, pm, cfg.xi_max, cfg.n_pts, cfg.profile_tol);
        dump_profile_csv(wp, (fs::path(cfg.out_dir) / "profile.csv").string());
        const WaveField wave(wp);

        const Grid grid = cfg.grid();
        const Scheme scheme(grid, prm, pm, cfg.scheme_config());
        const State state0 = scheme.init_state(wave, cfg.init_perturbation());

        double x0 = 0.0;
        if (prm.delta0() > 0.0) x0 = compute_shift(state0.rho, grid, wave);
        man.x0 = x0;

        const double dx = grid.dx();
        const double k_e = cfg.resolved_energy_weight();

        CsvWriter snap_csv((fs::path(cfg.out_dir) / "snapshots.csv").string(),
                           snapshot_columns());
        SeriesTable table;
        for (const auto& name : snapshot_columns()) {
            if (name != "t") table.cols.emplace_back(name, std::vector<double>{});
        }
        std::vector<MonitorSample> monitor_samples;

        auto sink = [&](const State& s) {
            const Perturbation pert = build_perturbation(s, grid, wave, x0);
            std::vector<double> row;
            row.push_back(s.t);

            const NormReport nvx = sobolev_norms(pert.vx, dx, 2);
            const NormReport nm = sobolev_norms(pert.m, dx, 2);
            const NormReport nphi_diff = sobolev_norms(pert.phi, dx, 3);
            for (const NormReport* r : {&nvx, &nm, &nphi_diff}) {
                row.push_back(r->linf[0]);
                row.push_back(r->l2[0]);
                row.push_back(r->linf[1]);
                row.push_back(r->l2[1]);
            }

            const NormReport nv = sobolev_norms(pert.v, dx, 3);
            for (int k = 0; k <= 3; ++k) row.push_back(nv.l2[k]);
            for (int k = 0; k <= 2; ++k) row.push_back(nm.l2[k]);
            for (int k = 0; k <= 3; ++k) row.push_back(nphi_diff.l2[k]);

            const EnergyReport er = energy_functional(pert, grid, wave, pm, k_e);
            row.push_back(er.e_t);
            row.push_back(er.equivalent_norm);
            row.push_back(er.c_eq);

            const ResidualReport rr = residuals(s, grid, wave, pm, x0, pert);
            row.push_back(rr.h_l2);
            row.push_back(rr.f_l2);
            row.push_back(rr.g_l2);
            row.push_back(rr.band_ok ? 1.0 : 0.0);

            MonitorSample ms;
            ms.t = s.t;
            for (int k = 0; k <= 2; ++k) {
                ms.vx_l2[k] = nvx.l2[k];
                ms.phi_l2[k] = nphi_diff.l2[k];
                ms.vt_l2[k] = nm.l2[k];  // ||d^k V_t|| = ||d^k M||
                row.push_back(std::pow(1.0 + s.t, k + 1) * nvx.l2[k] * nvx.l2[k]);
            }
            for (int k = 0; k <= 2; ++k) {
                row.push_back(std::pow(1.0 + s.t, k + 1) * nphi_diff.l2[k] *
                              nphi_diff.l2[k]);
            }
            for (int k = 0; k <= 2; ++k) {
                row.push_back(std::pow(1.0 + s.t, k + 2) * nm.l2[k] * nm.l2[k]);
            }
            monitor_samples.push_back(ms);

            row.push_back(pert.v.back());
            row.push_back(x0);

            snap_csv.row(row);
            table.t.push_back(s.t);
            for (size_t i = 1; i < row.size(); ++i) {
                table.cols[i - 1].second.push_back(row[i]);
            }
            man.snapshot_times.push_back(s.t);
        };

        scheme.run(state0, cfg.t_end, sink);

        const FitWindow window{cfg.resolved_fit_t_min(), cfg.resolved_fit_t_max()};
        const SeriesTable decay_table = decay_series_from(table);
        write_decay_report(cfg.out_dir, decay_table, window);

        {
            CsvWriter mcsv((fs::path(cfg.out_dir) / "monitors.csv").string(),
                           {"name", "weight", "sup", "ts_slope", "bounded"});
            if (monitor_samples.size() >= 10 &&
                (1.0 + monitor_samples.back().t) /
                        (1.0 + monitor_samples.front().t) >=
                    9.5) {
                for (const MonitorRow& r : weighted_monitor(monitor_samples)) {
                    mcsv.row(r.name,
                             {format_g17(r.weight), format_g17(r.sup),
                              format_g17(r.ts_slope), r.bounded ? "1" : "0"});
                }
            }
        }

        std::vector<std::string> names;
        for (const auto& spec : decay_series_specs()) names.push_back(spec.name);
        emit_plotdata(cfg.out_dir, decay_table, names, /*strict=*/false);

        man.files = {"manifest.json",  "resolved_config.cfg", "profile.csv",
                     "snapshots.csv",  "decay_report.csv",    "monitors.csv",
                     "plot.gp"};
        man.exit_status = 0;
        man.end_time = now_iso();
        write_manifest(man);
    } catch (const Error& e) {
        man.error = e.what();
        man.exit_status = e.category() == ErrorCategory::Validation ? 2
                          : e.category() == ErrorCategory::Io       ? 4
                                                                    : 3;
        man.end_time = now_iso();
        write_manifest(man);
        throw;
    } catch (const std::exception& e) {
        man.error = e.what();
        man.exit_status = 1;
        man.end_time = now_iso();
        write_manifest(man);
        throw;
    }
    return man;
}

}  // namespace vaswave
