#include "vaswave/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vaswave/errors.hpp"
#include "vaswave/harness/csv.hpp"
#include "vaswave/model/admissibility.hpp"

namespace vaswave {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') {
        throw ParseError("line " + std::to_string(line) +
                         ": not a number: '" + v + "'");
    }
    return d;
}

long parse_long(const std::string& v, int line) {
    char* end = nullptr;
    const long d = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0') {
        throw ParseError("line " + std::to_string(line) +
                         ": not an integer: '" + v + "'");
    }
    return d;
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ParseError("line " + std::to_string(line) +
                     ": expected true/false: '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, int line) {
    std::vector<double> out;
    if (trim(v).empty()) return out;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_double(trim(tok), line));
    return out;
}

std::string join_list(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_g17(v[i]);
    }
    return s;
}

}  // namespace

Params ExperimentConfig::params() const {
    return Params(alpha, mu, a, b, dd, rho_minus, rho_plus);
}

PressureModel ExperimentConfig::pressure() const {
    return PressureModel::quadratic(kappa, params());
}

Grid ExperimentConfig::grid() const { return Grid(x_min, x_max, nx); }

std::vector<double> ExperimentConfig::resolved_snapshots() const {
    if (!snapshot_times.empty()) {
        std::vector<double> v = snapshot_times;
        std::sort(v.begin(), v.end());
        return v;
    }
    std::vector<double> v;
    if (t_end <= 0.0) return v;
    const double l = std::log1p(t_end);
    for (int j = 1; j <= snapshots; ++j) {
        double t = std::expm1(l * j / snapshots);
        if (j == snapshots) t = t_end;
        v.push_back(t);
    }
    return v;
}

SchemeConfig ExperimentConfig::scheme_config() const {
    SchemeConfig sc;
    sc.cfl = cfl;
    sc.diffusion_mode = diffusion_mode;
    sc.order = scheme_order;
    sc.snapshot_times = resolved_snapshots();
    return sc;
}

InitPerturbation ExperimentConfig::init_perturbation() const {
    InitPerturbation p;
    p.kind = perturbation;
    p.shift = perturbation_shift;
    p.amplitude = bump_amplitude;
    p.center = bump_center;
    p.width = bump_width;
    p.zero_mass = bump_zero_mass;
    return p;
}

void ExperimentConfig::validate() const {
    Params prm = params();  // throws InvalidParams on nonpositive constants
    try {
        check_admissible(prm, pressure());
    } catch (const AdmissibilityViolation& e) {
        throw ValidationError(std::string("admissibility condition failed: ") +
                              e.what());
    }
    grid().validate();
    scheme_config().validate();
    if (!(xi_max > 0)) throw ValidationError("xi_max must be positive");
    if (n_pts < 201) throw ValidationError("n_pts must be >= 201");
    if (!(profile_tol > 0)) throw ValidationError("profile_tol must be positive");
    if (!(t_end >= 0)) throw ValidationError("t_end must be nonnegative");
    if (snapshots < 1) throw ValidationError("snapshots must be >= 1");
    if (!(bump_width > 0)) throw ValidationError("bump_width must be positive");
    if (fit_t_min >= 0 && fit_t_max >= 0 && fit_t_min >= fit_t_max) {
        throw ValidationError("fit_t_min must be below fit_t_max");
    }
    const double ew = resolved_energy_weight();
    if (!(alpha * ew > 1.0)) {
        throw ValidationError("energy_weight must satisfy alpha * k_e > 1");
    }
    for (double ts : snapshot_times) {
        if (ts < 0 || ts > t_end) {
            throw ValidationError("snapshot times must lie in [0, t_end]");
        }
    }

    // wave support must stay well away from the Dirichlet boundaries
    double off = 0.0;
    if (perturbation == InitPerturbation::Kind::Shift) {
        off = std::abs(perturbation_shift);
    } else if (perturbation == InitPerturbation::Kind::Bump) {
        off = std::abs(bump_center) + bump_width;
    }
    const double spread = std::sqrt(1.0 + t_end);
    const double reach = xi_max * spread + off + 10.0 * spread;
    if (x_max < reach || -x_min < reach) {
        throw ValidationError(
            "domain too small: wave support plus a 10 sqrt(1+t_end) margin "
            "reaches " + format_g17(reach) + " but the boundary sits at " +
            format_g17(std::min(x_max, -x_min)));
    }
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::echo() const {
    auto g = format_g17;
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("alpha", g(alpha));
    kv.emplace_back("mu", g(mu));
    kv.emplace_back("a", g(a));
    kv.emplace_back("b", g(b));
    kv.emplace_back("dd", g(dd));
    kv.emplace_back("kappa", g(kappa));
    kv.emplace_back("rho_minus", g(rho_minus));
    kv.emplace_back("rho_plus", g(rho_plus));
    kv.emplace_back("xi_max", g(xi_max));
    kv.emplace_back("n_pts", std::to_string(n_pts));
    kv.emplace_back("profile_tol", g(profile_tol));
    kv.emplace_back("x_min", g(x_min));
    kv.emplace_back("x_max", g(x_max));
    kv.emplace_back("nx", std::to_string(nx));
    kv.emplace_back("cfl", g(cfl));
    kv.emplace_back("diffusion_mode",
                    diffusion_mode == DiffusionMode::Implicit ? "implicit"
                                                              : "explicit");
    kv.emplace_back("scheme_order", std::to_string(scheme_order));
    const char* pk = perturbation == InitPerturbation::Kind::None    ? "none"
                     : perturbation == InitPerturbation::Kind::Shift ? "shift"
                                                                     : "bump";
    kv.emplace_back("perturbation", pk);
    kv.emplace_back("perturbation_shift", g(perturbation_shift));
    kv.emplace_back("bump_amplitude", g(bump_amplitude));
    kv.emplace_back("bump_center", g(bump_center));
    kv.emplace_back("bump_width", g(bump_width));
    kv.emplace_back("bump_zero_mass", bump_zero_mass ? "true" : "false");
    kv.emplace_back("t_end", g(t_end));
    kv.emplace_back("snapshots", std::to_string(snapshots));
    kv.emplace_back("snapshot_times", join_list(resolved_snapshots()));
    kv.emplace_back("fit_t_min", g(resolved_fit_t_min()));
    kv.emplace_back("fit_t_max", g(resolved_fit_t_max()));
    kv.emplace_back("energy_weight", g(resolved_energy_weight()));
    kv.emplace_back("out_dir", out_dir);
    kv.emplace_back("seed", std::to_string(seed));
    return kv;
}

ExperimentConfig parse_config(const std::string& text,
                              const std::string& origin) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::vector<std::string> seen;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw ParseError(origin + " line " + std::to_string(line) +
                             ": expected key=value");
        }
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw ParseError(origin + " line " + std::to_string(line) +
                             ": duplicate key '" + key + "'");
        }
        seen.push_back(key);

        if (key == "alpha") cfg.alpha = parse_double(val, line);
        else if (key == "mu") cfg.mu = parse_double(val, line);
        else if (key == "a") cfg.a = parse_double(val, line);
        else if (key == "b") cfg.b = parse_double(val, line);
        else if (key == "dd") cfg.dd = parse_double(val, line);
        else if (key == "kappa") cfg.kappa = parse_double(val, line);
        else if (key == "rho_minus") cfg.rho_minus = parse_double(val, line);
        else if (key == "rho_plus") cfg.rho_plus = parse_double(val, line);
        else if (key == "xi_max") cfg.xi_max = parse_double(val, line);
        else if (key == "n_pts") cfg.n_pts = static_cast<int>(parse_long(val, line));
        else if (key == "profile_tol") cfg.profile_tol = parse_double(val, line);
        else if (key == "x_min") cfg.x_min = parse_double(val, line);
        else if (key == "x_max") cfg.x_max = parse_double(val, line);
        else if (key == "nx") cfg.nx = static_cast<int>(parse_long(val, line));
        else if (key == "cfl") cfg.cfl = parse_double(val, line);
        else if (key == "diffusion_mode") {
            if (val == "implicit") cfg.diffusion_mode = DiffusionMode::Implicit;
            else if (val == "explicit") cfg.diffusion_mode = DiffusionMode::Explicit;
            else throw ParseError(origin + " line " + std::to_string(line) +
                                  ": diffusion_mode must be explicit|implicit");
        } else if (key == "scheme_order") {
            cfg.scheme_order = static_cast<int>(parse_long(val, line));
        } else if (key == "perturbation") {
            if (val == "none") cfg.perturbation = InitPerturbation::Kind::None;
            else if (val == "shift") cfg.perturbation = InitPerturbation::Kind::Shift;
            else if (val == "bump") cfg.perturbation = InitPerturbation::Kind::Bump;
            else throw ParseError(origin + " line " + std::to_string(line) +
                                  ": perturbation must be none|shift|bump");
        }
        else if (key == "perturbation_shift") cfg.perturbation_shift = parse_double(val, line);
        else if (key == "bump_amplitude") cfg.bump_amplitude = parse_double(val, line);
        else if (key == "bump_center") cfg.bump_center = parse_double(val, line);
        else if (key == "bump_width") cfg.bump_width = parse_double(val, line);
        else if (key == "bump_zero_mass") cfg.bump_zero_mass = parse_bool(val, line);
        else if (key == "t_end") cfg.t_end = parse_double(val, line);
        else if (key == "snapshots") cfg.snapshots = static_cast<int>(parse_long(val, line));
        else if (key == "snapshot_times") cfg.snapshot_times = parse_list(val, line);
        else if (key == "fit_t_min") cfg.fit_t_min = parse_double(val, line);
        else if (key == "fit_t_max") cfg.fit_t_max = parse_double(val, line);
        else if (key == "energy_weight") cfg.energy_weight = parse_double(val, line);
        else if (key == "out_dir") cfg.out_dir = val;
        else if (key == "seed") cfg.seed = parse_long(val, line);
        else {
            throw ParseError(origin + " line " + std::to_string(line) +
                             ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace vaswave
