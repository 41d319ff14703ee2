#include "vaswave/wave/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "vaswave/errors.hpp"
#include "vaswave/harness/csv.hpp"

namespace vaswave {

namespace {

struct OdeState {
    double phi;
    double psi;  // phi'
};

// phi'' from the profile equation
double phi_second(const PressureModel& pm, double alpha, double xi,
                  const OdeState& y) {
    return -(pm.d2q(y.phi) * y.psi * y.psi + 0.5 * alpha * xi * y.psi) /
           pm.dq(y.phi);
}

struct ShotResult {
    bool overshoot = false;  // left the admissible corridor before +xi_max
    double phi_end = 0.0;
};

// One RK4 sweep across [-xi_max, xi_max]; fills tables when out != nullptr.
ShotResult shoot(const PressureModel& pm, double alpha, double rho_lo,
                 double rho_hi, double xi_max, int n, double slope,
                 std::vector<double>* out_phi, std::vector<double>* out_psi) {
    const double h = 2.0 * xi_max / (n - 1);
    const double phi_cap = rho_hi + 10.0 * (rho_hi - rho_lo) + 1.0;
    OdeState y{rho_lo, slope};
    if (out_phi) {
        (*out_phi)[0] = y.phi;
        (*out_psi)[0] = y.psi;
    }
    auto f = [&](double xi, const OdeState& s) {
        return OdeState{s.psi, phi_second(pm, alpha, xi, s)};
    };
    for (int i = 0; i < n - 1; ++i) {
        const double xi = -xi_max + h * i;
        const OdeState k1 = f(xi, y);
        const OdeState k2 = f(xi + 0.5 * h, {y.phi + 0.5 * h * k1.phi, y.psi + 0.5 * h * k1.psi});
        const OdeState k3 = f(xi + 0.5 * h, {y.phi + 0.5 * h * k2.phi, y.psi + 0.5 * h * k2.psi});
        const OdeState k4 = f(xi + h, {y.phi + h * k3.phi, y.psi + h * k3.psi});
        y.phi += h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
        y.psi += h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi);
        if (!std::isfinite(y.phi) || !std::isfinite(y.psi) || y.phi > phi_cap) {
            return {true, y.phi};
        }
        if (out_phi) {
            (*out_phi)[i + 1] = y.phi;
            (*out_psi)[i + 1] = y.psi;
        }
    }
    return {false, y.phi};
}

}  // namespace

WaveProfile build_profile(const Params& params, const PressureModel& pm,
                          double xi_max, int n_pts, double tol) {
    params.validate();
    if (!(xi_max > 0.0)) throw ValidationError("xi_max must be positive");
    if (n_pts < 201) throw ValidationError("n_pts must be >= 201");
    if (!(tol > 0.0)) throw ValidationError("profile tolerance must be positive");

    WaveProfile wp;
    wp.params = params;
    wp.pm = pm;
    wp.xi_max = xi_max;
    wp.n_pts = n_pts;
    wp.xi.resize(n_pts);
    const double h = wp.h();
    for (int i = 0; i < n_pts; ++i) wp.xi[i] = -xi_max + h * i;

    const double delta = params.delta0();
    if (delta == 0.0) {
        wp.phi.assign(n_pts, params.rho_minus);
        wp.dphi.assign(n_pts, 0.0);
        wp.d2phi.assign(n_pts, 0.0);
        wp.d3phi.assign(n_pts, 0.0);
        return wp;
    }

    // Solve the increasing orientation; reflect afterwards if needed.
    const bool inc = params.rho_plus > params.rho_minus;
    const double rho_lo = params.rho_min();
    const double rho_hi = params.rho_max();

    std::vector<double> phi(n_pts), psi(n_pts);

    // Bracket the initial slope. s = 0 undershoots (phi stays at rho_lo);
    // grow the upper bound until the shot crosses rho_hi.
    double s_lo = 0.0;
    double s_hi = std::max(1e-12, delta / (2.0 * xi_max));
    bool bracketed = false;
    for (int i = 0; i < 600; ++i) {
        const ShotResult r = shoot(pm, params.alpha, rho_lo, rho_hi, xi_max,
                                   n_pts, s_hi, nullptr, nullptr);
        if (r.overshoot || r.phi_end > rho_hi) {
            bracketed = true;
            break;
        }
        s_lo = s_hi;
        s_hi *= 2.0;
        if (!std::isfinite(s_hi)) break;
    }
    if (!bracketed) {
        throw ShootingFailed(
            "no initial slope drives phi across rho_+; xi_max may be too "
            "small or the parameters inadmissible");
    }

    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (s_lo + s_hi);
        if (mid == s_lo || mid == s_hi) break;  // slope pinned to one ulp
        const ShotResult r = shoot(pm, params.alpha, rho_lo, rho_hi, xi_max,
                                   n_pts, mid, nullptr, nullptr);
        if (r.overshoot || r.phi_end > rho_hi) {
            s_hi = mid;
        } else {
            s_lo = mid;
        }
    }

    // Final sweep with the undershooting slope: the trajectory stays inside
    // [rho_lo, rho_hi] and monotone; the endpoint defect is below tol.
    const ShotResult fin = shoot(pm, params.alpha, rho_lo, rho_hi, xi_max,
                                 n_pts, s_lo, &phi, &psi);
    const double err = std::abs(fin.phi_end - rho_hi);
    if (fin.overshoot || !(err <= tol)) {
        throw ToleranceNotMet("endpoint defect " + std::to_string(err) +
                              " exceeds tol after slope bisection");
    }
    wp.shoot_slope = s_lo;
    wp.endpoint_err = err;

    wp.phi.resize(n_pts);
    wp.dphi.resize(n_pts);
    wp.d2phi.resize(n_pts);
    wp.d3phi.resize(n_pts);
    for (int i = 0; i < n_pts; ++i) {
        // reflect xi -> -xi for decreasing waves (the ODE is reflection
        // invariant, so the integrated table is reused with odd-order
        // derivatives negated)
        const int j = inc ? i : n_pts - 1 - i;
        const double sgn = inc ? 1.0 : -1.0;
        const double xi = wp.xi[j];  // integration coordinate of table entry j
        const double f = phi[j];
        const double fp = psi[j];
        const double fpp = phi_second(pm, params.alpha, xi, {f, fp});
        // xi-derivative of the profile equation:
        // q' phi''' = -(3 q'' phi' phi'' + q''' phi'^3 + (alpha/2)(phi' + xi phi''))
        const double fppp = -(3.0 * pm.d2q(f) * fp * fpp +
                              pm.d3q(f) * fp * fp * fp +
                              0.5 * params.alpha * (fp + xi * fpp)) /
                            pm.dq(f);
        wp.phi[i] = f;
        wp.dphi[i] = sgn * fp;
        wp.d2phi[i] = fpp;
        wp.d3phi[i] = sgn * fppp;
    }
    return wp;
}

double WaveProfile::fd_residual() const {
    if (n_pts < 3) return 0.0;
    const double step = h();
    double worst = 0.0;
    for (int i = 1; i + 1 < n_pts; ++i) {
        const double d1 = (phi[i + 1] - phi[i - 1]) / (2.0 * step);
        const double d2 = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (step * step);
        const double r = pm.dq(phi[i]) * d2 + pm.d2q(phi[i]) * d1 * d1 +
                         0.5 * params.alpha * xi[i] * d1;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

TailFit tail_check(const WaveProfile& wp) {
    if (wp.xi_max < 6.0) {
        throw ValidationError("tail_check needs a profile built with xi_max >= 6");
    }
    // Work on the +xi side, where phi -> rho_plus in either orientation.
    const double target = wp.params.rho_plus;
    std::vector<double> xs, ys;
    const double lo = 0.5 * wp.xi_max;
    const double hi = 0.9 * wp.xi_max;
    // deviations below ~1000 ulps of the far field are rounding noise and
    // would skew the regression
    const double floor =
        std::max(1e-290, 1e3 * std::numeric_limits<double>::epsilon() *
                             std::abs(target));
    for (int i = 0; i < wp.n_pts; ++i) {
        if (wp.xi[i] < lo || wp.xi[i] > hi) continue;
        const double dev = std::abs(wp.phi[i] - target);
        if (dev < floor) continue;
        xs.push_back(wp.params.alpha * wp.xi[i] * wp.xi[i]);
        ys.push_back(std::log(dev));
    }
    if (xs.size() < 8) {
        throw InsufficientTail("profile deviation underflows on the fit window");
    }

    // least squares y = c0 - c_fit * (alpha xi^2)
    const size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double icpt = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / n;
    for (size_t i = 0; i < n; ++i) {
        const double fit = icpt + slope * xs[i];
        ss_res += (ys[i] - fit) * (ys[i] - fit);
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    TailFit tf;
    tf.c_fit = -slope;
    tf.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    tf.ok = tf.c_fit > 0.0 && tf.r2 > 0.99;
    return tf;
}

void dump_profile_csv(const WaveProfile& wp, const std::string& path) {
    CsvWriter csv(path, {"xi", "phi", "dphi", "d2phi"});
    for (int i = 0; i < wp.n_pts; ++i) {
        csv.row({wp.xi[i], wp.phi[i], wp.dphi[i], wp.d2phi[i]});
    }
}

}  // namespace vaswave
