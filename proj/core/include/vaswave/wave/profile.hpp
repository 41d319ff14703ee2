#pragma once

#include <string>
#include <vector>

#include "vaswave/model/admissibility.hpp"
#include "vaswave/model/params.hpp"
#include "vaswave/model/pressure.hpp"

namespace vaswave {

// Self-similar diffusion-wave profile phi(xi), xi = x / sqrt(1+t), solving
//
//   q'(phi) phi'' + q''(phi) (phi')^2 + (alpha/2) xi phi' = 0,
//   phi(-inf) = rho_minus,  phi(+inf) = rho_plus,
//
// tabulated on a uniform grid over [-xi_max, xi_max]. Derivative tables are
// filled from the ODE itself (d2phi from the profile equation, d3phi from
// its xi-derivative), not by differencing the phi table.
struct WaveProfile {
    Params params;
    PressureModel pm;
    double xi_max = 8.0;
    int n_pts = 4001;
    std::vector<double> xi;
    std::vector<double> phi;
    std::vector<double> dphi;
    std::vector<double> d2phi;
    std::vector<double> d3phi;
    double shoot_slope = 0.0;    // phi'(-xi_max) selected by the bisection
    double endpoint_err = 0.0;   // |phi(+xi_max) - rho_plus|

    double h() const { return 2.0 * xi_max / (n_pts - 1); }
    bool increasing() const { return params.rho_plus >= params.rho_minus; }

    // Max over interior nodes of the profile equation evaluated with centered
    // finite differences of the phi table (an implementation-independent
    // consistency check; the tabulated derivatives satisfy the ODE exactly).
    double fd_residual() const;
};

// Shooting construction: integrate (phi, phi') from -xi_max with
// phi = rho_minus by a fixed-step RK4 and bisect on the initial slope until
// phi(+xi_max) lands on rho_plus within tol. A decreasing wave
// (rho_minus > rho_plus) is solved with the endpoint roles swapped and xi
// negated; the ODE is invariant under xi -> -xi.
WaveProfile build_profile(const Params& params, const PressureModel& pm,
                          double xi_max = 8.0, int n_pts = 4001,
                          double tol = 1e-9);

struct TailFit {
    double c_fit = 0.0;  // fitted rate in |phi - rho_+| ~ C exp(-c alpha xi^2)
    double r2 = 0.0;
    bool ok = false;
};

// Fits log|phi - rho_+| against -alpha xi^2 on xi in [xi_max/2, 0.9 xi_max]
// (the rho_- side for decreasing waves). Throws InsufficientTail when the
// deviation underflows before the fit window.
TailFit tail_check(const WaveProfile& wp);

// CSV dump with columns xi,phi,dphi,d2phi.
void dump_profile_csv(const WaveProfile& wp, const std::string& path);

}  // namespace vaswave
