#pragma once

#include "vaswave/diag/perturbation.hpp"
#include "vaswave/model/pressure.hpp"
#include "vaswave/solver/state.hpp"
#include "vaswave/wave/field.hpp"

namespace vaswave {

// The three source/nonlinearity residuals of the reformulated system:
//
//   h = -(V_t + q(rb)_x / alpha)^2 / (V_x + rb)
//   f = q(rb)_t / alpha - [p(V_x + rb) - p(rb) - p'(rb) V_x]
//   g = -phib_t + D phib_xx        (depends on the wave only)
//
// with all wave quantities at (x + x0, t). band_ok records whether
// V_x + rb stayed inside [rho_-/2, 3 rho_+/2] (flagged, not fatal).
struct ResidualReport {
    std::vector<double> h;
    std::vector<double> f;
    std::vector<double> g;
    double h_l2 = 0.0;
    double f_l2 = 0.0;
    double g_l2 = 0.0;
    bool band_ok = true;
};

ResidualReport residuals(const State& state, const Grid& grid,
                         const WaveField& wave, const PressureModel& pm,
                         double x0, const Perturbation& pert);

// ||g(t)||_{L^2}^2 evaluated from the wave alone on the given grid.
double g_norm_sq(const Grid& grid, const WaveField& wave, double x0, double t);

}  // namespace vaswave
