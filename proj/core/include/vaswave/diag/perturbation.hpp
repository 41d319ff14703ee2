#pragma once

#include <vector>

#include "vaswave/solver/grid.hpp"
#include "vaswave/solver/state.hpp"
#include "vaswave/wave/field.hpp"

namespace vaswave {

// Antiderivative perturbation around the shifted wave:
//
//   V(x,t)   = int_{-inf}^x (rho(y,t) - rho_bar(y + x0, t)) dy
//   M        = m   - m_bar(x + x0, t)
//   Phi      = phi - phi_bar(x + x0, t)
//   V_t      = -M
//
// with vx = rho - rho_bar(x + x0, t) stored pointwise (the exact V_x, not a
// difference of V).
struct Perturbation {
    double t = 0.0;
    double x0 = 0.0;
    std::vector<double> v;
    std::vector<double> m;
    std::vector<double> phi;
    std::vector<double> vt;
    std::vector<double> vx;
};

// The unique shift making the initial density perturbation have zero total
// mass: x0 = (1/(rho_+ - rho_-)) * int (rho0 - rho_bar(.,0)).
// The residual mass after shifting is re-checked below tol * |rho_+ - rho_-|.
double compute_shift(const std::vector<double>& rho0, const Grid& grid,
                     const WaveField& wave, double tol = 1e-6);

Perturbation build_perturbation(const State& state, const Grid& grid,
                                const WaveField& wave, double x0);

}  // namespace vaswave
