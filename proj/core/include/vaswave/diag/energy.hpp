#pragma once

#include "vaswave/diag/perturbation.hpp"
#include "vaswave/model/pressure.hpp"
#include "vaswave/solver/grid.hpp"
#include "vaswave/wave/field.hpp"

namespace vaswave {

// The weighted energy functional driving the stability estimates, assembled
// by trapezoid quadrature with wave-dependent coefficients. With weight K
// (k_e here, requiring alpha * k_e > 1) and sums over k = 0..2:
//
//   E = sum_k { (alpha/2)||d^k V||^2 + int d^k V_t d^k V + (K/2)||d^k V_t||^2 }
//     + (K/2) sum_k { int p'(rb)(d^k V_x)^2 - 2 mu int rb d^k Phi d^k V_x
//                     + (mu b/a) int rb (d^k Phi)^2 }
//     + sum_k { (mu/2a) int rb (d^k Phi)^2 + (mu D K/2a) int rb (d^k Phi_x)^2 }
//     + (mu/b) int rb_x Phi V
//     - (K/2) sum_k int [(V_t + q(rb)_x/alpha)^2/(V_x + rb)^2] (d^k V_x)^2
//     + (K/2) sum_k int [p'(V_x + rb) - p'(rb)] (d^k V_x)^2
//
// where rb is the shifted wave density. Reported sub-sums:
//   quadratic_part - all sign-definite squares (diagonal terms),
//   cross_part     - int d^k V_t d^k V, the -2 mu K int rb Phi V_x coupling
//                    and the (mu/b) int rb_x Phi V term,
//   weighted_part  - the two solution-dependent correction integrals.
struct EnergyReport {
    double e_t = 0.0;
    double quadratic_part = 0.0;
    double cross_part = 0.0;
    double weighted_part = 0.0;
    double equivalent_norm = 0.0;  // ||V||_3^2 + ||V_t||_2^2 + ||Phi||_3^2
    double c_eq = 1.0;             // max(ratio, 1/ratio) of e_t to the norm
    double k_e = 0.0;
};

EnergyReport energy_functional(const Perturbation& pert, const Grid& grid,
                               const WaveField& wave, const PressureModel& pm,
                               double k_e);

}  // namespace vaswave
