#include "vaswave/diag/perturbation.hpp"

#include <cmath>
#include <string>

#include "vaswave/diag/norms.hpp"
#include "vaswave/errors.hpp"

namespace vaswave {

double compute_shift(const std::vector<double>& rho0, const Grid& grid,
                     const WaveField& wave, double tol) {
    const Params& prm = wave.params();
    const double jump = prm.rho_plus - prm.rho_minus;
    if (std::abs(jump) < 1e-14) {
        throw DegenerateWave("shift undefined for rho_- = rho_+");
    }
    const int n = grid.nx;
    const double dx = grid.dx();

    std::vector<double> diff(n);
    for (int i = 0; i < n; ++i) {
        diff[i] = rho0[i] - wave.eval(grid.x(i), 0.0).rho_bar;
    }
    const double x0 = trapz(diff, dx) / jump;

    for (int i = 0; i < n; ++i) {
        diff[i] = rho0[i] - wave.eval(grid.x(i) + x0, 0.0).rho_bar;
    }
    const double residual = trapz(diff, dx);
    if (std::abs(residual / jump) > tol) {
        throw ResidualMassTooLarge(
            "shifted mass residual " + std::to_string(residual) +
            " (domain too small or rho0 inconsistent)");
    }
    return x0;
}

Perturbation build_perturbation(const State& state, const Grid& grid,
                                const WaveField& wave, double x0) {
    const int n = state.size();
    const double dx = grid.dx();
    Perturbation p;
    p.t = state.t;
    p.x0 = x0;
    p.v.resize(n);
    p.m.resize(n);
    p.phi.resize(n);
    p.vt.resize(n);
    p.vx.resize(n);

    for (int i = 0; i < n; ++i) {
        const WaveTriple w = wave.eval(grid.x(i) + x0, state.t);
        p.vx[i] = state.rho[i] - w.rho_bar;
        p.m[i] = state.m[i] - w.m_bar;
        p.phi[i] = state.phi[i] - w.phi_bar;
        p.vt[i] = -p.m[i];
    }
    p.v[0] = 0.0;
    for (int i = 1; i < n; ++i) {
        p.v[i] = p.v[i - 1] + 0.5 * (p.vx[i - 1] + p.vx[i]) * dx;
    }
    return p;
}

}  // namespace vaswave
