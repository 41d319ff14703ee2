#include "vaswave/diag/energy.hpp"

#include <cmath>

#include "vaswave/diag/norms.hpp"
#include "vaswave/errors.hpp"

namespace vaswave {

EnergyReport energy_functional(const Perturbation& pert, const Grid& grid,
                               const WaveField& wave, const PressureModel& pm,
                               double k_e) {
    const Params& prm = wave.params();
    if (!(prm.alpha * k_e > 1.0)) {
        throw WeightTooSmall("energy weight requires alpha * k_e > 1");
    }
    const int n = static_cast<int>(pert.v.size());
    const double dx = grid.dx();
    const double K = k_e;
    const double mu = prm.mu, a = prm.a, b = prm.b, D = prm.dd,
                 alpha = prm.alpha;

    // wave coefficients along the shifted ray
    std::vector<double> rb(n), rbx(n), dp_rb(n), qx(n);
    for (int i = 0; i < n; ++i) {
        const double x = grid.x(i) + pert.x0;
        rb[i] = wave.eval(x, pert.t, 0, 0).rho_bar;
        rbx[i] = wave.eval(x, pert.t, 1, 0).rho_bar;
        dp_rb[i] = pm.dp(rb[i]);
        qx[i] = pm.dq(rb[i]) * rbx[i];
    }

    // derivative stacks
    std::vector<std::vector<double>> dv(3), dvt(3), dvx(3), dphi(3), dphix(3);
    for (int k = 0; k <= 2; ++k) {
        dv[k] = fd_derivative(pert.v, dx, k);
        dvt[k] = fd_derivative(pert.vt, dx, k);
        dvx[k] = fd_derivative(pert.vx, dx, k);
        dphi[k] = fd_derivative(pert.phi, dx, k);
        dphix[k] = fd_derivative(pert.phi, dx, k + 1);
    }

    EnergyReport rep;
    rep.k_e = k_e;

    std::vector<double> tmp(n);
    auto weighted_sq = [&](const std::vector<double>& w,
                           const std::vector<double>& f) {
        for (int i = 0; i < n; ++i) tmp[i] = w[i] * f[i] * f[i];
        return trapz(tmp, dx);
    };
    auto sq = [&](const std::vector<double>& f) {
        for (int i = 0; i < n; ++i) tmp[i] = f[i] * f[i];
        return trapz(tmp, dx);
    };

    double quad = 0.0, cross = 0.0, weighted = 0.0;
    for (int k = 0; k <= 2; ++k) {
        quad += 0.5 * alpha * sq(dv[k]);
        quad += 0.5 * K * sq(dvt[k]);
        quad += 0.5 * K * weighted_sq(dp_rb, dvx[k]);
        quad += 0.5 * K * (mu * b / a) * weighted_sq(rb, dphi[k]);
        quad += 0.5 * (mu / a) * weighted_sq(rb, dphi[k]);
        quad += 0.5 * (mu * D * K / a) * weighted_sq(rb, dphix[k]);

        cross += trapz_product(dvt[k], dv[k], dx);
        for (int i = 0; i < n; ++i) tmp[i] = rb[i] * dphi[k][i] * dvx[k][i];
        cross += -K * mu * trapz(tmp, dx);

        // solution-dependent corrections
        for (int i = 0; i < n; ++i) {
            const double w = pert.vx[i] + rb[i];
            const double rate = (pert.vt[i] + qx[i] / alpha) / w;
            tmp[i] = (-0.5 * K * rate * rate +
                      0.5 * K * (pm.dp(w) - dp_rb[i])) *
                     dvx[k][i] * dvx[k][i];
        }
        weighted += trapz(tmp, dx);
    }
    for (int i = 0; i < n; ++i) tmp[i] = rbx[i] * pert.phi[i] * pert.v[i];
    cross += (mu / b) * trapz(tmp, dx);

    rep.quadratic_part = quad;
    rep.cross_part = cross;
    rep.weighted_part = weighted;
    rep.e_t = quad + cross + weighted;

    const NormReport nv = sobolev_norms(pert.v, dx, 3);
    const NormReport nvt = sobolev_norms(pert.vt, dx, 2);
    const NormReport np = sobolev_norms(pert.phi, dx, 3);
    rep.equivalent_norm = nv.hm(3) * nv.hm(3) + nvt.hm(2) * nvt.hm(2) +
                          np.hm(3) * np.hm(3);
    if (rep.equivalent_norm > 0.0 && rep.e_t > 0.0) {
        const double r = rep.e_t / rep.equivalent_norm;
        rep.c_eq = std::max(r, 1.0 / r);
    } else {
        rep.c_eq = 1.0;
    }
    return rep;
}

}  // namespace vaswave
