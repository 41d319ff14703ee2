#include "vaswave/diag/residuals.hpp"

#include <cmath>

#include "vaswave/diag/norms.hpp"

namespace vaswave {

ResidualReport residuals(const State& state, const Grid& grid,
                         const WaveField& wave, const PressureModel& pm,
                         double x0, const Perturbation& pert) {
    const Params& prm = wave.params();
    const int n = state.size();
    const double dx = grid.dx();
    const double alpha = prm.alpha;
    const double ab = prm.a / prm.b;
    const double lo = 0.5 * prm.rho_minus;
    const double hi = 1.5 * prm.rho_plus;

    ResidualReport rep;
    rep.h.resize(n);
    rep.f.resize(n);
    rep.g.resize(n);

    for (int i = 0; i < n; ++i) {
        const double x = grid.x(i) + x0;
        const double rb = wave.eval(x, state.t, 0, 0).rho_bar;
        const double rbx = wave.eval(x, state.t, 1, 0).rho_bar;
        const double rbt = wave.eval(x, state.t, 0, 1).rho_bar;
        const double rbxx = wave.eval(x, state.t, 2, 0).rho_bar;

        const double qx = pm.dq(rb) * rbx;
        const double qt = pm.dq(rb) * rbt;
        const double vx = pert.vx[i];
        const double vt = pert.vt[i];
        const double w = vx + rb;
        if (w < lo || w > hi) rep.band_ok = false;

        const double rate = vt + qx / alpha;
        rep.h[i] = -rate * rate / w;
        rep.f[i] = qt / alpha - (pm.p(w) - pm.p(rb) - pm.dp(rb) * vx);
        rep.g[i] = ab * (prm.dd * rbxx - rbt);
    }

    std::vector<double> tmp(n);
    auto l2 = [&](const std::vector<double>& v) {
        for (int i = 0; i < n; ++i) tmp[i] = v[i] * v[i];
        return std::sqrt(trapz(tmp, dx));
    };
    rep.h_l2 = l2(rep.h);
    rep.f_l2 = l2(rep.f);
    rep.g_l2 = l2(rep.g);
    return rep;
}

double g_norm_sq(const Grid& grid, const WaveField& wave, double x0, double t) {
    const Params& prm = wave.params();
    const double ab = prm.a / prm.b;
    const int n = grid.nx;
    std::vector<double> g2(n);
    for (int i = 0; i < n; ++i) {
        const double x = grid.x(i) + x0;
        const double rbt = wave.eval(x, t, 0, 1).rho_bar;
        const double rbxx = wave.eval(x, t, 2, 0).rho_bar;
        const double g = ab * (prm.dd * rbxx - rbt);
        g2[i] = g * g;
    }
    return trapz(g2, grid.dx());
}

}  // namespace vaswave
