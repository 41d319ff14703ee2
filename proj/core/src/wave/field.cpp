#include "vaswave/wave/field.hpp"

#include <algorithm>
#include <cmath>

#include "vaswave/detail/linfit.hpp"
#include "vaswave/errors.hpp"

namespace vaswave {

WaveField::WaveField(WaveProfile profile)
    : wp_(std::make_shared<const WaveProfile>(std::move(profile))) {}

WaveField::ProfilePoint WaveField::interp(double xi) const {
    const WaveProfile& w = *wp_;
    const double h = w.h();
    double u = (xi + w.xi_max) / h;
    int j = static_cast<int>(std::floor(u));
    j = std::clamp(j, 0, w.n_pts - 2);
    u -= j;

    const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const double h10 = u * (1.0 - u) * (1.0 - u);
    const double h01 = u * u * (3.0 - 2.0 * u);
    const double h11 = u * u * (u - 1.0);

    auto hermite = [&](const std::vector<double>& f,
                       const std::vector<double>& fp) {
        return h00 * f[j] + h10 * h * fp[j] + h01 * f[j + 1] +
               h11 * h * fp[j + 1];
    };
    ProfilePoint p;
    p.f = hermite(w.phi, w.dphi);
    p.fp = hermite(w.dphi, w.d2phi);
    p.fpp = hermite(w.d2phi, w.d3phi);
    p.fppp = (1.0 - u) * w.d3phi[j] + u * w.d3phi[j + 1];
    return p;
}

double WaveField::profile_deriv(double xi, int d) const {
    if (std::abs(xi) >= wp_->xi_max) {
        if (d == 0) return xi > 0 ? wp_->params.rho_plus : wp_->params.rho_minus;
        return 0.0;
    }
    const ProfilePoint p = interp(xi);
    switch (d) {
        case 0: return p.f;
        case 1: return p.fp;
        case 2: return p.fpp;
        case 3: return p.fppp;
        default: throw OrderUnsupported("profile derivative order > 3");
    }
}

WaveTriple WaveField::eval(double x, double t, int k, int l) const {
    if (k < 0 || l < 0 || k > 3 || l > 1 || k + l > 3) {
        throw OrderUnsupported("eval_wave supports k <= 3, l <= 1, k + l <= 3");
    }
    if (!(t >= 0.0)) throw ValidationError("eval_wave requires t >= 0");

    const Params& prm = wp_->params;
    const PressureModel& pm = wp_->pm;
    const double s = std::sqrt(1.0 + t);
    const double xi = x / s;
    const double ab = prm.a / prm.b;

    if (std::abs(xi) >= wp_->xi_max) {
        if (k == 0 && l == 0) {
            const double r = xi > 0 ? prm.rho_plus : prm.rho_minus;
            return {r, 0.0, ab * r};
        }
        return {0.0, 0.0, 0.0};
    }

    const ProfilePoint p = interp(xi);
    const double alpha = prm.alpha;

    // derivatives of q(phi(xi)) in xi; the 4th uses the profile equation
    // (q(phi))'' = -(alpha/2) xi phi' differentiated twice
    const double q1 = pm.dq(p.f) * p.fp;
    const double q2 = pm.d2q(p.f) * p.fp * p.fp + pm.dq(p.f) * p.fpp;
    const double q3 = pm.d3q(p.f) * p.fp * p.fp * p.fp +
                      3.0 * pm.d2q(p.f) * p.fp * p.fpp + pm.dq(p.f) * p.fppp;
    const double q4 = -0.5 * alpha * (2.0 * p.fpp + xi * p.fppp);
    const double qd[5] = {0.0, q1, q2, q3, q4};
    const double pd[4] = {p.f, p.fp, p.fpp, p.fppp};

    const double sk1 = std::pow(s, k + 1);

    WaveTriple out;
    if (l == 0) {
        const double sk = std::pow(s, k);
        out.rho_bar = pd[k] / sk;
        out.m_bar = -qd[k + 1] / (alpha * sk1);
    } else {
        // d_t of f(xi)/s^k with xi = x/s
        const double sk2 = std::pow(s, k + 2);
        const double sk3 = std::pow(s, k + 3);
        out.rho_bar = -(static_cast<double>(k) * pd[k] + xi * pd[k + 1]) /
                      (2.0 * sk2);
        out.m_bar = (static_cast<double>(k + 1) * qd[k + 1] + xi * qd[k + 2]) /
                    (2.0 * alpha * sk3);
    }
    out.phi_bar = ab * out.rho_bar;
    return out;
}

DecayScan profile_decay_scan(const WaveField& wf, int k, int l, int p_index,
                             const std::vector<double>& t_grid, int n_eval) {
    if (k + l < 1 || k + l > 3 || l > 1) {
        throw ValidationError("profile_decay_scan needs 1 <= k + l <= 3, l <= 1");
    }
    if (p_index != 0 && p_index != 2) {
        throw ValidationError("norm index must be 2 (L^2) or 0 (sup)");
    }
    if (t_grid.size() < 2) throw ValidationError("need at least two times");
    const double span = (1.0 + t_grid.back()) / (1.0 + t_grid.front());
    if (span < 9.5) {
        throw ValidationError("time grid must span at least a decade in 1+t");
    }

    DecayScan scan;
    scan.times = t_grid;
    const double xi_max = wf.profile().xi_max;
    for (double t : t_grid) {
        const double s = std::sqrt(1.0 + t);
        const double L = xi_max * s;
        const double dx = 2.0 * L / (n_eval - 1);
        double acc = 0.0;
        double prev2 = 0.0;
        for (int i = 0; i < n_eval; ++i) {
            const double x = -L + dx * i;
            const double v = wf.eval(x, t, k, l).rho_bar;
            if (p_index == 0) {
                acc = std::max(acc, std::abs(v));
            } else {
                const double v2 = v * v;
                if (i > 0) acc += 0.5 * (prev2 + v2) * dx;
                prev2 = v2;
            }
        }
        scan.norms.push_back(p_index == 0 ? acc : std::sqrt(acc));
    }

    std::vector<double> xs, ys;
    for (size_t i = 0; i < scan.norms.size(); ++i) {
        if (!(scan.norms[i] > 1e-300)) {
            throw DegenerateFit("decay scan norm underflow at t = " +
                                std::to_string(scan.times[i]));
        }
        xs.push_back(std::log1p(scan.times[i]));
        ys.push_back(std::log(scan.norms[i]));
    }
    const auto fit = detail::linear_fit(xs, ys);
    scan.exponent = fit.slope;
    scan.r2 = fit.r2;
    return scan;
}

}  // namespace vaswave
