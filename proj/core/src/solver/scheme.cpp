// Finite-volume integrator for the damped hyperbolic-parabolic system
//
//   rho_t + m_x = 0
//   m_t + (m^2/rho + p(rho))_x = mu rho phi_x - alpha m
//   phi_t = D phi_xx + a rho - b phi
//
// HLL fluxes for the (rho, m) pair (minmod-limited MUSCL reconstruction at
// order 2), central differencing of the chemotaxis source, and an exact
// integrating factor for the stiff -alpha m relaxation: with F the flux and
// source terms excluding damping, the update reads
//
//   order 1:  m^{n+1} = e^{-z} m^n + dt phi1(z) F(U^n),      z = alpha dt,
//   order 2:  Heun applied to the integrating-factor variable e^{alpha t} m,
//
// with phi1(z) = (1 - e^{-z})/z. Both keep constant equilibria exact and
// damp a frozen-flux momentum by exactly e^{-alpha dt} per step. The phi
// equation advances once per step, diffusion either explicit or via a
// tridiagonal backward-Euler solve. Boundary cells are held at the far-field
// Dirichlet data.
#include "vaswave/solver/scheme.hpp"

#include <algorithm>
#include <cmath>

#include "vaswave/errors.hpp"

namespace vaswave {

namespace {

double minmod3(double a, double b, double c) {
    if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
    if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
    return 0.0;
}

// MUSCL slope with theta-limited minmod (theta = 1.5).
double plm_slope(double ul, double uc, double ur) {
    constexpr double theta = 1.5;
    return minmod3(theta * (uc - ul), 0.5 * (ur - ul), theta * (ur - uc));
}

double phi1(double z) {
    // (1 - e^-z)/z, series branch for small z
    if (z < 1e-8) return 1.0 - 0.5 * z + z * z / 6.0;
    return (1.0 - std::exp(-z)) / z;
}

struct Thomas {
    // In-place tridiagonal solve: diag d, sub a (a[0] unused), super c
    // (c[n-1] unused), rhs r; solution written to r.
    static void solve(std::vector<double>& a, std::vector<double>& d,
                      std::vector<double>& c, std::vector<double>& r) {
        const size_t n = d.size();
        for (size_t i = 1; i < n; ++i) {
            const double w = a[i] / d[i - 1];
            d[i] -= w * c[i - 1];
            r[i] -= w * r[i - 1];
        }
        r[n - 1] /= d[n - 1];
        for (size_t i = n - 1; i-- > 0;) {
            r[i] = (r[i] - c[i] * r[i + 1]) / d[i];
        }
    }
};

}  // namespace

Flux hyperbolic_flux(const CellState& left, const CellState& right,
                     const PressureModel& pm) {
    if (!(left.rho > 0.0) || !(right.rho > 0.0)) {
        throw NonpositiveDensity("hyperbolic_flux requires positive densities");
    }
    const double ul = left.m / left.rho;
    const double ur = right.m / right.rho;
    const double cl = std::sqrt(pm.dp(left.rho));
    const double cr = std::sqrt(pm.dp(right.rho));
    const double sl = std::min(ul - cl, ur - cr);
    const double sr = std::max(ul + cl, ur + cr);

    const Flux fl{left.m, left.m * ul + pm.p(left.rho)};
    const Flux fr{right.m, right.m * ur + pm.p(right.rho)};
    if (sl >= 0.0) return fl;
    if (sr <= 0.0) return fr;
    const double inv = 1.0 / (sr - sl);
    return Flux{(sr * fl.rho - sl * fr.rho + sl * sr * (right.rho - left.rho)) * inv,
                (sr * fl.m - sl * fr.m + sl * sr * (right.m - left.m)) * inv};
}

std::vector<double> diffuse_phi(const std::vector<double>& phi,
                                const std::vector<double>& rho, double dt,
                                double dx, double D, double a, double b,
                                DiffusionMode mode, double bc_lo, double bc_hi) {
    const int n = static_cast<int>(phi.size());
    std::vector<double> out(n);
    const double r = D * dt / (dx * dx);
    if (mode == DiffusionMode::Explicit) {
        for (int i = 0; i < n; ++i) {
            const double pl = i > 0 ? phi[i - 1] : bc_lo;
            const double pr = i < n - 1 ? phi[i + 1] : bc_hi;
            out[i] = phi[i] + r * (pl - 2.0 * phi[i] + pr) +
                     dt * (a * rho[i] - b * phi[i]);
        }
        return out;
    }
    // backward Euler in diffusion and decay, source explicit; boundary cells
    // are Dirichlet data, interior solved by a tridiagonal sweep
    if (n < 3) return phi;
    const int ni = n - 2;
    std::vector<double> sub(ni, -r), diag(ni, 1.0 + b * dt + 2.0 * r),
        sup(ni, -r), rhs(ni);
    for (int i = 0; i < ni; ++i) rhs[i] = phi[i + 1] + dt * a * rho[i + 1];
    rhs[0] += r * bc_lo;
    rhs[ni - 1] += r * bc_hi;
    Thomas::solve(sub, diag, sup, rhs);
    out[0] = bc_lo;
    out[n - 1] = bc_hi;
    for (int i = 0; i < ni; ++i) out[i + 1] = rhs[i];
    return out;
}

Scheme::Scheme(Grid grid, Params params, PressureModel pm, SchemeConfig cfg)
    : grid_(grid), params_(params), pm_(std::move(pm)), cfg_(std::move(cfg)) {
    grid_.validate();
    params_.validate();
    cfg_.validate();
}

State Scheme::init_state(const WaveField& wave,
                         const InitPerturbation& pert) const {
    State s;
    s.t = 0.0;
    const int n = grid_.nx;
    s.rho.resize(n);
    s.m.resize(n);
    s.phi.resize(n);
    const double shift = pert.kind == InitPerturbation::Kind::Shift ? pert.shift : 0.0;
    for (int i = 0; i < n; ++i) {
        const WaveTriple w = wave.eval(grid_.x(i) + shift, 0.0);
        s.rho[i] = w.rho_bar;
        s.m[i] = w.m_bar;
        s.phi[i] = w.phi_bar;
    }
    if (pert.kind == InitPerturbation::Kind::Bump) {
        for (int i = 0; i < n; ++i) {
            const double r = (grid_.x(i) - pert.center) / pert.width;
            if (std::abs(r) >= 1.0) continue;
            const double w2 = 1.0 - r * r;
            const double bump = w2 * w2 * w2;  // C^2 at the support edge
            const double bump_dz = -6.0 * r * w2 * w2;
            s.rho[i] += pert.amplitude * (pert.zero_mass ? bump_dz : bump);
            s.m[i] += pert.amplitude * bump;
            s.phi[i] += pert.amplitude * bump;
        }
    }
    for (double r : s.rho) {
        if (!(r > 0.0)) {
            throw VacuumInducingPerturbation(
                "initial perturbation drives rho <= 0");
        }
    }
    return s;
}

double Scheme::max_signal_speed(const State& s) const {
    double smax = 0.0;
    for (int i = 0; i < s.size(); ++i) {
        const double u = s.m[i] / s.rho[i];
        smax = std::max(smax, std::abs(u) + std::sqrt(pm_.dp(s.rho[i])));
    }
    return smax;
}

double Scheme::stable_dt(const State& s) const {
    const double dx = grid_.dx();
    double dt = cfg_.cfl * dx / std::max(max_signal_speed(s), 1e-300);
    if (cfg_.diffusion_mode == DiffusionMode::Explicit) {
        dt = std::min(dt, 0.4 * dx * dx / params_.dd);
    }
    return dt;
}

void Scheme::rhs(const std::vector<double>& rho, const std::vector<double>& m,
                 const std::vector<double>& phx, std::vector<double>& drho,
                 std::vector<double>& dm) const {
    const int n = grid_.nx;
    const double dx = grid_.dx();
    const int ng = cfg_.order;  // ghost cells per side
    const int nt = n + 2 * ng;

    std::vector<double> rg(nt), mg(nt);
    for (int i = 0; i < ng; ++i) {
        rg[i] = params_.rho_minus;
        mg[i] = 0.0;
        rg[nt - 1 - i] = params_.rho_plus;
        mg[nt - 1 - i] = 0.0;
    }
    std::copy(rho.begin(), rho.end(), rg.begin() + ng);
    std::copy(m.begin(), m.end(), mg.begin() + ng);

    // face states: index f = 0..n gives the face between cells f-1 and f
    std::vector<double> rl(n + 1), rr(n + 1), ml(n + 1), mr(n + 1);
    if (cfg_.order == 1) {
        for (int f = 0; f <= n; ++f) {
            rl[f] = rg[f];
            ml[f] = mg[f];
            rr[f] = rg[f + 1];
            mr[f] = mg[f + 1];
        }
    } else {
        for (int f = 0; f <= n; ++f) {
            const int i = f + 1;  // ghost-padded index of the left cell
            const double sr_l = plm_slope(rg[i - 1], rg[i], rg[i + 1]);
            const double sm_l = plm_slope(mg[i - 1], mg[i], mg[i + 1]);
            const double sr_r = plm_slope(rg[i], rg[i + 1], rg[i + 2]);
            const double sm_r = plm_slope(mg[i], mg[i + 1], mg[i + 2]);
            rl[f] = rg[i] + 0.5 * sr_l;
            ml[f] = mg[i] + 0.5 * sm_l;
            rr[f] = rg[i + 1] - 0.5 * sr_r;
            mr[f] = mg[i + 1] - 0.5 * sm_r;
        }
    }

    std::vector<double> frho(n + 1), fm(n + 1);
    for (int f = 0; f <= n; ++f) {
        const Flux fx = hyperbolic_flux({rl[f], ml[f]}, {rr[f], mr[f]}, pm_);
        frho[f] = fx.rho;
        fm[f] = fx.m;
    }
    for (int i = 0; i < n; ++i) {
        drho[i] = -(frho[i + 1] - frho[i]) / dx;
        dm[i] = -(fm[i + 1] - fm[i]) / dx + params_.mu * rho[i] * phx[i];
    }
}

State Scheme::step(const State& s, double dt) const {
    const double bound = stable_dt(s);
    if (dt > bound * (1.0 + 1e-9)) {
        throw CflViolation("dt = " + std::to_string(dt) +
                           " exceeds stability bound " + std::to_string(bound));
    }
    const int n = grid_.nx;
    const double dx = grid_.dx();
    const double phi_lo = params_.phi_minus();
    const double phi_hi = params_.phi_plus();

    // chemoattractant gradient at time n, frozen across the step
    std::vector<double> phx(n);
    for (int i = 0; i < n; ++i) {
        const double pl = i > 0 ? s.phi[i - 1] : phi_lo;
        const double pr = i < n - 1 ? s.phi[i + 1] : phi_hi;
        phx[i] = (pr - pl) / (2.0 * dx);
    }

    const double z = params_.alpha * dt;
    const double ez = std::exp(-z);

    State out;
    out.t = s.t + dt;
    out.rho.resize(n);
    out.m.resize(n);

    std::vector<double> d1r(n), d1m(n);
    rhs(s.rho, s.m, phx, d1r, d1m);
    if (cfg_.order == 1) {
        const double p1 = phi1(z);
        for (int i = 0; i < n; ++i) {
            out.rho[i] = s.rho[i] + dt * d1r[i];
            out.m[i] = ez * s.m[i] + dt * p1 * d1m[i];
        }
    } else {
        std::vector<double> r1(n), m1(n), d2r(n), d2m(n);
        for (int i = 0; i < n; ++i) {
            r1[i] = s.rho[i] + dt * d1r[i];
            m1[i] = ez * (s.m[i] + dt * d1m[i]);
        }
        rhs(r1, m1, phx, d2r, d2m);
        for (int i = 0; i < n; ++i) {
            out.rho[i] = 0.5 * (s.rho[i] + r1[i]) + 0.5 * dt * d2r[i];
            out.m[i] = ez * s.m[i] + 0.5 * dt * (ez * d1m[i] + d2m[i]);
        }
    }

    out.phi = diffuse_phi(s.phi, s.rho, dt, dx, params_.dd, params_.a,
                          params_.b, cfg_.diffusion_mode, phi_lo, phi_hi);

    // far-field Dirichlet cells
    out.rho[0] = params_.rho_minus;
    out.m[0] = 0.0;
    out.phi[0] = phi_lo;
    out.rho[n - 1] = params_.rho_plus;
    out.m[n - 1] = 0.0;
    out.phi[n - 1] = phi_hi;

    for (int i = 0; i < n; ++i) {
        if (!(out.rho[i] > 0.0) || !std::isfinite(out.rho[i])) {
            throw VacuumDetected("rho <= 0 at cell " + std::to_string(i) +
                                 ", t = " + std::to_string(out.t));
        }
    }
    return out;
}

State Scheme::run(State state, double t_end, const SnapshotSink& sink) const {
    if (t_end < 0.0) throw ValidationError("t_end must be nonnegative");

    std::vector<double> stops;
    for (double ts : cfg_.snapshot_times) {
        if (ts >= 0.0 && ts <= t_end) stops.push_back(ts);
    }
    std::sort(stops.begin(), stops.end());
    size_t next = 0;
    while (next < stops.size() && stops[next] <= state.t) {
        if (stops[next] == state.t) sink(state);
        ++next;
    }
    if (t_end <= state.t) return state;

    while (state.t < t_end) {
        const double target = next < stops.size() ? stops[next] : t_end;
        double dt = stable_dt(state);
        bool landing = false;
        if (state.t + dt >= target - 1e-12 * std::max(1.0, target)) {
            dt = target - state.t;
            landing = true;
        }
        state = step(state, dt);
        if (landing) {
            state.t = target;  // exact landing, no accumulation drift
            if (next < stops.size() && target == stops[next]) {
                sink(state);
                ++next;
            }
        }
    }
    return state;
}

}  // namespace vaswave
