#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "vaswave/errors.hpp"
#include "vaswave/solver/scheme.hpp"
#include "vaswave/wave/profile.hpp"

using namespace vaswave;

namespace {

Params default_params() { return Params(1, 1, 1, 1, 1, 0.8, 1.2); }
PressureModel default_pm() { return PressureModel::quadratic(2.0, default_params()); }

const WaveField& default_wave() {
    static const WaveField wf{build_profile(default_params(), default_pm())};
    return wf;
}

Params ground_params(double rho_c) {
    return Params(1, 1, 1, 1, 1, rho_c, rho_c);
}

State constant_state(const Grid& g, double rho_c, double m_c, double phi_c) {
    State s;
    s.t = 0.0;
    s.rho.assign(g.nx, rho_c);
    s.m.assign(g.nx, m_c);
    s.phi.assign(g.nx, phi_c);
    return s;
}

double linf_dev(const std::vector<double>& v, double ref) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x - ref));
    return m;
}

}  // namespace

TEST_CASE("hll flux is consistent") {
    const PressureModel pm = default_pm();
    SUBCASE("rest state") {
        const Flux f = hyperbolic_flux({1.0, 0.0}, {1.0, 0.0}, pm);
        CHECK(f.rho == doctest::Approx(0.0));
        CHECK(f.m == doctest::Approx(1.0));  // p(1) = kappa/2
    }
    SUBCASE("moving state") {
        const double rho = 1.1, m = 0.3;
        const Flux f = hyperbolic_flux({rho, m}, {rho, m}, pm);
        CHECK(f.rho == doctest::Approx(m));
        CHECK(f.m == doctest::Approx(m * m / rho + pm.p(rho)));
    }
    SUBCASE("positivity required") {
        CHECK_THROWS_AS(hyperbolic_flux({0.0, 0.0}, {1.0, 0.0}, pm),
                        NonpositiveDensity);
    }
}

TEST_CASE("constant ground state is a fixed point of step") {
    const double rho_c = 1.0;
    const Params prm = ground_params(rho_c);
    const PressureModel pm = PressureModel::quadratic(2.0, prm);
    const Grid grid(-20.0, 20.0, 256);

    for (int order : {1, 2}) {
        for (DiffusionMode mode :
             {DiffusionMode::Explicit, DiffusionMode::Implicit}) {
            SchemeConfig cfg;
            cfg.order = order;
            cfg.diffusion_mode = mode;
            const Scheme scheme(grid, prm, pm, cfg);
            State s = constant_state(grid, rho_c, 0.0, prm.a / prm.b * rho_c);
            const double dt = scheme.stable_dt(s);
            for (int n = 0; n < 200; ++n) s = scheme.step(s, dt);
            CHECK(linf_dev(s.rho, rho_c) < 1e-12);
            CHECK(linf_dev(s.m, 0.0) < 1e-12);
            CHECK(linf_dev(s.phi, prm.a / prm.b * rho_c) < 1e-12);
        }
    }
}

TEST_CASE("frozen-flux momentum damps by exactly exp(-alpha dt)") {
    // uniform (rho, m, phi): flux divergence and phi_x vanish identically in
    // the interior, so the update reduces to the integrating factor
    const double rho_c = 1.0, m_c = 0.37;
    const Params prm(1.7, 1, 1, 1, 1, rho_c, rho_c);
    const PressureModel pm = PressureModel::quadratic(2.0, prm);
    const Grid grid(-20.0, 20.0, 128);

    for (int order : {1, 2}) {
        SchemeConfig cfg;
        cfg.order = order;
        const Scheme scheme(grid, prm, pm, cfg);
        State s = constant_state(grid, rho_c, m_c, prm.a / prm.b * rho_c);
        const double dt = 0.9 * scheme.stable_dt(s);
        const State next = scheme.step(s, dt);
        const double factor = std::exp(-prm.alpha * dt);
        // boundary-adjacent cells feel the far-field ghosts; check deep
        // interior cells, where the reduction is bitwise
        for (int i = 4; i < grid.nx - 4; ++i) {
            CHECK(next.m[i] == m_c * factor);
            CHECK(next.rho[i] == rho_c);
        }
    }
}

TEST_CASE("pure diffusion matches the heat kernel") {
    // a = b = 0 isolates phi_t = D phi_xx; gaussian initial data has the
    // closed-form solution amp(t) exp(-x^2 / (2 sigma(t)^2))
    const double D = 1.0, sigma0 = 1.0;
    const double t_end = 0.5;

    auto run_mode = [&](DiffusionMode mode, int nx, double dt_scale) {
        const Grid g(-20.0, 20.0, nx);
        std::vector<double> phi(nx), rho(nx, 0.0);
        for (int i = 0; i < nx; ++i) {
            phi[i] = std::exp(-g.x(i) * g.x(i) / (2 * sigma0 * sigma0));
        }
        const double dx = g.dx();
        const double dt = dt_scale * 0.4 * dx * dx / D;
        double t = 0.0;
        while (t < t_end - 1e-12) {
            const double step_dt = std::min(dt, t_end - t);
            phi = diffuse_phi(phi, rho, step_dt, dx, D, 0.0, 0.0, mode, 0.0, 0.0);
            t += step_dt;
        }
        const double var = sigma0 * sigma0 + 2 * D * t_end;
        double err = 0.0;
        for (int i = 0; i < nx; ++i) {
            const double exact =
                sigma0 / std::sqrt(var) * std::exp(-g.x(i) * g.x(i) / (2 * var));
            err = std::max(err, std::abs(phi[i] - exact));
        }
        return err;
    };

    SUBCASE("explicit: O(dx^2) + O(dt) with first-order self-improvement") {
        const double e1 = run_mode(DiffusionMode::Explicit, 256, 1.0);
        const double e2 = run_mode(DiffusionMode::Explicit, 512, 1.0);
        CHECK(e1 < 2e-3);
        CHECK(e2 < 0.5 * e1);  // dt ~ dx^2 halves at least linearly
    }
    SUBCASE("implicit: unconditionally stable at large dt") {
        const double e1 = run_mode(DiffusionMode::Implicit, 512, 20.0);
        const double e2 = run_mode(DiffusionMode::Implicit, 512, 10.0);
        CHECK(e1 < 1e-2);
        CHECK(e2 < 0.75 * e1);  // backward Euler is O(dt)
    }
}

TEST_CASE("init_state kinds") {
    const Params prm = default_params();
    const PressureModel pm = default_pm();
    const Grid grid(-100.0, 100.0, 1024);
    const Scheme scheme(grid, prm, pm, SchemeConfig{});
    const WaveField& wf = default_wave();

    SUBCASE("none equals the wave at cell centers") {
        const State s = scheme.init_state(wf, {});
        for (int i = 0; i < grid.nx; i += 97) {
            const WaveTriple w = wf.eval(grid.x(i), 0.0);
            CHECK(s.rho[i] == w.rho_bar);
            CHECK(s.m[i] == w.m_bar);
            CHECK(s.phi[i] == w.phi_bar);
        }
    }
    SUBCASE("shifted wave") {
        InitPerturbation p;
        p.kind = InitPerturbation::Kind::Shift;
        p.shift = 1.0;
        const State s = scheme.init_state(wf, p);
        for (int i = 0; i < grid.nx; i += 131) {
            CHECK(s.rho[i] == wf.eval(grid.x(i) + 1.0, 0.0).rho_bar);
        }
    }
    SUBCASE("bump with vacuum-inducing amplitude") {
        InitPerturbation p;
        p.kind = InitPerturbation::Kind::Bump;
        p.amplitude = -0.9;  // exceeds min rho = 0.8 at the wave foot
        p.center = -50.0;    // wave is ~rho_minus there
        p.width = 2.0;
        CHECK_THROWS_AS(scheme.init_state(wf, p), VacuumInducingPerturbation);
    }
    SUBCASE("zero-mass bump has zero discrete mass") {
        InitPerturbation p;
        p.kind = InitPerturbation::Kind::Bump;
        p.amplitude = 0.05;
        p.center = 0.0;
        p.width = 2.0;
        p.zero_mass = true;
        const State s = scheme.init_state(wf, p);
        const State base = scheme.init_state(wf, {});
        double mass = 0.0;
        for (int i = 0; i < grid.nx; ++i) mass += (s.rho[i] - base.rho[i]);
        CHECK(std::abs(mass * grid.dx()) < 1e-12);
    }
}

TEST_CASE("run lands exactly on snapshots") {
    const Params prm = default_params();
    const Grid grid(-100.0, 100.0, 256);
    SchemeConfig cfg;
    cfg.snapshot_times = {1.0, 2.0};
    const Scheme scheme(grid, prm, default_pm(), cfg);
    const State s0 = scheme.init_state(default_wave(), {});

    SUBCASE("zero-length run") {
        int count = 0;
        const State out = scheme.run(s0, 0.0, [&](const State&) { ++count; });
        CHECK(count == 0);
        CHECK(out.t == 0.0);
    }
    SUBCASE("two exact landings") {
        std::vector<double> seen;
        const State out =
            scheme.run(s0, 2.0, [&](const State& s) { seen.push_back(s.t); });
        REQUIRE(seen.size() == 2);
        CHECK(seen[0] == 1.0);
        CHECK(seen[1] == 2.0);
        CHECK(out.t == 2.0);
    }
}

TEST_CASE("interior mass balance telescopes (first order)") {
    const Params prm = default_params();
    const PressureModel pm = default_pm();
    const Grid grid(-100.0, 100.0, 512);
    SchemeConfig cfg;
    cfg.order = 1;
    const Scheme scheme(grid, prm, pm, cfg);
    State s = scheme.init_state(default_wave(), {});
    const double dx = grid.dx();
    const double dt = 0.8 * scheme.stable_dt(s);

    // reproduce the two bounding face fluxes of the interior cell range
    const Flux f_lo = hyperbolic_flux({s.rho[0], s.m[0]}, {s.rho[1], s.m[1]}, pm);
    const Flux f_hi = hyperbolic_flux({s.rho[grid.nx - 2], s.m[grid.nx - 2]},
                                      {s.rho[grid.nx - 1], s.m[grid.nx - 1]}, pm);
    double mass0 = 0.0;
    for (int i = 1; i < grid.nx - 1; ++i) mass0 += s.rho[i];
    const State next = scheme.step(s, dt);
    double mass1 = 0.0;
    for (int i = 1; i < grid.nx - 1; ++i) mass1 += next.rho[i];
    CHECK((mass1 - mass0) * dx ==
          doctest::Approx(-dt * (f_hi.rho - f_lo.rho)).epsilon(1e-12).scale(1e-12));
}

TEST_CASE("total mass is conserved while the wave is interior") {
    const Params prm = default_params();
    const Grid grid(-100.0, 100.0, 512);
    for (int order : {1, 2}) {
        SchemeConfig cfg;
        cfg.order = order;
        const Scheme scheme(grid, prm, default_pm(), cfg);
        State s = scheme.init_state(default_wave(), {});
        double mass0 = std::accumulate(s.rho.begin(), s.rho.end(), 0.0);
        s = scheme.run(s, 5.0, [](const State&) {});
        double mass1 = std::accumulate(s.rho.begin(), s.rho.end(), 0.0);
        CHECK(std::abs(mass1 - mass0) * grid.dx() < 1e-10 * (1.0 + s.t));
    }
}

TEST_CASE("cfl violation and vacuum are detected") {
    const Params prm = default_params();
    const Grid grid(-100.0, 100.0, 256);
    const Scheme scheme(grid, prm, default_pm(), SchemeConfig{});
    State s = scheme.init_state(default_wave(), {});
    CHECK_THROWS_AS(scheme.step(s, 10.0 * scheme.stable_dt(s)), CflViolation);

    // strong symmetric expansion of a thin gas at a CFL number beyond the
    // positivity-preserving range empties the center cells
    const Params thin(1e-6, 1, 1, 1, 1, 1e-3, 1e-3);
    SchemeConfig vac_cfg;
    vac_cfg.order = 1;
    vac_cfg.cfl = 0.9;
    const Scheme sparse(grid, thin, PressureModel::quadratic(2.0, thin), vac_cfg);
    State v = constant_state(grid, 1e-3, 0.0, 1e-3);
    for (int i = 0; i < grid.nx; ++i) {
        v.m[i] = (i < grid.nx / 2 ? -1.0 : 1.0) * 0.05;
    }
    CHECK_THROWS_AS(
        [&] {
            for (int n = 0; n < 2000; ++n) v = sparse.step(v, sparse.stable_dt(v));
        }(),
        VacuumDetected);
}

TEST_CASE("riemann data self-converges at first order") {
    // dam-break style data across the admissible band; L1 self-convergence
    // against an 8x refined first-order run
    const Params prm = default_params();
    const PressureModel pm = default_pm();

    auto final_rho = [&](int nx) {
        const Grid g(-10.0, 10.0, nx);
        SchemeConfig cfg;
        cfg.order = 1;
        const Scheme scheme(g, prm, pm, cfg);
        State s;
        s.t = 0.0;
        s.rho.resize(nx);
        s.m.assign(nx, 0.0);
        s.phi.resize(nx);
        for (int i = 0; i < nx; ++i) {
            s.rho[i] = g.x(i) < 0.0 ? 1.2 : 0.8;
            s.phi[i] = prm.a / prm.b * s.rho[i];
        }
        return scheme.run(s, 1.0, [](const State&) {}).rho;
    };

    auto l1_against_restriction = [&](const std::vector<double>& coarse,
                                      const std::vector<double>& fine) {
        const int ratio = static_cast<int>(fine.size() / coarse.size());
        double err = 0.0;
        for (size_t i = 0; i < coarse.size(); ++i) {
            double avg = 0.0;
            for (int j = 0; j < ratio; ++j) avg += fine[i * ratio + j];
            avg /= ratio;
            err += std::abs(coarse[i] - avg);
        }
        return err * 20.0 / static_cast<double>(coarse.size());
    };

    const double e1 = l1_against_restriction(final_rho(128), final_rho(1024));
    const double e2 = l1_against_restriction(final_rho(256), final_rho(2048));
    const double order = std::log2(e1 / e2);
    CHECK(order > 0.7);
    CHECK(e2 < e1);
}

TEST_CASE("smooth data self-converges at order >= 0.9 with first-order fluxes") {
    const Params prm = default_params();
    const PressureModel pm = default_pm();

    auto final_rho = [&](int nx) {
        const Grid g(-40.0, 40.0, nx);
        SchemeConfig cfg;
        cfg.order = 1;
        const Scheme scheme(g, prm, pm, cfg);
        InitPerturbation p;
        p.kind = InitPerturbation::Kind::Bump;
        p.amplitude = 0.05;
        p.width = 4.0;
        const State s0 = scheme.init_state(default_wave(), p);
        return scheme.run(s0, 2.0, [](const State&) {}).rho;
    };

    auto l1_vs_8x = [&](const std::vector<double>& coarse,
                        const std::vector<double>& fine) {
        const int ratio = static_cast<int>(fine.size() / coarse.size());
        double err = 0.0;
        for (size_t i = 0; i < coarse.size(); ++i) {
            double avg = 0.0;
            for (int j = 0; j < ratio; ++j) avg += fine[i * ratio + j];
            err += std::abs(coarse[i] - avg / ratio);
        }
        return err * 80.0 / static_cast<double>(coarse.size());
    };

    const double e1 = l1_vs_8x(final_rho(256), final_rho(2048));
    const double e2 = l1_vs_8x(final_rho(512), final_rho(4096));
    CHECK(std::log2(e1 / e2) >= 0.9);
}

TEST_CASE("trajectories are bit-deterministic") {
    const Params prm = default_params();
    const Grid grid(-100.0, 100.0, 512);
    SchemeConfig cfg;
    cfg.snapshot_times = {2.5};
    const Scheme scheme(grid, prm, default_pm(), cfg);
    const State s0 = scheme.init_state(default_wave(), {});
    const State a = scheme.run(s0, 5.0, [](const State&) {});
    const State b = scheme.run(s0, 5.0, [](const State&) {});
    CHECK(a.rho == b.rho);
    CHECK(a.m == b.m);
    CHECK(a.phi == b.phi);
}
