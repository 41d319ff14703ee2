#pragma once

#include <functional>
#include <vector>

#include "vaswave/model/params.hpp"
#include "vaswave/model/pressure.hpp"
#include "vaswave/solver/grid.hpp"
#include "vaswave/solver/state.hpp"
#include "vaswave/wave/field.hpp"

namespace vaswave {

enum class DiffusionMode { Explicit, Implicit };

struct SchemeConfig {
    double cfl = 0.45;
    DiffusionMode diffusion_mode = DiffusionMode::Implicit;
    // 1: Euler update with first-order HLL fluxes.
    // 2: minmod-limited MUSCL reconstruction with Heun time stepping.
    // Both treat the -alpha m relaxation with the exact integrating factor.
    int order = 2;
    std::vector<double> snapshot_times;

    void validate() const {
        if (!(cfl > 0.0 && cfl < 1.0)) throw ValidationError("cfl must be in (0,1)");
        if (order != 1 && order != 2) throw ValidationError("order must be 1 or 2");
    }
};

struct InitPerturbation {
    enum class Kind { None, Shift, Bump };
    Kind kind = Kind::None;
    double shift = 0.0;      // Kind::Shift: rho0(x) = rho_bar(x + shift, 0)
    double amplitude = 0.0;  // Kind::Bump
    double center = 0.0;
    double width = 1.0;      // support half-width
    bool zero_mass = false;  // odd-shaped rho bump with zero integral
};

struct CellState {
    double rho;
    double m;
};

struct Flux {
    double rho;
    double m;
};

// HLL flux for F(rho, m) = (m, m^2/rho + p(rho)) with wave-speed bounds
// u -/+ sqrt(p'(rho)) over the two states. Consistent: equal states return
// the exact flux.
Flux hyperbolic_flux(const CellState& left, const CellState& right,
                     const PressureModel& pm);

// One diffusion-reaction update of phi_t = D phi_xx + a rho - b phi with
// Dirichlet boundary values. Implicit mode treats diffusion and the -b phi
// decay with backward Euler (tridiagonal solve); the a rho source is held at
// the supplied time level in both modes.
std::vector<double> diffuse_phi(const std::vector<double>& phi,
                                const std::vector<double>& rho, double dt,
                                double dx, double D, double a, double b,
                                DiffusionMode mode, double bc_lo, double bc_hi);

// Finite-volume time integrator for the full system with far-field Dirichlet
// boundaries. A single run is sequential; State snapshots are plain values
// and safe to hand across threads.
class Scheme {
  public:
    Scheme(Grid grid, Params params, PressureModel pm, SchemeConfig cfg);

    const Grid& grid() const { return grid_; }
    const SchemeConfig& config() const { return cfg_; }

    // State at t = 0 from the wave triple plus an optional perturbation.
    // Throws VacuumInducingPerturbation when the bump drives rho <= 0.
    State init_state(const WaveField& wave, const InitPerturbation& pert) const;

    double max_signal_speed(const State& s) const;
    // Largest dt admitted by the CFL bound (and the explicit diffusion bound
    // when applicable).
    double stable_dt(const State& s) const;

    // One full update. Throws CflViolation when dt exceeds the stability
    // bound and VacuumDetected when the update produces rho <= 0.
    State step(const State& s, double dt) const;

    using SnapshotSink = std::function<void(const State&)>;

    // Advance to t_end with adaptive dt, landing exactly on each snapshot
    // time (sink invoked there). Deterministic for fixed inputs.
    State run(State state, double t_end, const SnapshotSink& sink) const;

  private:
    void rhs(const std::vector<double>& rho, const std::vector<double>& m,
             const std::vector<double>& phx, std::vector<double>& drho,
             std::vector<double>& dm) const;

    Grid grid_;
    Params params_;
    PressureModel pm_;
    SchemeConfig cfg_;
};

}  // namespace vaswave
