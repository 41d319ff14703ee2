#pragma once

#include <memory>
#include <vector>

#include "vaswave/wave/profile.hpp"

namespace vaswave {

struct WaveTriple {
    double rho_bar = 0.0;
    double m_bar = 0.0;
    double phi_bar = 0.0;
};

// Evaluator for the full wave triple
//
//   rho_bar(x,t) = phi(x / sqrt(1+t))
//   m_bar        = -(1/alpha) d/dx q(rho_bar)
//   phi_bar      = (a/b) rho_bar
//
// and its partials d_x^k d_t^l up to k + l <= 3 (l <= 1), by the chain rule
// on xi = x / sqrt(1+t). Profile values between nodes use cubic Hermite
// interpolation of (phi, dphi), (dphi, d2phi) and (d2phi, d3phi); d3phi is
// interpolated linearly. Outside the tabulated window the fields are the
// far-field constants and all derivatives vanish.
//
// Reentrant: safe for concurrent readers once constructed.
class WaveField {
  public:
    explicit WaveField(WaveProfile profile);

    const WaveProfile& profile() const { return *wp_; }
    const Params& params() const { return wp_->params; }

    // d_x^k d_t^l of (rho_bar, m_bar, phi_bar) at (x, t).
    // Throws OrderUnsupported when k > 3, l > 1 or k + l > 3.
    WaveTriple eval(double x, double t, int k = 0, int l = 0) const;

    // Profile derivatives phi^(d), d = 0..3, at similarity coordinate xi.
    double profile_deriv(double xi, int d) const;

  private:
    struct ProfilePoint {
        double f, fp, fpp, fppp;
    };
    ProfilePoint interp(double xi) const;

    std::shared_ptr<const WaveProfile> wp_;
};

struct DecayScan {
    double exponent = 0.0;
    double r2 = 0.0;
    std::vector<double> times;
    std::vector<double> norms;
};

// L^p norm decay of d_t^l d_x^k rho_bar over a time grid: computes the
// discrete norm on a per-time x grid covering the wave support and fits
// log(norm) against log(1+t). p must be 2 or infinity (pass p_index = 0
// for the sup norm, 2 for L^2).
DecayScan profile_decay_scan(const WaveField& wf, int k, int l, int p_index,
                             const std::vector<double>& t_grid,
                             int n_eval = 16385);

}  // namespace vaswave
