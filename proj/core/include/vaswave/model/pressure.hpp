#pragma once

#include <functional>

#include "vaswave/model/params.hpp"

namespace vaswave {

// Pressure law p(rho) together with the reduced law
//   q(rho) = p(rho) - (a mu / 2b) rho^2
// that drives the limit dynamics. The default is the quadratic law
// p = (kappa/2) rho^2; arbitrary C^3 laws can be plugged in as
// (p, p', p'') triples, with p''' defaulting to a centered difference
// of p''.
class PressureModel {
  public:
    using Fn = std::function<double(double)>;

    // Default: quadratic law with kappa = 2 and a*mu/b = 1.
    PressureModel() = default;

    static PressureModel quadratic(double kappa, const Params& params);

    // User-supplied law. d3p may be null, in which case p''' is obtained by
    // differencing d2p (h = 1e-5 * max(1, rho)).
    static PressureModel custom(Fn p, Fn dp, Fn d2p, Fn d3p, const Params& params);

    double p(double rho) const {
        return quadratic_ ? 0.5 * kappa_ * rho * rho : p_(rho);
    }
    double dp(double rho) const { return quadratic_ ? kappa_ * rho : dp_(rho); }
    double d2p(double rho) const { return quadratic_ ? kappa_ : d2p_(rho); }
    double d3p(double rho) const;

    double q(double rho) const { return p(rho) - 0.5 * chi_ * rho * rho; }
    double dq(double rho) const { return dp(rho) - chi_ * rho; }
    double d2q(double rho) const { return d2p(rho) - chi_; }
    double d3q(double rho) const { return d3p(rho); }

    double kappa() const { return kappa_; }
    // chemotactic pressure offset a*mu/b
    double chi() const { return chi_; }
    bool is_quadratic() const { return quadratic_; }

  private:
    bool quadratic_ = true;
    double kappa_ = 2.0;
    double chi_ = 1.0;
    Fn p_, dp_, d2p_, d3p_;
};

struct PressureChain {
    double p, dp, d2p;
    double q, dq, d2q;
};

// All six values of the (p, q) derivative chain at one density.
// Throws NonpositiveDensity for rho <= 0.
PressureChain eval_pressure_chain(const PressureModel& pm, double rho);

}  // namespace vaswave
