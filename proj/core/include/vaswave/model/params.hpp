#pragma once

#include <cmath>
#include <string>

#include "vaswave/errors.hpp"

namespace vaswave {

// Physical constants of the cell/chemoattractant system together with the
// far-field densities. Immutable after construction; phi_minus/phi_plus are
// always recomputed from (a/b)*rho so they cannot drift out of sync.
struct Params {
    double alpha = 1.0;      // momentum damping rate
    double mu = 1.0;         // chemotactic sensitivity
    double a = 1.0;          // chemoattractant secretion rate
    double b = 1.0;          // chemoattractant death rate
    double dd = 1.0;         // chemoattractant diffusivity
    double rho_minus = 0.8;  // far-field density at x -> -inf
    double rho_plus = 1.2;   // far-field density at x -> +inf

    Params() = default;

    Params(double alpha_, double mu_, double a_, double b_, double dd_,
           double rho_minus_, double rho_plus_)
        : alpha(alpha_), mu(mu_), a(a_), b(b_), dd(dd_),
          rho_minus(rho_minus_), rho_plus(rho_plus_) {
        validate();
    }

    void validate() const {
        auto req = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw InvalidParams(std::string(name) + " must be strictly positive");
            }
        };
        req(alpha, "alpha");
        req(mu, "mu");
        req(a, "a");
        req(b, "b");
        req(dd, "dd");
        req(rho_minus, "rho_minus");
        req(rho_plus, "rho_plus");
    }

    double phi_minus() const { return a / b * rho_minus; }
    double phi_plus() const { return a / b * rho_plus; }

    // wave strength
    double delta0() const { return std::abs(rho_plus - rho_minus); }

    double rho_min() const { return std::min(rho_minus, rho_plus); }
    double rho_max() const { return std::max(rho_minus, rho_plus); }

    // density band on which structural admissibility is required:
    // [min(rho±)/2, 2 max(rho±)]
    double band_lo() const { return 0.5 * rho_min(); }
    double band_hi() const { return 2.0 * rho_max(); }
};

}  // namespace vaswave
