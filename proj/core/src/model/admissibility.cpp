#include "vaswave/model/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vaswave/errors.hpp"

namespace vaswave {

namespace {

// Eigenvalues of the symmetric 2x2 [[p', -mu rho], [-mu rho, b mu rho/a]].
std::pair<double, double> eigenvalues(const Params& prm, const PressureModel& pm,
                                      double rho) {
    const double a11 = pm.dp(rho);
    const double a12 = -prm.mu * rho;
    const double a22 = prm.b * prm.mu * rho / prm.a;
    const double tr = a11 + a22;
    const double det = a11 * a22 - a12 * a12;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

}  // namespace

double StructuralCheck::lambda1(double rho) const {
    return eigenvalues(params, pm, rho).first;
}

double StructuralCheck::lambda2(double rho) const {
    return eigenvalues(params, pm, rho).second;
}

double StructuralCheck::quadratic_form(double rho, double x1, double x2) const {
    return pm.dp(rho) * x1 * x1 - 2.0 * params.mu * rho * x1 * x2 +
           params.b * params.mu * rho / params.a * x2 * x2;
}

StructuralCheck check_admissible(const Params& params, const PressureModel& pm,
                                 int n_samples) {
    params.validate();
    if (n_samples < 1002) n_samples = 1002;  // >= 1000 interior + endpoints

    StructuralCheck sc;
    sc.params = params;
    sc.pm = pm;
    sc.band_lo = params.band_lo();
    sc.band_hi = params.band_hi();

    const double lo = sc.band_lo;
    const double hi = sc.band_hi;
    double c1 = std::numeric_limits<double>::infinity();
    double c2 = -std::numeric_limits<double>::infinity();
    double dq_min = std::numeric_limits<double>::infinity();

    for (int i = 0; i < n_samples; ++i) {
        const double rho = lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(n_samples - 1);
        const double dq = pm.dq(rho);
        if (!(dq > 0.0)) {
            throw AdmissibilityViolation(
                "q'(rho) = " + std::to_string(dq) + " <= 0 at rho = " +
                std::to_string(rho) +
                " (requires p'(rho) - (a mu / b) rho > 0 on the band)");
        }
        dq_min = std::min(dq_min, dq);

        // q chain identities at every sample: q = p - (a mu / 2b) rho^2 and
        // q' = p' - (a mu / b) rho, to 1e-12 relative
        const double q_direct = pm.p(rho) - 0.5 * pm.chi() * rho * rho;
        if (std::abs(pm.q(rho) - q_direct) >
            1e-12 * std::max(1.0, std::abs(q_direct))) {
            throw InvalidParams("pressure model violates the q identity at rho = " +
                                std::to_string(rho));
        }
        const double dq_direct = pm.dp(rho) - pm.chi() * rho;
        if (std::abs(dq - dq_direct) >
            1e-12 * std::max(1.0, std::abs(dq_direct))) {
            throw InvalidParams("pressure model violates the q' identity at rho = " +
                                std::to_string(rho));
        }

        auto [l1, l2] = eigenvalues(params, pm, rho);
        if (!(l1 > 0.0)) {
            throw AdmissibilityViolation(
                "A(rho) not positive definite at rho = " + std::to_string(rho));
        }
        c1 = std::min(c1, l1);
        c2 = std::max(c2, l2);
    }

    // p in C^3 proxy: p'' must be consistent with a centered difference of p'.
    for (double rho : {lo, 0.5 * (lo + hi), hi}) {
        const double h = 1e-6 * std::max(1.0, rho);
        const double fd = (pm.dp(rho + h) - pm.dp(rho - h)) / (2.0 * h);
        if (std::abs(fd - pm.d2p(rho)) > 1e-4 * std::max(1.0, std::abs(fd))) {
            throw InvalidParams(
                "p'' inconsistent with finite difference of p' at rho = " +
                std::to_string(rho));
        }
    }

    sc.c1 = c1;
    sc.c2 = c2;
    sc.dq_min = dq_min;
    return sc;
}

}  // namespace vaswave
