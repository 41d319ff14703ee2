#pragma once

#include "vaswave/model/params.hpp"
#include "vaswave/model/pressure.hpp"

namespace vaswave {

// Result of the structural admissibility sweep. The coupling matrix
//
//   A(rho) = [ p'(rho)      -mu rho      ]
//            [ -mu rho      b mu rho / a ]
//
// is positive definite exactly when q'(rho) > 0 (at fixed rho > 0), and
// c1/c2 are the extreme eigenvalues of A over the admissibility band, so
// that for every rho in the band and all (x1, x2):
//
//   c1 (x1^2 + x2^2) <= p' x1^2 - 2 mu rho x1 x2 + (b mu rho / a) x2^2
//                    <= c2 (x1^2 + x2^2).
struct StructuralCheck {
    Params params;
    PressureModel pm;
    double band_lo = 0.0;
    double band_hi = 0.0;
    double c1 = 0.0;  // min over band of lambda_min(A)
    double c2 = 0.0;  // max over band of lambda_max(A)
    double dq_min = 0.0;  // min over band of q'(rho), > 0 when admissible

    double lambda1(double rho) const;  // smaller eigenvalue of A(rho)
    double lambda2(double rho) const;  // larger eigenvalue of A(rho)
    double quadratic_form(double rho, double x1, double x2) const;
};

// Sweeps the band [min(rho±)/2, 2 max(rho±)] on n_samples uniform points
// (endpoints included) and fails with AdmissibilityViolation if q' <= 0
// anywhere sampled. Also cross-checks p'' against a centered difference of
// p' and the q identity against p at the sample points. Deterministic.
StructuralCheck check_admissible(const Params& params, const PressureModel& pm,
                                 int n_samples = 2001);

}  // namespace vaswave
