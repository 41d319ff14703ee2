#pragma once

#include <vector>

namespace vaswave {

struct FitWindow {
    double t_lo = 0.0;
    double t_hi = 0.0;
};

struct DecayFit {
    double exponent = 0.0;
    double r2 = 1.0;
};

// Least-squares slope of log(values) against log(1+t) over the window.
// The window must span a decade in 1+t (a 5% slack admits windows like
// [t_end/10, t_end] whose 1+t ratio falls just short of 10). Values inside
// the window must be strictly positive.
DecayFit fit_decay(const std::vector<double>& times,
                   const std::vector<double>& values, const FitWindow& window);

}  // namespace vaswave
