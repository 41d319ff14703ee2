#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace vaswave::detail {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 1.0;
};

// Ordinary least squares y = intercept + slope * x. With zero total variance
// in y the fit is the constant and r2 is reported as 1.
inline LinearFit linear_fit(const std::vector<double>& x,
                            const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LinearFit f;
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    f.slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / static_cast<double>(n);
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / static_cast<double>(n);
    for (size_t i = 0; i < n; ++i) {
        const double fit = f.intercept + f.slope * x[i];
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    f.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}

}  // namespace vaswave::detail
