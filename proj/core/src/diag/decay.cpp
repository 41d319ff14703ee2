#include "vaswave/diag/decay.hpp"

#include <cmath>
#include <string>

#include "vaswave/detail/linfit.hpp"
#include "vaswave/errors.hpp"

namespace vaswave {

DecayFit fit_decay(const std::vector<double>& times,
                   const std::vector<double>& values, const FitWindow& window) {
    if (times.size() != values.size()) {
        throw ValidationError("times and values must have equal length");
    }
    const double span = (1.0 + window.t_hi) / (1.0 + window.t_lo);
    if (!(span >= 9.5)) {
        throw WindowTooNarrow("fit window must span a decade in 1+t, got ratio " +
                              std::to_string(span));
    }

    std::vector<double> xs, ys;
    const double eps = 1e-9;
    for (size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        if (t < window.t_lo - eps || t > window.t_hi + eps) continue;
        if (!(values[i] > 0.0)) {
            throw NonpositiveValues("fit_decay requires positive values, got " +
                                    std::to_string(values[i]) + " at t = " +
                                    std::to_string(t));
        }
        xs.push_back(std::log1p(t));
        ys.push_back(std::log(values[i]));
    }
    if (xs.size() < 3) {
        throw DegenerateFit("fewer than 3 samples inside the fit window");
    }
    const auto f = detail::linear_fit(xs, ys);
    return DecayFit{f.slope, f.r2};
}

}  // namespace vaswave
