#include "vaswave/diag/norms.hpp"

#include <algorithm>
#include <cmath>

#include "vaswave/errors.hpp"

namespace vaswave {

double NormReport::hm(int m) const {
    double s = 0.0;
    for (int k = 0; k <= m && k <= k_max; ++k) s += l2[k] * l2[k];
    return std::sqrt(s);
}

double trapz(const std::vector<double>& f, double dx) {
    if (f.size() < 2) return 0.0;
    double s = 0.5 * (f.front() + f.back());
    for (size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * dx;
}

double trapz_product(const std::vector<double>& f, const std::vector<double>& g,
                     double dx) {
    const size_t n = f.size();
    if (n < 2) return 0.0;
    double s = 0.5 * (f[0] * g[0] + f[n - 1] * g[n - 1]);
    for (size_t i = 1; i + 1 < n; ++i) s += f[i] * g[i];
    return s * dx;
}

std::vector<double> fd_derivative(const std::vector<double>& f, double dx,
                                  int k) {
    const int n = static_cast<int>(f.size());
    if (k == 0) return f;
    if (k < 0 || k > 3) throw ValidationError("fd_derivative supports k <= 3");
    if (n < 6) throw ValidationError("field too short for derivative stencils");
    std::vector<double> d(n);
    const double h = dx;

    switch (k) {
        case 1: {
            for (int i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2 * h);
            d[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
            d[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * h);
            break;
        }
        case 2: {
            const double h2 = h * h;
            for (int i = 1; i + 1 < n; ++i) {
                d[i] = (f[i + 1] - 2 * f[i] + f[i - 1]) / h2;
            }
            d[0] = (2 * f[0] - 5 * f[1] + 4 * f[2] - f[3]) / h2;
            d[n - 1] = (2 * f[n - 1] - 5 * f[n - 2] + 4 * f[n - 3] - f[n - 4]) / h2;
            break;
        }
        case 3: {
            const double h3 = h * h * h;
            for (int i = 2; i + 2 < n; ++i) {
                d[i] = (f[i + 2] - 2 * f[i + 1] + 2 * f[i - 1] - f[i - 2]) /
                       (2 * h3);
            }
            // one-sided second-order five-point stencils
            auto fwd = [&](int i) {
                return (-2.5 * f[i] + 9 * f[i + 1] - 12 * f[i + 2] +
                        7 * f[i + 3] - 1.5 * f[i + 4]) / h3;
            };
            auto bwd = [&](int i) {
                return (2.5 * f[i] - 9 * f[i - 1] + 12 * f[i - 2] -
                        7 * f[i - 3] + 1.5 * f[i - 4]) / h3;
            };
            d[0] = fwd(0);
            d[1] = fwd(1);
            d[n - 2] = bwd(n - 2);
            d[n - 1] = bwd(n - 1);
            break;
        }
        default: break;
    }
    return d;
}

NormReport sobolev_norms(const std::vector<double>& f, double dx, int k_max) {
    if (k_max < 0 || k_max > 3) throw ValidationError("k_max must be <= 3");
    NormReport r;
    r.k_max = k_max;
    std::vector<double> sq(f.size());
    for (int k = 0; k <= k_max; ++k) {
        const std::vector<double> d = k == 0 ? f : fd_derivative(f, dx, k);
        for (size_t i = 0; i < d.size(); ++i) sq[i] = d[i] * d[i];
        r.l2[k] = std::sqrt(trapz(sq, dx));
        if (k <= 1) {
            double m = 0.0;
            for (double v : d) m = std::max(m, std::abs(v));
            r.linf[k] = m;
        }
    }
    return r;
}

}  // namespace vaswave
