#pragma once

#include <array>
#include <vector>

namespace vaswave {

// Discrete Sobolev norms of one grid function: l2[k] = ||d_x^k f||_{L^2} for
// k = 0..k_max, linf[k] for k = 0..1, H^m assembled as
// hm(m)^2 = sum_{k<=m} l2[k]^2.
struct NormReport {
    std::array<double, 4> l2{0.0, 0.0, 0.0, 0.0};
    std::array<double, 2> linf{0.0, 0.0};
    int k_max = 0;

    double hm(int m) const;
};

// d_x^k by centered 2nd-order differences (5-point stencil for k = 3),
// one-sided 2nd-order at the boundaries.
std::vector<double> fd_derivative(const std::vector<double>& f, double dx,
                                  int k);

NormReport sobolev_norms(const std::vector<double>& f, double dx,
                         int k_max = 3);

// Trapezoid quadrature of f and of products, matching the norm convention.
double trapz(const std::vector<double>& f, double dx);
double trapz_product(const std::vector<double>& f, const std::vector<double>& g,
                     double dx);

}  // namespace vaswave
