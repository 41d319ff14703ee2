#pragma once

#include <array>
#include <string>
#include <vector>

namespace vaswave {

// Per-snapshot L^2 norms feeding the time-weighted boundedness monitors.
struct MonitorSample {
    double t = 0.0;
    std::array<double, 3> vx_l2{};   // ||d_x^k V_x||, k = 0..2
    std::array<double, 3> phi_l2{};  // ||d_x^k Phi||
    std::array<double, 3> vt_l2{};   // ||d_x^k V_t||
};

struct MonitorRow {
    std::string name;
    double weight = 0.0;  // exponent w in (1+t)^w
    double sup = 0.0;     // running sup of the weighted value
    // Theil-Sen slope of log(weighted value) against log(1+t) over the
    // final half of the samples; <= 0.05 is treated as non-increasing.
    double ts_slope = 0.0;
    bool bounded = true;
};

// Weighted quantities (1+t)^{k+1} (||d^k V_x|| + ||d^k Phi||)^2 and
// (1+t)^{k+2} ||d^k V_t||^2 for k = 0..2. Requires >= 10 samples spanning
// a decade in 1+t.
std::vector<MonitorRow> weighted_monitor(const std::vector<MonitorSample>& s);

// Median of pairwise slopes; robust trend estimate used by the monitors.
double theil_sen_slope(const std::vector<double>& x,
                       const std::vector<double>& y);

}  // namespace vaswave
