#include "vaswave/diag/monitors.hpp"

#include <algorithm>
#include <cmath>

#include "vaswave/errors.hpp"

namespace vaswave {

double theil_sen_slope(const std::vector<double>& x,
                       const std::vector<double>& y) {
    std::vector<double> slopes;
    for (size_t i = 0; i < x.size(); ++i) {
        for (size_t j = i + 1; j < x.size(); ++j) {
            if (x[j] != x[i]) slopes.push_back((y[j] - y[i]) / (x[j] - x[i]));
        }
    }
    if (slopes.empty()) return 0.0;
    const size_t mid = slopes.size() / 2;
    std::nth_element(slopes.begin(), slopes.begin() + mid, slopes.end());
    double med = slopes[mid];
    if (slopes.size() % 2 == 0) {
        std::nth_element(slopes.begin(), slopes.begin() + mid - 1,
                         slopes.begin() + mid);
        med = 0.5 * (med + slopes[mid - 1]);
    }
    return med;
}

namespace {

MonitorRow make_row(const std::string& name, double weight,
                    const std::vector<double>& times,
                    const std::vector<double>& weighted) {
    MonitorRow row;
    row.name = name;
    row.weight = weight;
    for (double v : weighted) row.sup = std::max(row.sup, v);

    const size_t n = weighted.size();
    const size_t start = n / 2;
    std::vector<double> xs, ys;
    bool any_signal = false;
    for (size_t i = start; i < n; ++i) {
        xs.push_back(std::log1p(times[i]));
        ys.push_back(std::log(std::max(weighted[i], 1e-300)));
        if (weighted[i] > 1e-300) any_signal = true;
    }
    row.ts_slope = any_signal ? theil_sen_slope(xs, ys) : 0.0;
    row.bounded = row.ts_slope <= 0.05;
    return row;
}

}  // namespace

std::vector<MonitorRow> weighted_monitor(const std::vector<MonitorSample>& s) {
    if (s.size() < 10) {
        throw ValidationError("weighted_monitor needs at least 10 samples");
    }
    const double span = (1.0 + s.back().t) / (1.0 + s.front().t);
    if (span < 9.5) {
        throw ValidationError("monitor samples must span a decade in 1+t");
    }

    std::vector<double> times;
    for (const auto& smp : s) times.push_back(smp.t);

    std::vector<MonitorRow> rows;
    std::vector<double> w(s.size());
    for (int k = 0; k <= 2; ++k) {
        for (size_t i = 0; i < s.size(); ++i) {
            const double sum = s[i].vx_l2[k] + s[i].phi_l2[k];
            w[i] = std::pow(1.0 + s[i].t, k + 1) * sum * sum;
        }
        rows.push_back(make_row("vxphi_k" + std::to_string(k), k + 1, times, w));
    }
    for (int k = 0; k <= 2; ++k) {
        for (size_t i = 0; i < s.size(); ++i) {
            w[i] = std::pow(1.0 + s[i].t, k + 2) * s[i].vt_l2[k] * s[i].vt_l2[k];
        }
        rows.push_back(make_row("vt_k" + std::to_string(k), k + 2, times, w));
    }
    return rows;
}

}  // namespace vaswave
