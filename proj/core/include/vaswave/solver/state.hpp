#pragma once

#include <vector>

namespace vaswave {

// Grid functions of the full system at one time level.
struct State {
    double t = 0.0;
    std::vector<double> rho;  // cell density
    std::vector<double> m;    // momentum density
    std::vector<double> phi;  // chemoattractant concentration

    int size() const { return static_cast<int>(rho.size()); }
};

}  // namespace vaswave
