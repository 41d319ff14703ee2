#pragma once

#include "vaswave/errors.hpp"

namespace vaswave {

// Uniform cell-centered 1D mesh on [x_min, x_max].
struct Grid {
    double x_min = -400.0;
    double x_max = 400.0;
    int nx = 8192;

    Grid() = default;
    Grid(double lo, double hi, int n) : x_min(lo), x_max(hi), nx(n) { validate(); }

    void validate() const {
        if (!(x_max > x_min)) throw ValidationError("x_max must exceed x_min");
        if (nx < 64) throw ValidationError("nx must be >= 64");
    }

    double dx() const { return (x_max - x_min) / nx; }
    double x(int i) const { return x_min + (i + 0.5) * dx(); }
};

}  // namespace vaswave
