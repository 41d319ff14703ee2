#include "vaswave/model/pressure.hpp"

#include <cmath>
#include <utility>

#include "vaswave/errors.hpp"

namespace vaswave {

PressureModel PressureModel::quadratic(double kappa, const Params& params) {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw InvalidParams("kappa must be strictly positive");
    }
    PressureModel pm;
    pm.quadratic_ = true;
    pm.kappa_ = kappa;
    pm.chi_ = params.a * params.mu / params.b;
    return pm;
}

PressureModel PressureModel::custom(Fn p, Fn dp, Fn d2p, Fn d3p,
                                    const Params& params) {
    if (!p || !dp || !d2p) {
        throw InvalidParams("custom pressure law requires p, p', p''");
    }
    PressureModel pm;
    pm.quadratic_ = false;
    pm.kappa_ = 0.0;
    pm.chi_ = params.a * params.mu / params.b;
    pm.p_ = std::move(p);
    pm.dp_ = std::move(dp);
    pm.d2p_ = std::move(d2p);
    pm.d3p_ = std::move(d3p);
    return pm;
}

double PressureModel::d3p(double rho) const {
    if (quadratic_) return 0.0;
    if (d3p_) return d3p_(rho);
    const double h = 1e-5 * std::max(1.0, std::abs(rho));
    return (d2p_(rho + h) - d2p_(rho - h)) / (2.0 * h);
}

PressureChain eval_pressure_chain(const PressureModel& pm, double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw NonpositiveDensity("pressure chain requested at rho = " +
                                 std::to_string(rho));
    }
    return PressureChain{pm.p(rho),  pm.dp(rho), pm.d2p(rho),
                         pm.q(rho),  pm.dq(rho), pm.d2q(rho)};
}

}  // namespace vaswave
