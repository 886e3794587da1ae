#pragma once

#include "qerase/model.hpp"
#include "qerase/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qerase::testing {

/// Model parameters with omega1 = omega2 = 1 and the requested detuning.
inline ModelParams params_with(double g, double delta, double gamma, double theta = std::numbers::pi / 2,
                               double phi = 0.0) {
    ModelParams p;
    p.g = g;
    p.gamma = gamma;
    p.theta = theta;
    p.phi = phi;
    p.set_detuning(delta);
    return p;
}

inline ModelParams random_params(Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ModelParams p;
    p.omega1 = 0.5 + unit(rng);
    p.omega2 = 0.5 + unit(rng);
    p.g = 0.1 + 0.9 * unit(rng);
    p.gamma = unit(rng);
    p.theta = std::numbers::pi * unit(rng);
    p.phi = 2.0 * std::numbers::pi * unit(rng) * 0.999;
    p.set_detuning(-2.0 + 4.0 * unit(rng));
    return p;
}

} // namespace qerase::testing
