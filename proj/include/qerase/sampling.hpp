#pragma once

// Random generators for oracle cross-checks.

#include "qerase/model.hpp"
#include "qerase/thermal.hpp"

#include <cstddef>
#include <random>

namespace qerase {

using Rng = std::mt19937_64;

struct DynamicsSample {
    int n1 = 0;
    int n2 = 0;
    double t = 0.0;
    ModelParams params;
};

/// n1, n2 in [0, 5]; g in [0.1, 1]; Delta in [-2, 2]; gamma in [0, 1]; t in [0, 20].
[[nodiscard]] DynamicsSample sample_dynamics_point(Rng& rng);

/// Normalized FieldState with levels1 * levels2 <= max_dimension built from
/// random weighted field blocks (each saturating or nearly saturating its
/// positivity bound, with random phases) plus a few loose populations.
[[nodiscard]] FieldState sample_field_state(Rng& rng, std::size_t max_dimension = 32);

} // namespace qerase
