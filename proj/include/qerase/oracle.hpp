#pragma once

// Independent reference solutions of the phase-decoherence master equation
//
//   d rho/dt = -i [H, rho] - (gamma/2) [H, [H, rho]]
//
// restricted to one (n1, n2) block. Neither path uses the closed form in
// dynamics.hpp; they exist to check it.

#include "qerase/dynamics.hpp"
#include "qerase/model.hpp"

namespace qerase {

struct SeriesSolution {
    AtomFieldBlockState state;
    int terms = 0; ///< number of k-terms summed
};

/// Sums rho(t) = sum_k (gamma t)^k / k! M_k rho(0) M_k^+ with
/// M_k = H^k exp(-i H t) exp(-gamma t H^2 / 2), each M_k built from the
/// dressed-state eigendecomposition of the block. At least `k_max` terms are
/// summed; summation continues past the Poisson peak until a term's trace
/// drops below 1e-14 of the running trace. Throws ConvergenceError after 10^6 terms.
[[nodiscard]] SeriesSolution decoherence_series(int n1, int n2, double t, const ModelParams& params, int k_max = 1);

[[nodiscard]] AtomFieldBlockState oracle_evolve_block(int n1, int n2, double t, const ModelParams& params,
                                                      int k_max = 1);

/// Fixed-step RK4 integration of the master equation on the 2x2 block with
/// step min(0.01/Omega, 0.01/(gamma Omega^2)).
[[nodiscard]] AtomFieldBlockState integrate_master_equation(int n1, int n2, double t, const ModelParams& params);

} // namespace qerase
