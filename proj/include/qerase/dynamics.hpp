#pragma once

#include "qerase/model.hpp"

#include <complex>

namespace qerase {

/// Atom-field density matrix restricted to span{|n1,n2,e>, |n1+1,n2+1,g>}.
/// Only the upper coherence <n1,n2,e|rho|n1+1,n2+1,g> is stored.
struct AtomFieldBlockState {
    int n1 = 0;
    int n2 = 0;
    double p_ee = 1.0;
    double p_gg = 0.0;
    std::complex<double> c_eg{};

    [[nodiscard]] double trace() const noexcept { return p_ee + p_gg; }

    /// Unit trace and 2x2 positivity, both to within `tol`.
    [[nodiscard]] bool is_valid(double tol = 1e-12) const noexcept;
};

/// Closed-form state at time t for the initial state |n1,n2> (x) |e> under
/// phase decoherence. All decaying terms carry the factor exp(-2 gamma t Omega^2).
[[nodiscard]] AtomFieldBlockState evolve_block(int n1, int n2, double t, const ModelParams& params);

/// The t -> infinity limit of evolve_block. Throws NoStationaryState when gamma == 0.
[[nodiscard]] AtomFieldBlockState stationary_block(int n1, int n2, const ModelParams& params);

} // namespace qerase
