#include "qerase/dynamics.hpp"

#include "qerase/errors.hpp"

#include <cmath>

namespace qerase {

namespace {

struct BlockConstants {
    double delta;
    double omega_sq;
    double omega_rabi;
    double coupling; // g sqrt((n1+1)(n2+1))
};

BlockConstants constants_for(int n1, int n2, const ModelParams& params) {
    BlockConstants k{};
    k.delta = params.detuning();
    k.omega_rabi = rabi_frequency(n1, n2, params);
    k.omega_sq = k.omega_rabi * k.omega_rabi;
    k.coupling = params.g * std::sqrt(static_cast<double>(n1 + 1) * static_cast<double>(n2 + 1));
    return k;
}

// Builds the block state from the damped oscillation pieces
// decay*cos(2 Omega t) and decay*sin(2 Omega t).
AtomFieldBlockState assemble(int n1, int n2, const BlockConstants& k, double damped_cos, double damped_sin) {
    const double detuning_ratio = k.delta * k.delta / (2.0 * k.omega_sq);
    AtomFieldBlockState s;
    s.n1 = n1;
    s.n2 = n2;
    s.p_ee = 0.25 * (2.0 + detuning_ratio + (2.0 - detuning_ratio) * damped_cos);
    s.p_gg = 0.25 * (k.coupling * k.coupling / k.omega_sq) * (2.0 - 2.0 * damped_cos);
    const double prefactor = k.coupling / (4.0 * k.omega_rabi);
    s.c_eg = prefactor * std::complex<double>((k.delta / k.omega_rabi) * (1.0 - damped_cos), 2.0 * damped_sin);
    return s;
}

} // namespace

bool AtomFieldBlockState::is_valid(double tol) const noexcept {
    if (p_ee < -tol || p_gg < -tol) return false;
    if (std::abs(trace() - 1.0) > tol) return false;
    return std::norm(c_eg) <= p_ee * p_gg + tol;
}

AtomFieldBlockState evolve_block(int n1, int n2, double t, const ModelParams& params) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidArgument("evolve_block: time must be finite and >= 0");
    }
    const BlockConstants k = constants_for(n1, n2, params);
    const double decay = std::exp(-2.0 * params.gamma * t * k.omega_sq);
    const double phase = 2.0 * k.omega_rabi * t;
    return assemble(n1, n2, k, decay * std::cos(phase), decay * std::sin(phase));
}

AtomFieldBlockState stationary_block(int n1, int n2, const ModelParams& params) {
    if (!(params.gamma > 0.0)) {
        throw NoStationaryState("no stationary state without phase decoherence (gamma must be > 0)");
    }
    return assemble(n1, n2, constants_for(n1, n2, params), 0.0, 0.0);
}

} // namespace qerase
