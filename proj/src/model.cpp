#include "qerase/model.hpp"

#include "qerase/errors.hpp"

#include <cmath>
#include <string>

namespace qerase {

namespace {

void require_fock(int n1, int n2) {
    if (n1 < 0 || n2 < 0) {
        throw InvalidArgument("Fock labels must be nonnegative, got (" + std::to_string(n1) +
                              ", " + std::to_string(n2) + ")");
    }
}

} // namespace

void ModelParams::validate() const {
    auto fail = [](const std::string& what) { throw InvalidArgument("invalid model parameter: " + what); };
    if (!std::isfinite(omega1) || !std::isfinite(omega2) || !std::isfinite(omega) ||
        !std::isfinite(g) || !std::isfinite(gamma) || !std::isfinite(theta) || !std::isfinite(phi)) {
        fail("all parameters must be finite");
    }
    if (!(g > 0.0)) fail("g must be > 0");
    if (gamma < 0.0) fail("gamma must be >= 0");
    if (!(omega1 > 0.0) || !(omega2 > 0.0)) fail("mode frequencies must be > 0");
    if (theta < 0.0 || theta > std::numbers::pi) fail("theta must lie in [0, pi]");
    if (phi < 0.0 || phi >= 2.0 * std::numbers::pi) fail("phi must lie in [0, 2 pi)");
}

double rabi_frequency(int n1, int n2, const ModelParams& params) {
    require_fock(n1, n2);
    const double delta = params.detuning();
    const double k1k2 = static_cast<double>(n1 + 1) * static_cast<double>(n2 + 1);
    return std::sqrt(0.25 * delta * delta + params.g * params.g * k1k2);
}

BlockHamiltonian block_hamiltonian(int n1, int n2, const ModelParams& params) {
    BlockHamiltonian h;
    h.n1 = n1;
    h.n2 = n2;
    h.omega_rabi = rabi_frequency(n1, n2, params);
    // w1 (K1 - 1/2) + w2 (K2 - 1/2) with K_i = n_i + 1
    h.base_energy = params.omega1 * (n1 + 0.5) + params.omega2 * (n2 + 0.5);
    h.f_plus = h.base_energy + h.omega_rabi;
    h.f_minus = h.base_energy - h.omega_rabi;
    return h;
}

double mixing_angle(int n1, int n2, const ModelParams& params) {
    require_fock(n1, n2);
    const double coupling = params.g * std::sqrt(static_cast<double>(n1 + 1) * (n2 + 1));
    return std::atan2(2.0 * coupling, params.detuning());
}

} // namespace qerase
