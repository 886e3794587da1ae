#pragma once

// Two-mode two-photon Jaynes-Cummings model: a two-level atom exchanging one
// photon with each of two field modes,
//
//   H = w1 a1^+ a1 + w2 a2^+ a2 + (w/2) sz + g (a1 a2 s+ + a1^+ a2^+ s-).
//
// K1 = n1 + (1+sz)/2 and K2 = n2 + (1+sz)/2 are conserved, so H splits into
// 2x2 blocks spanned by |n1,n2,e> and |n1+1,n2+1,g>. Each block is diagonal in
// a dressed basis with energies f+- = base_energy +- Omega.

#include <numbers>

namespace qerase {

struct ModelParams {
    double omega1 = 1.0; ///< mode-1 frequency
    double omega2 = 1.0; ///< mode-2 frequency
    double omega = 2.0;  ///< atomic transition frequency
    double g = 0.5;      ///< atom-field coupling
    double gamma = 0.5;  ///< phase decoherence coefficient
    double theta = std::numbers::pi / 2; ///< measurement polar angle
    double phi = 0.0;                    ///< measurement azimuthal angle

    /// Delta = omega - omega1 - omega2.
    [[nodiscard]] double detuning() const noexcept { return omega - omega1 - omega2; }

    /// Moves the atomic frequency so that detuning() == delta.
    void set_detuning(double delta) noexcept { omega = omega1 + omega2 + delta; }

    /// Throws InvalidArgument unless g > 0, gamma >= 0, omega1, omega2 > 0,
    /// theta in [0, pi] and phi in [0, 2 pi).
    void validate() const;
};

struct BlockHamiltonian {
    int n1 = 0;
    int n2 = 0;
    double omega_rabi = 0.0;
    double f_plus = 0.0;
    double f_minus = 0.0;
    double base_energy = 0.0;
};

/// Omega_{n1,n2} = sqrt(Delta^2/4 + g^2 (n1+1)(n2+1)).
[[nodiscard]] double rabi_frequency(int n1, int n2, const ModelParams& params);

[[nodiscard]] BlockHamiltonian block_hamiltonian(int n1, int n2, const ModelParams& params);

/// Angle of the dressed basis, arctan(2 g sqrt(K1 K2) / Delta), taken in
/// (0, pi) so that Delta = 0 gives pi/2.
[[nodiscard]] double mixing_angle(int n1, int n2, const ModelParams& params);

} // namespace qerase
