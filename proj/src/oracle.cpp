#include "qerase/oracle.hpp"

#include "qerase/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace qerase {

namespace {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

constexpr double kTailTolerance = 1e-14;
constexpr int kMaxTerms = 1'000'000;

void require_time(double t, const char* where) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidArgument(std::string(where) + ": time must be finite and >= 0");
    }
}

AtomFieldBlockState to_block_state(int n1, int n2, const Matrix2& rho) {
    AtomFieldBlockState s;
    s.n1 = n1;
    s.n2 = n2;
    s.p_ee = rho(0, 0).real();
    s.p_gg = rho(1, 1).real();
    s.c_eg = rho(0, 1);
    return s;
}

// sqrt((gamma t)^k / k!) * f^k * exp(-gamma t f^2 / 2) * exp(-i f t), evaluated in
// log space so that k in the thousands does not overflow.
Complex scaled_eigenfactor(int k, double f, double gt, double t) {
    const Complex rotation = std::polar(1.0, -f * t);
    if (k == 0) return std::exp(-0.5 * gt * f * f) * rotation;
    if (f == 0.0 || gt == 0.0) return 0.0;
    const double log_mag = 0.5 * (k * std::log(gt) - std::lgamma(k + 1.0)) + k * std::log(std::abs(f)) -
                           0.5 * gt * f * f;
    const double sign = (f < 0.0 && (k % 2) == 1) ? -1.0 : 1.0;
    return sign * std::exp(log_mag) * rotation;
}

} // namespace

SeriesSolution decoherence_series(int n1, int n2, double t, const ModelParams& params, int k_max) {
    require_time(t, "decoherence_series");
    if (k_max < 1) throw InvalidArgument("decoherence_series: k_max must be >= 1");

    const BlockHamiltonian h = block_hamiltonian(n1, n2, params);
    const double angle = mixing_angle(n1, n2, params);
    // Columns are the dressed states |+> and |-> in the {|n1,n2,e>, |n1+1,n2+1,g>} basis.
    Matrix2 dressed;
    dressed << std::cos(angle / 2), -std::sin(angle / 2),
               std::sin(angle / 2),  std::cos(angle / 2);

    Matrix2 rho0 = Matrix2::Zero();
    rho0(0, 0) = 1.0;

    const double gt = params.gamma * t;
    const double peak = gt * std::max(h.f_plus * h.f_plus, h.f_minus * h.f_minus);

    Matrix2 sum = Matrix2::Zero();
    for (int k = 0; k <= kMaxTerms; ++k) {
        Eigen::Vector2cd eig;
        eig << scaled_eigenfactor(k, h.f_plus, gt, t), scaled_eigenfactor(k, h.f_minus, gt, t);
        const Matrix2 mk = dressed * eig.asDiagonal() * dressed.adjoint();
        const Matrix2 term = mk * rho0 * mk.adjoint();
        sum += term;

        const double term_trace = term.trace().real();
        const double running = sum.trace().real();
        // gt == 0 leaves only the unitary k = 0 term
        if (k + 1 >= k_max && (gt == 0.0 || (k > peak && term_trace <= kTailTolerance * running))) {
            return {to_block_state(n1, n2, sum), k + 1};
        }
    }
    throw ConvergenceError("decoherence_series: no convergence after 10^6 terms");
}

AtomFieldBlockState oracle_evolve_block(int n1, int n2, double t, const ModelParams& params, int k_max) {
    return decoherence_series(n1, n2, t, params, k_max).state;
}

AtomFieldBlockState integrate_master_equation(int n1, int n2, double t, const ModelParams& params) {
    require_time(t, "integrate_master_equation");
    const double omega_rabi = rabi_frequency(n1, n2, params);
    const double coupling = params.g * std::sqrt(static_cast<double>(n1 + 1) * (n2 + 1));

    Matrix2 hamiltonian;
    hamiltonian << params.omega1 * n1 + params.omega2 * n2 + 0.5 * params.omega, coupling,
                   coupling, params.omega1 * (n1 + 1) + params.omega2 * (n2 + 1) - 0.5 * params.omega;

    auto generator = [&](const Matrix2& rho) -> Matrix2 {
        const Matrix2 comm = hamiltonian * rho - rho * hamiltonian;
        const Matrix2 double_comm = hamiltonian * comm - comm * hamiltonian;
        return Complex(0.0, -1.0) * comm - 0.5 * params.gamma * double_comm;
    };

    double max_step = 0.01 / omega_rabi;
    if (params.gamma > 0.0) max_step = std::min(max_step, 0.01 / (params.gamma * omega_rabi * omega_rabi));
    const auto steps = static_cast<long>(std::ceil(t / max_step));

    Matrix2 rho = Matrix2::Zero();
    rho(0, 0) = 1.0;
    if (steps > 0) {
        const double dt = t / static_cast<double>(steps);
        for (long i = 0; i < steps; ++i) {
            const Matrix2 k1 = generator(rho);
            const Matrix2 k2 = generator(rho + 0.5 * dt * k1);
            const Matrix2 k3 = generator(rho + 0.5 * dt * k2);
            const Matrix2 k4 = generator(rho + dt * k3);
            rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    return to_block_state(n1, n2, rho);
}

} // namespace qerase
