#include "qerase/entanglement.hpp"

#include "qerase/errors.hpp"
#include "qerase/tridiagonal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qerase {

namespace {

constexpr double kTraceTolerance = 1e-10;

// Walks one line of labels, splitting it wherever the coupling vanishes.
template <typename Emit>
void split_line(const std::vector<std::complex<double>>& links, Emit&& emit) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (i + 1 < links.size() && links[i] != std::complex<double>{}) continue;
        emit(start, i + 1);
        start = i + 1;
    }
}

void require_normalized(const FieldState& state, const char* where) {
    if (!state.normalized() || std::abs(state.trace() - 1.0) > kTraceTolerance) {
        throw InvalidArgument(std::string(where) + ": field state must be normalized");
    }
}

} // namespace

std::vector<double> PartialTransposeChain::eigenvalues() const {
    if (labels.size() == 2) {
        const double mean = 0.5 * (diagonal[0] + diagonal[1]);
        const double half_gap = 0.5 * (diagonal[0] - diagonal[1]);
        const double radius = std::sqrt(half_gap * half_gap + std::norm(coupling[0]));
        return {mean - radius, mean + radius};
    }
    return hermitian_tridiagonal_eigenvalues(diagonal, coupling);
}

PartialTransposeDecomposition partial_transpose_blocks(const FieldState& state) {
    PartialTransposeDecomposition out;
    const int l1 = state.levels1();
    const int l2 = state.levels2();

    std::vector<FockLabel> line;
    std::vector<double> diag;
    std::vector<std::complex<double>> links;
    for (int level = 0; level <= (l1 - 1) + (l2 - 1); ++level) {
        line.clear();
        diag.clear();
        links.clear();
        for (int m1 = std::max(0, level - (l2 - 1)); m1 <= std::min(level, l1 - 1); ++m1) {
            const int m2 = level - m1;
            line.push_back({m1, m2});
            diag.push_back(state.population(m1, m2));
            // (m1, m2) -- (m1+1, m2-1) carries the coherence c(m1, m2-1).
            links.push_back(state.coherence(m1, m2 - 1));
        }
        split_line(links, [&](std::size_t begin, std::size_t end) {
            if (end - begin == 1) {
                out.uncoupled.push_back({line[begin], diag[begin]});
                return;
            }
            PartialTransposeChain chain;
            chain.labels.assign(line.begin() + begin, line.begin() + end);
            chain.diagonal.assign(diag.begin() + begin, diag.begin() + end);
            chain.coupling.assign(links.begin() + begin, links.begin() + end - 1);
            out.chains.push_back(std::move(chain));
        });
    }
    return out;
}

double partial_transpose_trace_norm(const FieldState& state) {
    const PartialTransposeDecomposition pt = partial_transpose_blocks(state);
    double norm = 0.0;
    for (const auto& chain : pt.chains) {
        for (double lambda : chain.eigenvalues()) norm += std::abs(lambda);
    }
    for (const auto& entry : pt.uncoupled) norm += std::abs(entry.value);
    return norm;
}

double log_negativity(const FieldState& state) {
    require_normalized(state, "log_negativity");
    double negative = 0.0;
    for (const auto& chain : partial_transpose_blocks(state).chains) {
        for (double lambda : chain.eigenvalues()) {
            if (lambda < -kEigenvalueClamp) negative -= lambda;
        }
    }
    if (negative == 0.0) return 0.0;
    return std::log1p(2.0 * negative) / std::numbers::ln2;
}

double stationary_block_logneg(int n1, int n2, const ModelParams& params) {
    const double delta = params.detuning();
    const double omega_rabi = rabi_frequency(n1, n2, params);
    const double numerator =
        std::sin(params.theta) * params.g * delta * std::sqrt(static_cast<double>(n1 + 1) * (n2 + 1));
    const double denominator = 4.0 * omega_rabi * omega_rabi + delta * delta * std::cos(params.theta);
    if (std::abs(denominator) < 1e-300) {
        throw InvalidArgument("stationary_block_logneg: vanishing denominator 4 Omega^2 + Delta^2 cos(theta)");
    }
    return std::log2(1.0 + 2.0 * std::abs(numerator / denominator));
}

double oracle_log_negativity(const FieldState& state) {
    const std::size_t dim = state.dimension();
    if (dim > kDenseOracleMaxDimension) {
        throw InvalidArgument("oracle_log_negativity: dimension " + std::to_string(dim) + " exceeds " +
                              std::to_string(kDenseOracleMaxDimension));
    }
    const int l1 = state.levels1();
    const int l2 = state.levels2();
    auto idx = [l2](int m1, int m2) { return static_cast<Eigen::Index>(m1) * l2 + m2; };

    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
    for (int m1 = 0; m1 < l1; ++m1) {
        for (int m2 = 0; m2 < l2; ++m2) {
            rho(idx(m1, m2), idx(m1, m2)) = state.population(m1, m2);
            const std::complex<double> c = state.coherence(m1, m2);
            if (c != std::complex<double>{}) {
                rho(idx(m1, m2), idx(m1 + 1, m2 + 1)) = c;
                rho(idx(m1 + 1, m2 + 1), idx(m1, m2)) = std::conj(c);
            }
        }
    }

    // <a1,a2| rho^T2 |b1,b2> = <a1,b2| rho |b1,a2>
    Eigen::MatrixXcd transposed(n, n);
    for (int a1 = 0; a1 < l1; ++a1)
        for (int a2 = 0; a2 < l2; ++a2)
            for (int b1 = 0; b1 < l1; ++b1)
                for (int b2 = 0; b2 < l2; ++b2)
                    transposed(idx(a1, a2), idx(b1, b2)) = rho(idx(a1, b2), idx(b1, a2));

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(transposed, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("oracle_log_negativity: eigensolver failed");
    const double norm = solver.eigenvalues().cwiseAbs().sum();
    return std::max(0.0, std::log2(norm));
}

double min_eigenvalue(const FieldState& state) {
    const int l1 = state.levels1();
    const int l2 = state.levels2();
    double lowest = std::numeric_limits<double>::infinity();
    // Diagonals m1 - m2 = offset, starting at their smallest label.
    for (int offset = -(l2 - 1); offset <= l1 - 1; ++offset) {
        std::vector<double> diag;
        std::vector<std::complex<double>> off;
        for (int m1 = std::max(0, offset), m2 = m1 - offset; m1 < l1 && m2 < l2; ++m1, ++m2) {
            if (!diag.empty()) off.push_back(state.coherence(m1 - 1, m2 - 1));
            diag.push_back(state.population(m1, m2));
        }
        for (double lambda : hermitian_tridiagonal_eigenvalues(diag, off)) lowest = std::min(lowest, lambda);
    }
    return lowest;
}

} // namespace qerase
