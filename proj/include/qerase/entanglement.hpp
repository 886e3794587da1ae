#pragma once

// Log-negativity log2 ||rho^T2||_1 of a two-mode field state whose
// coherences all connect |n1,n2> with |n1+1,n2+1>.
//
// Transposing mode 2 moves the coherence c(n1,n2) to the element between
// (n1, n2+1) and (n1+1, n2). Those labels share m1 + m2, so the partial
// transpose is a direct sum of Hermitian tridiagonal chains, one per
// anti-diagonal, plus whatever diagonal entries no coherence touches. When
// at most one mode is thermal every chain has length two.

#include "qerase/model.hpp"
#include "qerase/thermal.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace qerase {

struct FockLabel {
    int m1 = 0;
    int m2 = 0;

    friend bool operator==(const FockLabel&, const FockLabel&) = default;
};

/// Connected run of states (m1, L-m1), (m1+1, L-m1-1), ... on one anti-diagonal
/// of the partial transpose. coupling[i] is the element between labels[i] and labels[i+1].
struct PartialTransposeChain {
    std::vector<FockLabel> labels;
    std::vector<double> diagonal;
    std::vector<std::complex<double>> coupling;

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
    [[nodiscard]] std::vector<double> eigenvalues() const;
};

struct UncoupledEntry {
    FockLabel label;
    double value = 0.0;
};

struct PartialTransposeDecomposition {
    std::vector<PartialTransposeChain> chains;
    std::vector<UncoupledEntry> uncoupled;
};

/// Every population lands either in exactly one chain or in `uncoupled`.
[[nodiscard]] PartialTransposeDecomposition partial_transpose_blocks(const FieldState& state);

/// Eigenvalues with |lambda| below this are reported as zero.
inline constexpr double kEigenvalueClamp = 1e-13;

/// log2(1 + 2 * sum of negative partial-transpose eigenvalues). Exactly 0 when
/// nothing survives the clamp. Throws InvalidArgument for unnormalized input.
[[nodiscard]] double log_negativity(const FieldState& state);

/// Trace norm of the partial transpose.
[[nodiscard]] double partial_transpose_trace_norm(const FieldState& state);

/// Closed form for the stationary single-sector state:
/// log2(1 + 2 |sin(theta) g Delta sqrt((n1+1)(n2+1)) / (4 Omega^2 + Delta^2 cos(theta))|).
[[nodiscard]] double stationary_block_logneg(int n1, int n2, const ModelParams& params);

/// Dense reference: builds rho, transposes mode 2 entry by entry and
/// diagonalizes. Throws InvalidArgument above kDenseOracleMaxDimension.
[[nodiscard]] double oracle_log_negativity(const FieldState& state);

inline constexpr std::size_t kDenseOracleMaxDimension = 4096;

/// Smallest eigenvalue of the field state itself (chains along m1 - m2 = const).
[[nodiscard]] double min_eigenvalue(const FieldState& state);

} // namespace qerase
