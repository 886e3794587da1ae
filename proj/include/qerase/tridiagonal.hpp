#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qerase {

/// Eigenvalues (ascending) of the real symmetric tridiagonal matrix with the
/// given diagonal and sub-diagonal, by implicit QL with Wilkinson shifts.
/// Throws ConvergenceError if an eigenvalue needs more than 60 sweeps.
[[nodiscard]] std::vector<double> symmetric_tridiagonal_eigenvalues(std::span<const double> diagonal,
                                                                    std::span<const double> off_diagonal);

/// A Hermitian tridiagonal matrix is diagonally-unitarily similar to the real
/// one with off-diagonals |c_i|, so only the moduli matter.
[[nodiscard]] std::vector<double> hermitian_tridiagonal_eigenvalues(std::span<const double> diagonal,
                                                                    std::span<const std::complex<double>> off_diagonal);

} // namespace qerase
