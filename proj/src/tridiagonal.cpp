#include "qerase/tridiagonal.hpp"

#include "qerase/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qerase {

std::vector<double> symmetric_tridiagonal_eigenvalues(std::span<const double> diagonal,
                                                      std::span<const double> off_diagonal) {
    const std::size_t n = diagonal.size();
    if (n == 0) return {};
    if (off_diagonal.size() + 1 != n) {
        throw InvalidArgument("tridiagonal: off-diagonal must have exactly one entry fewer than the diagonal");
    }
    std::vector<double> d(diagonal.begin(), diagonal.end());
    std::vector<double> e(n, 0.0);
    std::copy(off_diagonal.begin(), off_diagonal.end(), e.begin());

    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int kMaxSweeps = 60;

    for (std::size_t l = 0; l < n; ++l) {
        int sweeps = 0;
        std::size_t m = l;
        do {
            // Find a negligible sub-diagonal element to split at.
            for (m = l; m + 1 < n; ++m) {
                const double scale = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * scale) break;
            }
            if (m == l) break;
            if (sweeps++ == kMaxSweeps) throw ConvergenceError("tridiagonal QL: too many sweeps");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool deflated = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    // Underflow; restart this eigenvalue.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> hermitian_tridiagonal_eigenvalues(std::span<const double> diagonal,
                                                      std::span<const std::complex<double>> off_diagonal) {
    std::vector<double> moduli(off_diagonal.size());
    std::transform(off_diagonal.begin(), off_diagonal.end(), moduli.begin(),
                   [](const std::complex<double>& z) { return std::abs(z); });
    return symmetric_tridiagonal_eigenvalues(diagonal, moduli);
}

} // namespace qerase
