#pragma once

// Projective measurement of the atom in the tilted basis
//   Plus : cos(theta/2)|e> + e^{i phi} sin(theta/2)|g>
//   Minus: cos(theta/2)|g> - e^{-i phi} sin(theta/2)|e>
// and the unnormalized two-mode field block that remains.

#include "qerase/dynamics.hpp"

#include <complex>
#include <string_view>

namespace qerase {

enum class Outcome { Plus, Minus };

[[nodiscard]] std::string_view to_string(Outcome outcome) noexcept;
/// Accepts "plus" or "minus"; throws InvalidArgument otherwise.
[[nodiscard]] Outcome parse_outcome(std::string_view text);

struct MeasurementOutcome {
    Outcome label = Outcome::Plus;
    double probability = 0.0;
};

/// Field state on span{|n1,n2>, |n1+1,n2+1>}: two weights and the coefficient
/// c of |n1,n2><n1+1,n2+1|.
struct FieldBlock {
    int n1 = 0;
    int n2 = 0;
    double w_low = 0.0;
    double w_high = 0.0;
    std::complex<double> c{};
    bool normalized = false;

    [[nodiscard]] double trace() const noexcept { return w_low + w_high; }
    [[nodiscard]] bool is_valid(double tol = 1e-12) const noexcept;
};

[[nodiscard]] FieldBlock erase(const AtomFieldBlockState& block, double theta, double phi, Outcome outcome);

[[nodiscard]] double outcome_probability(const AtomFieldBlockState& block, double theta, double phi,
                                         Outcome outcome);

[[nodiscard]] MeasurementOutcome measure(const AtomFieldBlockState& block, double theta, double phi,
                                         Outcome outcome);

/// Discards the atom without measuring it. The result never carries a coherence.
[[nodiscard]] FieldBlock trace_out_atom(const AtomFieldBlockState& block);

} // namespace qerase
