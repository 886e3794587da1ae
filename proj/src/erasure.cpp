#include "qerase/erasure.hpp"

#include "qerase/errors.hpp"

#include <cmath>
#include <string>

namespace qerase {

std::string_view to_string(Outcome outcome) noexcept {
    return outcome == Outcome::Plus ? "plus" : "minus";
}

Outcome parse_outcome(std::string_view text) {
    if (text == "plus") return Outcome::Plus;
    if (text == "minus") return Outcome::Minus;
    throw InvalidArgument("unknown measurement outcome '" + std::string(text) + "' (expected plus|minus)");
}

bool FieldBlock::is_valid(double tol) const noexcept {
    if (w_low < -tol || w_high < -tol) return false;
    if (std::norm(c) > w_low * w_high + tol) return false;
    return !normalized || std::abs(trace() - 1.0) <= tol;
}

FieldBlock erase(const AtomFieldBlockState& block, double theta, double phi, Outcome outcome) {
    if (!block.is_valid()) {
        throw InvalidArgument("erase: atom-field block violates trace or positivity");
    }
    const double cos_sq = std::cos(theta / 2) * std::cos(theta / 2);
    const double sin_sq = std::sin(theta / 2) * std::sin(theta / 2);
    // <psi|e><g|psi> picks up (1/2) sin(theta) e^{i phi}; the Minus projector flips its sign.
    const std::complex<double> transfer = 0.5 * std::sin(theta) * std::polar(1.0, phi);

    FieldBlock f;
    f.n1 = block.n1;
    f.n2 = block.n2;
    if (outcome == Outcome::Plus) {
        f.w_low = cos_sq * block.p_ee;
        f.w_high = sin_sq * block.p_gg;
        f.c = transfer * block.c_eg;
    } else {
        f.w_low = sin_sq * block.p_ee;
        f.w_high = cos_sq * block.p_gg;
        f.c = -transfer * block.c_eg;
    }
    return f;
}

double outcome_probability(const AtomFieldBlockState& block, double theta, double phi, Outcome outcome) {
    return erase(block, theta, phi, outcome).trace();
}

MeasurementOutcome measure(const AtomFieldBlockState& block, double theta, double phi, Outcome outcome) {
    return {outcome, outcome_probability(block, theta, phi, outcome)};
}

FieldBlock trace_out_atom(const AtomFieldBlockState& block) {
    FieldBlock f;
    f.n1 = block.n1;
    f.n2 = block.n2;
    f.w_low = block.p_ee;
    f.w_high = block.p_gg;
    return f;
}

} // namespace qerase
