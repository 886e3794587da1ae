#include "qerase/thermal.hpp"

#include "qerase/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qerase {

namespace {

constexpr double kCoherenceSlack = 1e-12;

template <typename BlockToField>
FieldState accumulate(const EvolutionTime& time, const ModelParams& params, const ThermalSpec& spec,
                      FockCutoffs cutoffs, BlockToField&& to_field) {
    params.validate();
    spec.validate();
    FieldStateBuilder builder(cutoffs.n1 + 2, cutoffs.n2 + 2);
    for (int n1 = 0; n1 <= cutoffs.n1; ++n1) {
        for (int n2 = 0; n2 <= cutoffs.n2; ++n2) {
            const double w = thermal_weight(n1, n2, spec);
            if (w == 0.0) continue;
            builder.add(to_field(block_at(n1, n2, time, params)), w);
        }
    }
    return builder.build_normalized();
}

} // namespace

void ThermalSpec::validate() const {
    if (!(mbar1 >= 0.0) || !(mbar2 >= 0.0) || !std::isfinite(mbar1) || !std::isfinite(mbar2)) {
        throw InvalidArgument("mean photon numbers must be finite and >= 0");
    }
}

ThermalSpec ThermalSpec::from_inverse_temperatures(double beta1, double omega1, double beta2, double omega2) {
    return {mean_photon_number(beta1, omega1), mean_photon_number(beta2, omega2)};
}

double mean_photon_number(double beta, double omega) {
    if (!(beta > 0.0) || !(omega > 0.0)) {
        throw InvalidArgument("mean_photon_number: beta and omega must be > 0");
    }
    return 1.0 / std::expm1(beta * omega);
}

double reduced_inverse_temperature(double mbar) {
    if (!(mbar >= 0.0)) throw InvalidArgument("reduced_inverse_temperature: mbar must be >= 0");
    if (mbar == 0.0) return std::numeric_limits<double>::infinity();
    return std::log1p(1.0 / mbar);
}

void TruncationConfig::validate() const {
    if (!(tail_mass > 0.0) || !(tail_mass < 1.0)) throw InvalidArgument("tail_mass must lie in (0, 1)");
    if (hard_cap < 0) throw InvalidArgument("hard_cap must be >= 0");
}

int fock_cutoff(double mbar, const TruncationConfig& trunc) {
    trunc.validate();
    if (!(mbar >= 0.0) || !std::isfinite(mbar)) throw InvalidArgument("fock_cutoff: mbar must be finite and >= 0");
    if (mbar == 0.0) return 0;
    const double ratio = mbar / (1.0 + mbar);
    const double n = std::ceil(std::log(trunc.tail_mass / 2.0) / std::log(ratio)) - 1.0;
    if (n > static_cast<double>(std::numeric_limits<int>::max() / 2)) return std::numeric_limits<int>::max() / 2;
    return static_cast<int>(n);
}

FockCutoffs fock_cutoffs(const ThermalSpec& spec, const TruncationConfig& trunc) {
    spec.validate();
    const FockCutoffs c{fock_cutoff(spec.mbar1, trunc), fock_cutoff(spec.mbar2, trunc)};
    if (c.n1 > trunc.hard_cap || c.n2 > trunc.hard_cap) {
        throw TruncationError("thermal cutoff (" + std::to_string(c.n1) + ", " + std::to_string(c.n2) +
                              ") exceeds hard cap " + std::to_string(trunc.hard_cap) +
                              "; lower the mean photon numbers or raise the cap");
    }
    return c;
}

double thermal_weight(int n1, int n2, const ThermalSpec& spec) {
    if (n1 < 0 || n2 < 0) throw InvalidArgument("thermal_weight: Fock labels must be nonnegative");
    auto single = [](double mbar, int n) {
        // pow(0, 0) == 1 gives the vacuum.
        return std::pow(mbar / (1.0 + mbar), n) / (1.0 + mbar);
    };
    return single(spec.mbar1, n1) * single(spec.mbar2, n2);
}

double FieldState::population(int m1, int m2) const noexcept {
    if (m1 < 0 || m2 < 0 || m1 >= levels1_ || m2 >= levels2_) return 0.0;
    return populations_[index(m1, m2)];
}

std::complex<double> FieldState::coherence(int n1, int n2) const noexcept {
    if (n1 < 0 || n2 < 0 || n1 + 1 >= levels1_ || n2 + 1 >= levels2_) return {};
    return coherences_[index(n1, n2)];
}

double FieldState::trace() const noexcept {
    double sum = 0.0;
    for (double p : populations_) sum += p;
    return sum;
}

FieldStateBuilder::FieldStateBuilder(int levels1, int levels2) {
    if (levels1 < 1 || levels2 < 1) throw InvalidArgument("FieldStateBuilder: need at least one level per mode");
    state_.levels1_ = levels1;
    state_.levels2_ = levels2;
    state_.populations_.assign(state_.dimension(), 0.0);
    state_.coherences_.assign(state_.dimension(), {});
}

void FieldStateBuilder::add(const FieldBlock& block, double weight) {
    if (block.n1 < 0 || block.n2 < 0 || block.n1 + 1 >= state_.levels1_ || block.n2 + 1 >= state_.levels2_) {
        throw InvalidArgument("FieldStateBuilder::add: block (" + std::to_string(block.n1) + ", " +
                              std::to_string(block.n2) + ") does not fit the level grid");
    }
    if (!(weight >= 0.0)) throw InvalidArgument("FieldStateBuilder::add: weight must be >= 0");
    state_.populations_[state_.index(block.n1, block.n2)] += weight * block.w_low;
    state_.populations_[state_.index(block.n1 + 1, block.n2 + 1)] += weight * block.w_high;
    state_.coherences_[state_.index(block.n1, block.n2)] += weight * block.c;
}

void FieldStateBuilder::add_population(int m1, int m2, double weight) {
    if (m1 < 0 || m2 < 0 || m1 >= state_.levels1_ || m2 >= state_.levels2_) {
        throw InvalidArgument("FieldStateBuilder::add_population: label outside the level grid");
    }
    if (!(weight >= 0.0)) throw InvalidArgument("FieldStateBuilder::add_population: weight must be >= 0");
    state_.populations_[state_.index(m1, m2)] += weight;
}

FieldState FieldStateBuilder::build_unnormalized() const {
    const FieldState& s = state_;
    for (int n1 = 0; n1 + 1 < s.levels1_; ++n1) {
        for (int n2 = 0; n2 + 1 < s.levels2_; ++n2) {
            const double bound = s.population(n1, n2) * s.population(n1 + 1, n2 + 1);
            const double scale = s.population(n1, n2) + s.population(n1 + 1, n2 + 1);
            if (std::norm(s.coherence(n1, n2)) > bound + kCoherenceSlack * scale * scale) {
                throw StructureError("coherence at (" + std::to_string(n1) + ", " + std::to_string(n2) +
                                     ") violates the positivity bound");
            }
        }
    }
    return s;
}

FieldState FieldStateBuilder::build_normalized() const {
    FieldState s = build_unnormalized();
    const double total = s.trace();
    if (!(total > 0.0)) throw StructureError("cannot normalize a field state with zero trace");
    const double n = 1.0 / total;
    for (double& p : s.populations_) p *= n;
    for (auto& c : s.coherences_) c *= n;
    s.normalization_ = n;
    s.normalized_ = true;
    return s;
}

AtomFieldBlockState block_at(int n1, int n2, const EvolutionTime& time, const ModelParams& params) {
    if (std::holds_alternative<Stationary>(time)) return stationary_block(n1, n2, params);
    return evolve_block(n1, n2, std::get<double>(time), params);
}

FieldState mix_thermal(const EvolutionTime& time, const ModelParams& params, const ThermalSpec& spec,
                       const TruncationConfig& trunc, Outcome outcome) {
    return mix_thermal(time, params, spec, fock_cutoffs(spec, trunc), outcome);
}

FieldState mix_thermal(const EvolutionTime& time, const ModelParams& params, const ThermalSpec& spec,
                       FockCutoffs cutoffs, Outcome outcome) {
    if (cutoffs.n1 < 0 || cutoffs.n2 < 0) throw InvalidArgument("mix_thermal: cutoffs must be >= 0");
    return accumulate(time, params, spec, cutoffs, [&](const AtomFieldBlockState& b) {
        return erase(b, params.theta, params.phi, outcome);
    });
}

FieldState mix_thermal_unmeasured(const EvolutionTime& time, const ModelParams& params, const ThermalSpec& spec,
                                  const TruncationConfig& trunc) {
    return accumulate(time, params, spec, fock_cutoffs(spec, trunc),
                      [](const AtomFieldBlockState& b) { return trace_out_atom(b); });
}

double ensemble_outcome_probability(const EvolutionTime& time, const ModelParams& params, const ThermalSpec& spec,
                                    const TruncationConfig& trunc, Outcome outcome) {
    params.validate();
    const FockCutoffs cutoffs = fock_cutoffs(spec, trunc);
    double weighted = 0.0;
    double total = 0.0;
    for (int n1 = 0; n1 <= cutoffs.n1; ++n1) {
        for (int n2 = 0; n2 <= cutoffs.n2; ++n2) {
            const double w = thermal_weight(n1, n2, spec);
            if (w == 0.0) continue;
            weighted += w * outcome_probability(block_at(n1, n2, time, params), params.theta, params.phi, outcome);
            total += w;
        }
    }
    return weighted / total;
}

FieldState mix_fock(int n1, int n2, const EvolutionTime& time, const ModelParams& params, Outcome outcome) {
    params.validate();
    if (n1 < 0 || n2 < 0) throw InvalidArgument("mix_fock: Fock labels must be nonnegative");
    FieldStateBuilder builder(n1 + 2, n2 + 2);
    builder.add(erase(block_at(n1, n2, time, params), params.theta, params.phi, outcome));
    return builder.build_normalized();
}

} // namespace qerase
