#pragma once

// Thermal averaging of post-measurement field blocks. Each Fock sector
// (n1, n2) is weighted by the product of two Bose-Einstein distributions and
// the unnormalized blocks are summed before a single global normalization,
// so sectors enter in proportion to their measurement likelihood.

#include "qerase/erasure.hpp"
#include "qerase/model.hpp"

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace qerase {

struct ThermalSpec {
    double mbar1 = 0.0;
    double mbar2 = 0.0;

    void validate() const;

    static ThermalSpec from_inverse_temperatures(double beta1, double omega1, double beta2, double omega2);
};

/// 1 / (exp(beta omega) - 1).
[[nodiscard]] double mean_photon_number(double beta, double omega);

/// beta omega = ln(1 + 1/mbar); infinite for the vacuum.
[[nodiscard]] double reduced_inverse_temperature(double mbar);

struct TruncationConfig {
    double tail_mass = 1e-10; ///< total thermal probability allowed outside the cutoff
    int hard_cap = 512;       ///< largest per-mode cutoff accepted

    void validate() const;
};

struct FockCutoffs {
    int n1 = 0;
    int n2 = 0;
};

/// Smallest N with sum_{n>N} mbar^n/(1+mbar)^{n+1} <= tail_mass/2. Does not
/// apply the hard cap.
[[nodiscard]] int fock_cutoff(double mbar, const TruncationConfig& trunc);

/// Per-mode cutoffs; throws TruncationError if either exceeds trunc.hard_cap.
[[nodiscard]] FockCutoffs fock_cutoffs(const ThermalSpec& spec, const TruncationConfig& trunc);

/// mbar1^n1 mbar2^n2 / ((1+mbar1)^{n1+1} (1+mbar2)^{n2+1}).
[[nodiscard]] double thermal_weight(int n1, int n2, const ThermalSpec& spec);

struct Stationary {};

/// Either an absolute time t >= 0 or the t -> infinity limit.
using EvolutionTime = std::variant<double, Stationary>;

/// Two-mode field density matrix whose only coherences connect |n1,n2> with
/// |n1+1,n2+1>. Stored densely over levels 0..levels1()-1 x 0..levels2()-1.
class FieldState {
public:
    [[nodiscard]] int levels1() const noexcept { return levels1_; }
    [[nodiscard]] int levels2() const noexcept { return levels2_; }

    /// Zero outside the stored grid.
    [[nodiscard]] double population(int m1, int m2) const noexcept;
    /// Coefficient of |n1,n2><n1+1,n2+1|; zero outside the stored band.
    [[nodiscard]] std::complex<double> coherence(int n1, int n2) const noexcept;

    [[nodiscard]] double trace() const noexcept;
    /// The constant that was applied to reach unit trace (1 if never normalized).
    [[nodiscard]] double normalization() const noexcept { return normalization_; }
    [[nodiscard]] bool normalized() const noexcept { return normalized_; }

    /// Total matrix dimension levels1 * levels2.
    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(levels1_) * static_cast<std::size_t>(levels2_);
    }

private:
    friend class FieldStateBuilder;

    [[nodiscard]] std::size_t index(int m1, int m2) const noexcept {
        return static_cast<std::size_t>(m1) * static_cast<std::size_t>(levels2_) + static_cast<std::size_t>(m2);
    }

    int levels1_ = 1;
    int levels2_ = 1;
    std::vector<double> populations_;
    std::vector<std::complex<double>> coherences_;
    double normalization_ = 1.0;
    bool normalized_ = false;
};

/// Accumulates weighted field blocks. A block (n1, n2) adds w_low at
/// (n1, n2), w_high at (n1+1, n2+1) and its coherence at (n1, n2), so each
/// population generally collects contributions from two neighbouring blocks.
class FieldStateBuilder {
public:
    FieldStateBuilder(int levels1, int levels2);

    void add(const FieldBlock& block, double weight = 1.0);
    void add_population(int m1, int m2, double weight);

    /// Scales by 1/trace. Throws StructureError if the result has zero trace
    /// or a coherence exceeds its positivity bound.
    [[nodiscard]] FieldState build_normalized() const;
    [[nodiscard]] FieldState build_unnormalized() const;

private:
    FieldState state_;
};

/// Normalized thermal ensemble after evolution and erasure, truncated by the tail bound.
[[nodiscard]] FieldState mix_thermal(const EvolutionTime& time, const ModelParams& params, const ThermalSpec& spec,
                                     const TruncationConfig& trunc, Outcome outcome);

/// Same, with explicit per-mode cutoffs instead of the tail bound.
[[nodiscard]] FieldState mix_thermal(const EvolutionTime& time, const ModelParams& params, const ThermalSpec& spec,
                                     FockCutoffs cutoffs, Outcome outcome);

/// Thermal ensemble with the atom traced out instead of measured.
[[nodiscard]] FieldState mix_thermal_unmeasured(const EvolutionTime& time, const ModelParams& params,
                                                const ThermalSpec& spec, const TruncationConfig& trunc);

/// Probability of `outcome` over the truncated thermal ensemble.
[[nodiscard]] double ensemble_outcome_probability(const EvolutionTime& time, const ModelParams& params,
                                                  const ThermalSpec& spec, const TruncationConfig& trunc,
                                                  Outcome outcome);

/// Normalized field state for the Fock input |n1,n2> (x) |e>, no thermal averaging.
[[nodiscard]] FieldState mix_fock(int n1, int n2, const EvolutionTime& time, const ModelParams& params,
                                  Outcome outcome);

/// evolve_block or stationary_block depending on `time`.
[[nodiscard]] AtomFieldBlockState block_at(int n1, int n2, const EvolutionTime& time, const ModelParams& params);

} // namespace qerase
