#pragma once

// Grid sweeps over the full pipeline (evolve or stationary -> erase -> thermal
// mix -> log-negativity), single-point queries and the randomized oracle check.

#include "qerase/erasure.hpp"
#include "qerase/model.hpp"
#include "qerase/thermal.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qerase {

[[nodiscard]] std::string_view version() noexcept;

enum class SweepParameter {
    MbarAlpha, ///< sets mbar1 = mbar2
    Mbar1,
    Mbar2,
    Delta,
    Time,
    MbarDiff, ///< |mbar1 - mbar2| at fixed mbar_sum
};

[[nodiscard]] std::string_view to_string(SweepParameter p) noexcept;
[[nodiscard]] SweepParameter parse_sweep_parameter(std::string_view name);

struct SweepAxis {
    SweepParameter parameter = SweepParameter::MbarAlpha;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    void validate() const;
    [[nodiscard]] std::size_t size() const;
    /// start + i*step, with the last point snapped onto stop.
    [[nodiscard]] double value(std::size_t i) const;

    /// Parses NAME=START:STOP:STEP.
    [[nodiscard]] static SweepAxis parse(std::string_view text);
};

struct FockInput {
    int n1 = 0;
    int n2 = 0;
};

/// Everything needed to evaluate one point of the pipeline.
struct PointSettings {
    ModelParams params;
    ThermalSpec thermal;
    std::optional<double> mbar_sum;
    EvolutionTime time = Stationary{};
    Outcome outcome = Outcome::Plus;
    std::optional<FockInput> fock; ///< bypasses thermal averaging

    void validate() const;
    /// Sets the quantity controlled by `p` to `value`.
    void apply(SweepParameter p, double value);
};

enum class SweepMode { Stationary, TimePoint };

struct SweepSpec {
    std::vector<SweepAxis> axes; ///< at most two, axis-major order
    PointSettings fixed;

    [[nodiscard]] SweepMode mode() const noexcept;
    void validate() const;
    [[nodiscard]] std::size_t grid_size() const;
};

struct SweepRow {
    std::vector<double> axis_values;
    double log_negativity = 0.0;
};

struct SweepResult {
    std::vector<std::string> header;
    std::vector<SweepRow> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    /// `#`-prefixed metadata, the header, then rows with 17 significant digits.
    void write_csv(std::ostream& os) const;
    [[nodiscard]] std::string to_csv() const;
};

/// The value reported for one grid point.
[[nodiscard]] double evaluate_point(const PointSettings& point, const TruncationConfig& trunc);

/// Evaluates every grid point (concurrently when threads != 1; 0 picks the
/// hardware concurrency). Rows come back axis1-major regardless of scheduling.
/// A TruncationError is rethrown naming the offending grid point.
[[nodiscard]] SweepResult run_sweep(const SweepSpec& spec, const TruncationConfig& trunc, unsigned threads = 0);

struct PointReport {
    double log_negativity = 0.0;
    double probability_plus = 0.0;
    double probability_minus = 0.0;
    FockCutoffs cutoffs;
};

[[nodiscard]] PointReport single_point(const PointSettings& point, const TruncationConfig& trunc);

inline constexpr double kDynamicsOracleTolerance = 1e-8;
inline constexpr double kNegativityOracleTolerance = 1e-10;

struct OracleCheckReport {
    int trials = 0;
    double max_dynamics_deviation = 0.0;
    double max_negativity_deviation = 0.0;

    [[nodiscard]] bool passed() const noexcept {
        return max_dynamics_deviation <= kDynamicsOracleTolerance &&
               max_negativity_deviation <= kNegativityOracleTolerance;
    }
};

/// Random closed-form vs series-oracle dynamics and chain vs dense
/// log-negativity comparisons. Throws InvalidArgument for trials < 1.
[[nodiscard]] OracleCheckReport oracle_check(std::uint64_t seed, int trials);

/// Sweep presets for figures 1-6. Time axes run over g t in [0, 20].
[[nodiscard]] SweepSpec figure_preset(int figure);

} // namespace qerase
