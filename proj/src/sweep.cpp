#include "qerase/sweep.hpp"

#include "qerase/dynamics.hpp"
#include "qerase/entanglement.hpp"
#include "qerase/errors.hpp"
#include "qerase/oracle.hpp"
#include "qerase/sampling.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

namespace qerase {

namespace {

std::string num(double x) { return fmt::format("{:.17g}", x); }

double parse_number(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InvalidArgument(fmt::format("cannot parse {} '{}' as a number", what, text));
    }
    return value;
}

bool is_thermal_axis(SweepParameter p) {
    return p == SweepParameter::MbarAlpha || p == SweepParameter::Mbar1 || p == SweepParameter::Mbar2 ||
           p == SweepParameter::MbarDiff;
}

std::string describe_point(const SweepSpec& spec, const std::vector<double>& values) {
    std::string out;
    for (std::size_t a = 0; a < values.size(); ++a) {
        if (!out.empty()) out += ", ";
        out += fmt::format("{}={}", to_string(spec.axes[a].parameter), num(values[a]));
    }
    return out;
}

} // namespace

std::string_view version() noexcept { return QERASE_VERSION; }

std::string_view to_string(SweepParameter p) noexcept {
    switch (p) {
    case SweepParameter::MbarAlpha: return "mbar_alpha";
    case SweepParameter::Mbar1: return "mbar1";
    case SweepParameter::Mbar2: return "mbar2";
    case SweepParameter::Delta: return "delta";
    case SweepParameter::Time: return "t";
    case SweepParameter::MbarDiff: return "mbar_diff";
    }
    return "?";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
    for (auto p : {SweepParameter::MbarAlpha, SweepParameter::Mbar1, SweepParameter::Mbar2, SweepParameter::Delta,
                   SweepParameter::Time, SweepParameter::MbarDiff}) {
        if (to_string(p) == name) return p;
    }
    throw InvalidArgument(fmt::format(
        "unknown sweep parameter '{}' (expected mbar_alpha, mbar1, mbar2, delta, t or mbar_diff)", name));
}

void SweepAxis::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw InvalidArgument("sweep axis bounds must be finite");
    }
    if (!(step > 0.0)) throw InvalidArgument(fmt::format("sweep axis {}: step must be > 0", to_string(parameter)));
    if (start > stop) throw InvalidArgument(fmt::format("sweep axis {}: start > stop", to_string(parameter)));
}

std::size_t SweepAxis::size() const {
    validate();
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

double SweepAxis::value(std::size_t i) const {
    const double v = start + static_cast<double>(i) * step;
    if (i + 1 == size() && std::abs(v - stop) <= 1e-9 * step) return stop;
    return v;
}

SweepAxis SweepAxis::parse(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument(fmt::format("sweep '{}' is not NAME=START:STOP:STEP", text));
    SweepAxis axis;
    axis.parameter = parse_sweep_parameter(text.substr(0, eq));
    const std::string_view range = text.substr(eq + 1);
    const auto c1 = range.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : range.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
        throw InvalidArgument(fmt::format("sweep '{}' is not NAME=START:STOP:STEP", text));
    }
    axis.start = parse_number(range.substr(0, c1), "sweep start");
    axis.stop = parse_number(range.substr(c1 + 1, c2 - c1 - 1), "sweep stop");
    axis.step = parse_number(range.substr(c2 + 1), "sweep step");
    axis.validate();
    return axis;
}

void PointSettings::validate() const {
    params.validate();
    thermal.validate();
    if (mbar_sum && !(*mbar_sum >= 0.0)) throw InvalidArgument("mbar_sum must be >= 0");
    if (const double* t = std::get_if<double>(&time); t && !(*t >= 0.0 && std::isfinite(*t))) {
        throw InvalidArgument("time must be finite and >= 0");
    }
    if (std::holds_alternative<Stationary>(time) && !(params.gamma > 0.0)) {
        throw NoStationaryState("the stationary mode requires gamma > 0");
    }
    if (fock && (fock->n1 < 0 || fock->n2 < 0)) throw InvalidArgument("Fock input labels must be >= 0");
}

void PointSettings::apply(SweepParameter p, double value) {
    switch (p) {
    case SweepParameter::MbarAlpha:
        thermal.mbar1 = value;
        thermal.mbar2 = value;
        break;
    case SweepParameter::Mbar1: thermal.mbar1 = value; break;
    case SweepParameter::Mbar2: thermal.mbar2 = value; break;
    case SweepParameter::Delta: params.set_detuning(value); break;
    case SweepParameter::Time: time = value; break;
    case SweepParameter::MbarDiff: {
        if (!mbar_sum) throw InvalidArgument("mbar_diff requires a fixed mbar_sum");
        if (value < 0.0 || value > *mbar_sum) {
            throw InvalidArgument(fmt::format("mbar_diff {} must lie in [0, mbar_sum={}]", num(value), num(*mbar_sum)));
        }
        thermal.mbar1 = 0.5 * (*mbar_sum + value);
        thermal.mbar2 = 0.5 * (*mbar_sum - value);
        break;
    }
    }
}

SweepMode SweepSpec::mode() const noexcept {
    const bool timed = std::any_of(axes.begin(), axes.end(),
                                   [](const SweepAxis& a) { return a.parameter == SweepParameter::Time; });
    if (timed || std::holds_alternative<double>(fixed.time)) return SweepMode::TimePoint;
    return SweepMode::Stationary;
}

void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 2) throw InvalidArgument("a sweep needs one or two axes");
    for (const auto& a : axes) a.validate();
    if (axes.size() == 2 && axes[0].parameter == axes[1].parameter) {
        throw InvalidArgument("sweep axis names must be distinct");
    }
    auto has = [&](SweepParameter p) {
        return std::any_of(axes.begin(), axes.end(), [p](const SweepAxis& a) { return a.parameter == p; });
    };
    const bool alpha = has(SweepParameter::MbarAlpha);
    const bool diff = has(SweepParameter::MbarDiff);
    const bool single = has(SweepParameter::Mbar1) || has(SweepParameter::Mbar2);
    if ((alpha && (diff || single)) || (diff && single)) {
        throw InvalidArgument("sweep axes set the same mean photon number twice");
    }
    if (diff && !fixed.mbar_sum) throw InvalidArgument("a mbar_diff axis requires a fixed mbar_sum");
    if (fixed.fock && std::any_of(axes.begin(), axes.end(), [](const SweepAxis& a) { return is_thermal_axis(a.parameter); })) {
        throw InvalidArgument("thermal axes are meaningless with a Fock input");
    }
    PointSettings probe = fixed;
    if (has(SweepParameter::Time)) probe.time = 0.0;
    probe.validate();
}

std::size_t SweepSpec::grid_size() const {
    std::size_t n = 1;
    for (const auto& a : axes) n *= a.size();
    return n;
}

void SweepResult::write_csv(std::ostream& os) const {
    for (const auto& [key, value] : metadata) os << "# " << key << '=' << value << '\n';
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (double v : row.axis_values) os << num(v) << ',';
        os << num(row.log_negativity) << '\n';
    }
}

std::string SweepResult::to_csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
}

double evaluate_point(const PointSettings& point, const TruncationConfig& trunc) {
    point.validate();
    if (point.fock) {
        return log_negativity(mix_fock(point.fock->n1, point.fock->n2, point.time, point.params, point.outcome));
    }
    return log_negativity(mix_thermal(point.time, point.params, point.thermal, trunc, point.outcome));
}

SweepResult run_sweep(const SweepSpec& spec, const TruncationConfig& trunc, unsigned threads) {
    spec.validate();
    trunc.validate();

    const std::size_t n_axes = spec.axes.size();
    const std::size_t inner = n_axes == 2 ? spec.axes[1].size() : 1;
    const std::size_t total = spec.grid_size();

    SweepResult result;
    result.rows.resize(total);
    std::vector<PointSettings> points(total, spec.fixed);
    for (std::size_t i = 0; i < total; ++i) {
        const std::size_t idx[2] = {i / inner, i % inner};
        auto& row = result.rows[i];
        for (std::size_t a = 0; a < n_axes; ++a) {
            const double v = spec.axes[a].value(idx[a]);
            row.axis_values.push_back(v);
            points[i].apply(spec.axes[a].parameter, v);
        }
    }

    std::vector<std::exception_ptr> errors(total);
    std::vector<FockCutoffs> cutoffs(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            try {
                result.rows[i].log_negativity = evaluate_point(points[i], trunc);
                if (!points[i].fock) cutoffs[i] = fock_cutoffs(points[i].thermal, trunc);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < total; ++i) {
        if (!errors[i]) continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const TruncationError& e) {
            throw TruncationError(fmt::format("at grid point ({}): {}", describe_point(spec, result.rows[i].axis_values),
                                              e.what()));
        }
    }

    FockCutoffs widest;
    for (const auto& c : cutoffs) {
        widest.n1 = std::max(widest.n1, c.n1);
        widest.n2 = std::max(widest.n2, c.n2);
    }

    for (const auto& a : spec.axes) result.header.emplace_back(to_string(a.parameter));
    result.header.emplace_back("log_negativity");

    const PointSettings& f = spec.fixed;
    auto& meta = result.metadata;
    meta.emplace_back("qerase", std::string(version()));
    meta.emplace_back("mode", spec.mode() == SweepMode::Stationary ? "stationary" : "time");
    for (std::size_t a = 0; a < n_axes; ++a) {
        const auto& ax = spec.axes[a];
        meta.emplace_back(fmt::format("axis{}", a + 1),
                          fmt::format("{}:{}:{}:{}", to_string(ax.parameter), num(ax.start), num(ax.stop), num(ax.step)));
    }
    meta.emplace_back("omega1", num(f.params.omega1));
    meta.emplace_back("omega2", num(f.params.omega2));
    meta.emplace_back("omega", num(f.params.omega));
    meta.emplace_back("delta", num(f.params.detuning()));
    meta.emplace_back("g", num(f.params.g));
    meta.emplace_back("gamma", num(f.params.gamma));
    meta.emplace_back("theta", num(f.params.theta));
    meta.emplace_back("phi", num(f.params.phi));
    meta.emplace_back("outcome", std::string(to_string(f.outcome)));
    if (f.fock) {
        meta.emplace_back("fock", fmt::format("{} {}", f.fock->n1, f.fock->n2));
    } else {
        meta.emplace_back("mbar1", num(f.thermal.mbar1));
        meta.emplace_back("mbar2", num(f.thermal.mbar2));
        if (f.mbar_sum) meta.emplace_back("mbar_sum", num(*f.mbar_sum));
        meta.emplace_back("tail_mass", num(trunc.tail_mass));
        meta.emplace_back("hard_cap", std::to_string(trunc.hard_cap));
        meta.emplace_back("max_cutoff_n1", std::to_string(widest.n1));
        meta.emplace_back("max_cutoff_n2", std::to_string(widest.n2));
    }
    if (const double* t = std::get_if<double>(&f.time)) meta.emplace_back("t", num(*t));
    return result;
}

PointReport single_point(const PointSettings& point, const TruncationConfig& trunc) {
    point.validate();
    PointReport report;
    report.log_negativity = evaluate_point(point, trunc);
    const ModelParams& p = point.params;
    if (point.fock) {
        const auto block = block_at(point.fock->n1, point.fock->n2, point.time, p);
        report.probability_plus = outcome_probability(block, p.theta, p.phi, Outcome::Plus);
        report.probability_minus = outcome_probability(block, p.theta, p.phi, Outcome::Minus);
        report.cutoffs = {point.fock->n1, point.fock->n2};
    } else {
        report.probability_plus = ensemble_outcome_probability(point.time, p, point.thermal, trunc, Outcome::Plus);
        report.probability_minus = ensemble_outcome_probability(point.time, p, point.thermal, trunc, Outcome::Minus);
        report.cutoffs = fock_cutoffs(point.thermal, trunc);
    }
    return report;
}

OracleCheckReport oracle_check(std::uint64_t seed, int trials) {
    if (trials < 1) throw InvalidArgument("oracle_check: trials must be >= 1");
    Rng rng(seed);
    OracleCheckReport report;
    report.trials = trials;
    for (int i = 0; i < trials; ++i) {
        const DynamicsSample s = sample_dynamics_point(rng);
        const AtomFieldBlockState fast = evolve_block(s.n1, s.n2, s.t, s.params);
        const AtomFieldBlockState slow = oracle_evolve_block(s.n1, s.n2, s.t, s.params);
        const double dev = std::max({std::abs(fast.p_ee - slow.p_ee), std::abs(fast.p_gg - slow.p_gg),
                                     std::abs(fast.c_eg.real() - slow.c_eg.real()),
                                     std::abs(fast.c_eg.imag() - slow.c_eg.imag())});
        report.max_dynamics_deviation = std::max(report.max_dynamics_deviation, dev);

        const FieldState state = sample_field_state(rng, 32);
        report.max_negativity_deviation = std::max(report.max_negativity_deviation,
                                                   std::abs(log_negativity(state) - oracle_log_negativity(state)));
    }
    return report;
}

SweepSpec figure_preset(int figure) {
    SweepSpec spec;
    PointSettings& f = spec.fixed;
    f.params.g = 0.5;
    f.params.theta = std::numbers::pi / 2;
    f.params.phi = 0.0;
    f.params.gamma = 0.5;
    f.time = Stationary{};
    const double t_end = 20.0 / f.params.g;
    const double t_step = 0.1 / f.params.g;
    switch (figure) {
    case 1:
        spec.axes = {{SweepParameter::MbarAlpha, 0.0, 3.0, 0.1}, {SweepParameter::Delta, 0.0, 3.0, 0.1}};
        break;
    case 2:
        f.thermal.mbar1 = 0.0;
        spec.axes = {{SweepParameter::Mbar2, 0.0, 5.0, 0.1}, {SweepParameter::Delta, 0.0, 3.0, 0.1}};
        break;
    case 3:
        f.params.set_detuning(1.0);
        spec.axes = {{SweepParameter::Mbar1, 0.0, 3.0, 0.1}, {SweepParameter::Mbar2, 0.0, 3.0, 0.1}};
        break;
    case 4:
    case 5:
        f.params.set_detuning(figure == 4 ? 0.0 : 1.0);
        spec.axes = {{SweepParameter::MbarAlpha, 0.0, 2.0, 0.1}, {SweepParameter::Time, 0.0, t_end, t_step}};
        break;
    case 6:
        f.params.set_detuning(1.0);
        f.mbar_sum = 1.0;
        spec.axes = {{SweepParameter::MbarDiff, 0.0, 1.0, 0.05}, {SweepParameter::Time, 0.0, t_end, t_step}};
        break;
    default:
        throw InvalidArgument(fmt::format("no preset for figure {} (expected 1-6)", figure));
    }
    return spec;
}

} // namespace qerase
