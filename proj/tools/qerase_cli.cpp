// qerase: entanglement of two thermal field modes after atomic erasure.
//
//   qerase [flags]                          single point (key,value lines)
//   qerase [flags] --sweep NAME=A:B:S ...   CSV sweep over one or two axes
//   qerase figure N [--output PATH]         figure preset N in 1..6
//   qerase oracle-check [--seed S] [--trials K]
//
// Exit codes: 0 ok, 1 invalid arguments, 2 truncation failure, 3 oracle-check failure.

#include "qerase/errors.hpp"
#include "qerase/sweep.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode : int { kOk = 0, kInvalidArguments = 1, kTruncationFailure = 2, kOracleFailure = 3 };

struct Options {
    double g = 0.5;
    std::optional<double> delta;
    std::optional<double> omega;
    double omega1 = 1.0;
    double omega2 = 1.0;
    double gamma = 0.5;
    double theta = std::numbers::pi / 2;
    double phi = 0.0;
    double mbar1 = 0.0;
    double mbar2 = 0.0;
    std::optional<double> mbar_sum;
    std::optional<double> t;
    bool stationary = false;
    std::vector<int> fock;
    double tail_mass = 1e-10;
    int hard_cap = 512;
    std::vector<std::string> sweeps;
    std::string outcome = "plus";
    std::string output;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    int figure = 0;
    int trials = 100;
};

qerase::PointSettings point_settings(const Options& o) {
    qerase::PointSettings p;
    p.params.omega1 = o.omega1;
    p.params.omega2 = o.omega2;
    p.params.omega = o.omega.value_or(o.omega1 + o.omega2);
    if (o.delta) p.params.set_detuning(*o.delta);
    p.params.g = o.g;
    p.params.gamma = o.gamma;
    p.params.theta = o.theta;
    p.params.phi = o.phi;
    p.thermal = {o.mbar1, o.mbar2};
    p.mbar_sum = o.mbar_sum;
    if (o.t) p.time = *o.t;
    else p.time = qerase::Stationary{};
    p.outcome = qerase::parse_outcome(o.outcome);
    if (!o.fock.empty()) p.fock = qerase::FockInput{o.fock.at(0), o.fock.at(1)};
    return p;
}

void emit_csv(const qerase::SweepResult& result, const std::string& path) {
    if (path.empty() || path == "-") {
        result.write_csv(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qerase::InvalidArgument("cannot open output file '" + path + "'");
    result.write_csv(out);
}

int run(const Options& o, const CLI::App& figure_cmd, const CLI::App& oracle_cmd) {
    const qerase::TruncationConfig trunc{o.tail_mass, o.hard_cap};

    if (oracle_cmd.parsed()) {
        const auto report = qerase::oracle_check(o.seed, o.trials);
        fmt::print("trials,{}\n", report.trials);
        fmt::print("max_dynamics_deviation,{:.17g}\n", report.max_dynamics_deviation);
        fmt::print("max_negativity_deviation,{:.17g}\n", report.max_negativity_deviation);
        fmt::print("result,{}\n", report.passed() ? "pass" : "fail");
        return report.passed() ? kOk : kOracleFailure;
    }

    if (figure_cmd.parsed()) {
        emit_csv(qerase::run_sweep(qerase::figure_preset(o.figure), trunc, o.threads), o.output);
        return kOk;
    }

    qerase::PointSettings point = point_settings(o);
    if (!o.sweeps.empty()) {
        if (o.sweeps.size() > 2) throw qerase::InvalidArgument("at most two --sweep axes are allowed");
        qerase::SweepSpec spec;
        spec.fixed = point;
        for (const auto& s : o.sweeps) spec.axes.push_back(qerase::SweepAxis::parse(s));
        emit_csv(qerase::run_sweep(spec, trunc, o.threads), o.output);
        return kOk;
    }

    const auto report = qerase::single_point(point, trunc);
    std::string text = fmt::format("log_negativity,{:.17g}\nprobability_plus,{:.17g}\nprobability_minus,{:.17g}\n"
                                   "cutoff_n1,{}\ncutoff_n2,{}\n",
                                   report.log_negativity, report.probability_plus, report.probability_minus,
                                   report.cutoffs.n1, report.cutoffs.n2);
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) throw qerase::InvalidArgument("cannot open output file '" + o.output + "'");
        out << text;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement of two thermal field modes created by erasing which-path information in an atom"};
    app.set_config("--config", "", "Flat key=value file with the same keys as the flags; flags take precedence");

    Options o;
    app.add_option("--g", o.g, "Atom-field coupling")->capture_default_str();
    auto* delta = app.add_option("--delta", o.delta, "Detuning omega - omega1 - omega2 (overrides --omega)");
    app.add_option("--omega", o.omega, "Atomic transition frequency (default omega1 + omega2)");
    app.add_option("--omega1", o.omega1, "Mode-1 frequency")->capture_default_str();
    app.add_option("--omega2", o.omega2, "Mode-2 frequency")->capture_default_str();
    app.add_option("--gamma", o.gamma, "Phase decoherence coefficient")->capture_default_str();
    app.add_option("--theta", o.theta, "Measurement polar angle")->capture_default_str();
    app.add_option("--phi", o.phi, "Measurement azimuthal angle")->capture_default_str();
    app.add_option("--mbar1", o.mbar1, "Mean photon number of mode 1")->capture_default_str();
    app.add_option("--mbar2", o.mbar2, "Mean photon number of mode 2")->capture_default_str();
    app.add_option("--mbar-sum", o.mbar_sum, "Fixed mbar1 + mbar2 for a mbar_diff axis");
    auto* t = app.add_option("--t", o.t, "Evaluation time (absolute, same units as 1/g)");
    auto* stationary = app.add_flag("--stationary", o.stationary, "Use the t -> infinity state (default when --t is absent)");
    t->excludes(stationary);
    app.add_option("--fock", o.fock, "Single Fock input |N1,N2> instead of thermal fields")->expected(2);
    app.add_option("--tail-mass", o.tail_mass, "Thermal probability mass allowed outside the cutoff")->capture_default_str();
    app.add_option("--hard-cap", o.hard_cap, "Largest per-mode Fock cutoff")->capture_default_str();
    app.add_option("--sweep", o.sweeps, "NAME=START:STOP:STEP with NAME in mbar_alpha, mbar1, mbar2, delta, t, mbar_diff (up to two)")
        ->take_all();
    app.add_option("--outcome", o.outcome, "Measurement outcome kept")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    app.add_option("--output", o.output, "Output path (stdout when omitted)");
    app.add_option("--seed", o.seed, "Random seed for oracle-check")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads for sweeps (0 = all cores)")->capture_default_str();
    (void)delta;

    auto* figure = app.add_subcommand("figure", "Emit the CSV surface of a figure preset");
    figure->add_option("N", o.figure, "Figure number 1-6")->required()->check(CLI::Range(1, 6));
    figure->fallthrough();

    auto* oracle = app.add_subcommand("oracle-check", "Cross-check the fast paths against the reference solvers");
    oracle->add_option("--trials", o.trials, "Random samples")->capture_default_str();
    oracle->fallthrough();

    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidArguments;
    }

    try {
        return run(o, *figure, *oracle);
    } catch (const qerase::TruncationError& e) {
        std::cerr << "truncation failure: " << e.what() << '\n';
        return kTruncationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }
}
