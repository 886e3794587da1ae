#include "qerase/entanglement.hpp"
#include "qerase/errors.hpp"
#include "qerase/sweep.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

using namespace qerase;

namespace {

PointSettings base_point() {
    PointSettings p;
    p.params.g = 0.5;
    p.params.gamma = 0.5;
    p.params.set_detuning(1.0);
    return p;
}

} // namespace

TEST(SweepAxis, ParseAndSize) {
    const SweepAxis a = SweepAxis::parse("mbar_alpha=0:3:0.1");
    EXPECT_EQ(a.parameter, SweepParameter::MbarAlpha);
    EXPECT_EQ(a.size(), 31u);
    EXPECT_EQ(a.value(0), 0.0);
    EXPECT_EQ(a.value(30), 3.0);
    EXPECT_NEAR(a.value(7), 0.7, 1e-15);

    EXPECT_EQ(SweepAxis::parse("t=0:40:0.2").size(), 201u);
    EXPECT_EQ(SweepAxis::parse("delta=1:1:0.5").size(), 1u);
    EXPECT_EQ(SweepAxis::parse("mbar2=0:1:0.3").size(), 4u);
    EXPECT_NEAR(SweepAxis::parse("mbar2=0:1:0.3").value(3), 0.9, 1e-15);
}

TEST(SweepAxis, ParseRejectsMalformed) {
    for (const char* bad : {"mbar_alpha", "mbar_alpha=0:3", "nope=0:1:0.1", "delta=a:1:0.1", "delta=0:1:0",
                            "delta=2:1:0.1", "delta=0:1:-0.1", "delta=0:inf:0.1"}) {
        EXPECT_THROW((void)SweepAxis::parse(bad), InvalidArgument) << bad;
    }
}

TEST(SweepParameterNames, RoundTrip) {
    for (auto p : {SweepParameter::MbarAlpha, SweepParameter::Mbar1, SweepParameter::Mbar2, SweepParameter::Delta,
                   SweepParameter::Time, SweepParameter::MbarDiff}) {
        EXPECT_EQ(parse_sweep_parameter(to_string(p)), p);
    }
}

TEST(PointSettings, ApplyMbarDiff) {
    PointSettings p = base_point();
    p.mbar_sum = 1.0;
    p.apply(SweepParameter::MbarDiff, 0.4);
    EXPECT_NEAR(p.thermal.mbar1, 0.7, 1e-15);
    EXPECT_NEAR(p.thermal.mbar2, 0.3, 1e-15);
    EXPECT_THROW(p.apply(SweepParameter::MbarDiff, 1.5), InvalidArgument);

    p.apply(SweepParameter::Delta, 2.0);
    EXPECT_NEAR(p.params.detuning(), 2.0, 1e-15);
    p.apply(SweepParameter::MbarAlpha, 0.3);
    EXPECT_EQ(p.thermal.mbar1, 0.3);
    EXPECT_EQ(p.thermal.mbar2, 0.3);
}

TEST(SweepSpec, ValidationErrors) {
    SweepSpec s;
    s.fixed = base_point();
    EXPECT_THROW(s.validate(), InvalidArgument);

    s.axes = {SweepAxis::parse("mbar_alpha=0:1:0.5"), SweepAxis::parse("mbar1=0:1:0.5")};
    EXPECT_THROW(s.validate(), InvalidArgument);

    s.axes = {SweepAxis::parse("delta=0:1:0.5"), SweepAxis::parse("delta=0:1:0.5")};
    EXPECT_THROW(s.validate(), InvalidArgument);

    s.axes = {SweepAxis::parse("mbar_diff=0:1:0.5")};
    EXPECT_THROW(s.validate(), InvalidArgument);
    s.fixed.mbar_sum = 1.0;
    EXPECT_NO_THROW(s.validate());

    s.axes = {SweepAxis::parse("mbar1=0:1:0.5")};
    s.fixed.fock = FockInput{0, 0};
    EXPECT_THROW(s.validate(), InvalidArgument);

    s.fixed.fock.reset();
    s.fixed.params.gamma = 0.0;
    EXPECT_THROW(s.validate(), NoStationaryState);
    s.fixed.time = 3.0;
    EXPECT_NO_THROW(s.validate());
    EXPECT_EQ(s.mode(), SweepMode::TimePoint);
}

TEST(SweepSpec, TimeAxisSelectsTimeMode) {
    SweepSpec s;
    s.fixed = base_point();
    s.axes = {SweepAxis::parse("mbar_alpha=0:1:0.5")};
    EXPECT_EQ(s.mode(), SweepMode::Stationary);
    s.axes.push_back(SweepAxis::parse("t=0:2:1"));
    EXPECT_EQ(s.mode(), SweepMode::TimePoint);
    EXPECT_EQ(s.grid_size(), 9u);
}

TEST(FigurePresets, AllValidate) {
    for (int f = 1; f <= 6; ++f) {
        const SweepSpec s = figure_preset(f);
        EXPECT_NO_THROW(s.validate()) << f;
        EXPECT_EQ(s.axes.size(), 2u);
        EXPECT_EQ(s.fixed.params.g, 0.5);
    }
    EXPECT_THROW((void)figure_preset(0), InvalidArgument);
    EXPECT_THROW((void)figure_preset(7), InvalidArgument);
    EXPECT_EQ(figure_preset(1).fixed.params.detuning(), 0.0);
    EXPECT_EQ(figure_preset(4).mode(), SweepMode::TimePoint);
    EXPECT_EQ(figure_preset(6).fixed.mbar_sum, 1.0);
}

TEST(RunSweep, RowsMatchSinglePoints) {
    SweepSpec s;
    s.fixed = base_point();
    s.axes = {SweepAxis::parse("mbar_alpha=0:0.6:0.3"), SweepAxis::parse("delta=0:2:1")};
    const TruncationConfig trunc;
    const SweepResult r = run_sweep(s, trunc, 3);
    ASSERT_EQ(r.rows.size(), 9u);
    EXPECT_EQ(r.header, (std::vector<std::string>{"mbar_alpha", "delta", "log_negativity"}));
    for (const auto& row : r.rows) {
        PointSettings p = s.fixed;
        p.apply(SweepParameter::MbarAlpha, row.axis_values[0]);
        p.apply(SweepParameter::Delta, row.axis_values[1]);
        EXPECT_EQ(row.log_negativity, single_point(p, trunc).log_negativity);
    }
    EXPECT_EQ(r.rows[1].axis_values[0], 0.0);
    EXPECT_EQ(r.rows[1].axis_values[1], 1.0);
    EXPECT_NEAR(r.rows[1].log_negativity, std::log2(1.5), 1e-15);
}

TEST(RunSweep, ThreadCountDoesNotChangeOutput) {
    SweepSpec s;
    s.fixed = base_point();
    s.axes = {SweepAxis::parse("mbar_alpha=0:1:0.25"), SweepAxis::parse("t=0:4:0.5")};
    const std::string one = run_sweep(s, TruncationConfig{}, 1).to_csv();
    EXPECT_EQ(one, run_sweep(s, TruncationConfig{}, 4).to_csv());
    EXPECT_EQ(one, run_sweep(s, TruncationConfig{}, 0).to_csv());
}

TEST(RunSweep, SingleCellMatchesSinglePoint) {
    SweepSpec s;
    s.fixed = base_point();
    s.axes = {SweepAxis::parse("mbar1=0.2:0.2:1")};
    const SweepResult r = run_sweep(s, TruncationConfig{});
    ASSERT_EQ(r.rows.size(), 1u);
    PointSettings p = s.fixed;
    p.thermal.mbar1 = 0.2;
    EXPECT_EQ(r.rows[0].log_negativity, single_point(p, TruncationConfig{}).log_negativity);
}

TEST(RunSweep, CsvLayout) {
    SweepSpec s;
    s.fixed = base_point();
    s.axes = {SweepAxis::parse("delta=0:1:1")};
    const std::string csv = run_sweep(s, TruncationConfig{}).to_csv();
    EXPECT_EQ(csv.rfind("# ", 0), 0u);
    EXPECT_NE(csv.find("\ndelta,log_negativity\n"), std::string::npos);
    EXPECT_NE(csv.find("\n1,0.58496250072115"), std::string::npos);
    EXPECT_NE(csv.find("tail_mass="), std::string::npos);
    EXPECT_NE(csv.find("# qerase="), std::string::npos);
}

TEST(RunSweep, TruncationErrorNamesGridPoint) {
    SweepSpec s;
    s.fixed = base_point();
    s.axes = {SweepAxis::parse("mbar_alpha=1:200:199")};
    try {
        (void)run_sweep(s, TruncationConfig{1e-10, 64}, 2);
        FAIL() << "expected TruncationError";
    } catch (const TruncationError& e) {
        EXPECT_NE(std::string(e.what()).find("mbar_alpha=200"), std::string::npos) << e.what();
    }
}

TEST(SinglePoint, FockInputAndProbabilities) {
    PointSettings p = base_point();
    p.fock = FockInput{0, 0};
    const PointReport r = single_point(p, TruncationConfig{});
    EXPECT_NEAR(r.log_negativity, std::log2(1.5), 1e-15);
    EXPECT_NEAR(r.probability_plus, 0.5, 1e-15);
    EXPECT_NEAR(r.probability_plus + r.probability_minus, 1.0, 1e-15);
    EXPECT_EQ(r.cutoffs.n1, 0);
    EXPECT_EQ(r.cutoffs.n2, 0);
}

TEST(OracleCheck, PassesAndRejectsZeroTrials) {
    const OracleCheckReport r = oracle_check(7, 20);
    EXPECT_EQ(r.trials, 20);
    EXPECT_TRUE(r.passed());
    EXPECT_THROW((void)oracle_check(7, 0), InvalidArgument);
}
