#include "qerase/errors.hpp"
#include "qerase/model.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qerase;
using qerase::testing::params_with;

TEST(RabiFrequency, ClosedFormValues) {
    EXPECT_DOUBLE_EQ(rabi_frequency(0, 0, params_with(0.5, 0.0, 0.5)), 0.5);
    EXPECT_NEAR(rabi_frequency(0, 0, params_with(0.5, 1.0, 0.5)), 0.7071067811865476, 1e-15);
    EXPECT_NEAR(rabi_frequency(3, 1, params_with(0.5, 1.0, 0.5)), 1.5, 1e-15);
}

TEST(RabiFrequency, RejectsNegativeFockLabels) {
    EXPECT_THROW((void)rabi_frequency(-1, 0, ModelParams{}), InvalidArgument);
}

TEST(RabiFrequency, BoundedBelowSymmetricAndIncreasing) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p = qerase::testing::random_params(rng);
        for (int n1 = 0; n1 < 6; ++n1) {
            for (int n2 = 0; n2 < 6; ++n2) {
                const double w = rabi_frequency(n1, n2, p);
                EXPECT_GE(w, std::abs(p.detuning()) / 2);
                EXPECT_GE(w, p.g);
                EXPECT_EQ(w, rabi_frequency(n2, n1, p));
                EXPECT_GT(rabi_frequency(n1 + 1, n2, p), w);
                EXPECT_GT(rabi_frequency(n1, n2 + 1, p), w);
            }
        }
    }
}

TEST(BlockHamiltonian, DressedEnergies) {
    const BlockHamiltonian h0 = block_hamiltonian(0, 0, params_with(0.5, 0.0, 0.5));
    EXPECT_DOUBLE_EQ(h0.f_plus, 1.5);
    EXPECT_DOUBLE_EQ(h0.f_minus, 0.5);

    const BlockHamiltonian h1 = block_hamiltonian(1, 1, params_with(0.5, 1.0, 0.5));
    EXPECT_NEAR(h1.omega_rabi, std::sqrt(1.25), 1e-15);
    EXPECT_NEAR(h1.f_plus, 3.0 + std::sqrt(1.25), 1e-14);
    EXPECT_NEAR(h1.f_minus, 3.0 - std::sqrt(1.25), 1e-14);
}

TEST(BlockHamiltonian, SplittingAndMidpoint) {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const ModelParams p = qerase::testing::random_params(rng);
        const BlockHamiltonian h = block_hamiltonian(trial % 7, trial % 4, p);
        EXPECT_NEAR(h.f_plus - h.f_minus, 2.0 * rabi_frequency(h.n1, h.n2, p), 1e-12);
        EXPECT_NEAR(0.5 * (h.f_plus + h.f_minus), h.base_energy, 1e-12);
        EXPECT_NEAR(h.base_energy, p.omega1 * (h.n1 + 0.5) + p.omega2 * (h.n2 + 0.5), 1e-12);
    }
}

TEST(ModelParams, DetuningIsDerived) {
    ModelParams p;
    p.omega1 = 1.25;
    p.omega2 = 0.75;
    p.omega = 2.0;
    EXPECT_EQ(p.detuning(), 0.0);
    p.omega = 2.5;
    EXPECT_DOUBLE_EQ(p.detuning(), 0.5);
    p.set_detuning(0.0);
    EXPECT_EQ(p.omega, p.omega1 + p.omega2);
    EXPECT_EQ(p.detuning(), 0.0);
}

TEST(ModelParams, Validation) {
    EXPECT_NO_THROW(ModelParams{}.validate());
    auto with = [](auto mutate) {
        ModelParams p;
        mutate(p);
        return p;
    };
    EXPECT_THROW(with([](ModelParams& p) { p.g = 0.0; }).validate(), InvalidArgument);
    EXPECT_THROW(with([](ModelParams& p) { p.gamma = -0.1; }).validate(), InvalidArgument);
    EXPECT_THROW(with([](ModelParams& p) { p.omega1 = 0.0; }).validate(), InvalidArgument);
    EXPECT_THROW(with([](ModelParams& p) { p.theta = 4.0; }).validate(), InvalidArgument);
    EXPECT_THROW(with([](ModelParams& p) { p.phi = 2.0 * std::numbers::pi; }).validate(), InvalidArgument);
    EXPECT_THROW(with([](ModelParams& p) { p.omega = NAN; }).validate(), InvalidArgument);
    EXPECT_NO_THROW(with([](ModelParams& p) { p.gamma = 0.0; }).validate());
}

TEST(MixingAngle, ResonanceIsQuarterTurn) {
    EXPECT_NEAR(mixing_angle(2, 3, params_with(0.5, 0.0, 0.5)), std::numbers::pi / 2, 1e-15);
    const ModelParams p = params_with(0.5, 1.0, 0.5);
    EXPECT_NEAR(std::tan(mixing_angle(0, 0, p)), 2.0 * 0.5 / 1.0, 1e-14);
}
