#include <cmath>

#include "scatter/amplitudes.hpp"
#include "scatter/oracle.hpp"
#include "test_util.hpp"

using namespace scatter;

namespace {

PotentialSpec soliton() { return PotentialSpec::make(Family::Soliton, {2.5, 0.0, 0.0}); }
PotentialSpec morse() { return PotentialSpec::make(Family::Morse, {1.3, 1.0, 0.0}); }

}  // namespace

TEST(Numerov, ReflectionlessSoliton) {
    const PotentialSpec s = PotentialSpec::make(Family::Soliton, {1.0, 0.0, 0.0});
    for (double k : {0.5, 1.5}) {
        const OracleResult o = numerov_scatter(make_problem(s), k);
        EXPECT_LT(std::abs(o.r), 1e-7);
        EXPECT_NEAR(std::abs(*o.t), 1.0, 1e-7);
    }
}

TEST(Numerov, MatchesClosedForms) {
    const PotentialSpec specs[] = {soliton(), PotentialSpec::make(Family::RosenMorse, {3.3, 2.0, 0.0}), morse(),
                                   PotentialSpec::make(Family::HyperbolicPT, {3.4, 0.0, 1.8})};
    for (const auto& s : specs)
        for (double k : {0.7, 2.5}) {
            const OriginalAmplitudes a = original_amplitudes(s, k);
            const OracleResult o = numerov_scatter(make_problem(s), k);
            EXPECT_LT(std::abs(o.r - a.r), 1e-6) << family_name(s.family()) << " k=" << k;
            if (a.t) EXPECT_LT(std::abs(*o.t - *a.t), 1e-6) << family_name(s.family()) << " k=" << k;
        }
}

TEST(Numerov, DeformedAmplitudes) {
    const Scenario sc = make_scenario(soliton(), {make_twist_seed(soliton(), 0)});
    for (double k : {0.4, 1.0, 3.0}) {
        const DeformedAmplitudes d = deform_amplitudes(sc, k);
        const OracleResult o = numerov_scatter(make_problem(sc), k);
        EXPECT_LT(std::abs(o.r - d.r), 1e-6);
        EXPECT_LT(std::abs(*o.t - *d.t), 1e-6);
        EXPECT_LT(std::abs(o.flux_residual), 1e-8);
    }
}

TEST(Numerov, FourthOrderConvergence) {
    const PotentialSpec s = soliton();
    const double k = 1.2;
    const Cplx exact = *original_amplitudes(s, k).t;
    OracleOptions coarse, fine;
    coarse.step = 0.04;
    fine.step = 0.02;
    const double e1 = std::abs(*numerov_scatter(make_problem(s), k, coarse).t - exact);
    const double e2 = std::abs(*numerov_scatter(make_problem(s), k, fine).t - exact);
    EXPECT_GT(e1 / e2, 12.0);
    EXPECT_LT(e1 / e2, 20.0);
}

TEST(Numerov, FluxBalanceAndUnitarity) {
    const PotentialSpec rm = PotentialSpec::make(Family::RosenMorse, {3.3, 2.0, 0.0});
    const OracleResult o = numerov_scatter(make_problem(rm), 3.5);
    EXPECT_LT(std::abs(o.flux_residual), 1e-8);
    const OracleResult below = numerov_scatter(make_problem(rm), 1.7);
    EXPECT_NEAR(std::abs(below.r), 1.0, 1e-7);
    const OracleResult wall = numerov_scatter(make_problem(morse()), 2.0);
    EXPECT_NEAR(std::abs(wall.r), 1.0, 1e-8);
}

TEST(Numerov, RejectsLongRange) {
    const PotentialSpec c = PotentialSpec::make(Family::Coulomb, {0.0, 0.0, 2.0});
    EXPECT_THROW(numerov_scatter(make_problem(c), 1.0), Error);
}

TEST(Shooting, SolitonSpectrumWithCreatedLevel) {
    const std::vector<double> base = shoot_bound_states(make_problem(soliton()));
    ASSERT_EQ(base.size(), 3u);
    EXPECT_NEAR(base[0], -6.25, 1e-7);
    EXPECT_NEAR(base[2], -0.25, 1e-7);
    const Scenario sc = make_scenario(soliton(), {make_twist_seed(soliton(), 0)});
    const std::vector<double> def = shoot_bound_states(make_problem(sc));
    ASSERT_EQ(def.size(), 4u);
    EXPECT_NEAR(def[0], -12.25, 1e-7);
}

TEST(Shooting, MorseIsospectral) {
    const Scenario sc = make_scenario(morse(), {make_overshoot_seed(morse(), 3)});
    const std::vector<double> e = shoot_bound_states(make_problem(sc));
    ASSERT_EQ(e.size(), 2u);
    EXPECT_NEAR(e[0], -1.69, 1e-7);
    EXPECT_NEAR(e[1], -0.09, 1e-7);
}

TEST(Shooting, CoulombLowLevels) {
    const PotentialSpec c = PotentialSpec::make(Family::Coulomb, {0.0, 0.0, 2.0});
    const std::vector<double> e = shoot_bound_states(make_problem(c), -0.3, -0.05);
    ASSERT_GE(e.size(), 2u);
    EXPECT_NEAR(e[0], -0.25, 1e-6);
    EXPECT_NEAR(e[1], -1.0 / 9.0, 1e-6);
}

TEST(BaseWave, SatisfiesOriginalEquation) {
    const PotentialSpec s = soliton();
    const double k = 1.1, x = 0.3, d = 1e-3;
    const Cplx p0 = base_wave(s, k, x - d).first, p1 = base_wave(s, k, x).first, p2 = base_wave(s, k, x + d).first;
    const Cplx d2 = (p2 - 2.0 * p1 + p0) / (d * d);
    EXPECT_LT(std::abs(-d2 + (potential_value(s, x) - k * k) * p1), 1e-4 * std::abs(p1));
}
