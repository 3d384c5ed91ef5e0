#include <cmath>

#include "scatter/seeds.hpp"
#include "test_util.hpp"

using namespace scatter;

namespace {
PotentialSpec make(Family f, double h, double mu, double g) { return PotentialSpec::make(f, {h, mu, g}); }
}  // namespace

TEST(TwistSeeds, SolitonPseudoVirtual) {
    const auto s = make_twist_seed(make(Family::Soliton, 2.5, 0, 0), 0);
    EXPECT_EQ(s.kind, SeedKind::PseudoVirtual);
    EXPECT_NEAR(s.delta_plus, 3.5, 1e-15);
    EXPECT_NEAR(*s.delta_minus, -3.5, 1e-15);
    EXPECT_NEAR(s.energy, -12.25, 1e-14);
    EXPECT_TRUE(close_c(seed_value(s, Jet::variable(0.0, 1)).value(), 1.0, 1e-15));
    EXPECT_TRUE(sign_pattern_ok(s));
}

TEST(TwistSeeds, HyperbolicPoschlTellerTypeI) {
    const auto s = make_twist_seed(make(Family::HyperbolicPT, 3.4, 0, 1.2), 1, Twist::H);
    EXPECT_EQ(s.kind, SeedKind::VirtualI);
    EXPECT_NEAR(s.delta_plus, 7.6, 1e-14);
    EXPECT_NEAR(s.energy, -57.76, 1e-12);
}

TEST(TwistSeeds, CoulombPseudoVirtual) {
    const PotentialSpec c = make(Family::Coulomb, 0, 0, 2.6);
    const auto s = make_twist_seed(c, 1);
    EXPECT_EQ(s.kind, SeedKind::PseudoVirtual);
    EXPECT_NEAR(s.delta_plus, 1.0 / 0.6, 1e-13);
    EXPECT_NEAR(asymptotic_exponent_check(make_twist_seed(c, 0), Side::Plus), 0.625, 1e-6);
}

TEST(TwistSeeds, MorseValueAtOrigin) {
    const auto s = make_twist_seed(make(Family::Morse, 1.3, 1.0, 0), 0);
    EXPECT_TRUE(close_rel(seed_value(s, Jet::variable(0.0, 1)).value(), std::exp(1.0), 1e-14));
}

TEST(TwistSeeds, EckartClassification) {
    const PotentialSpec e = make(Family::Eckart, 0, 9.0, 2.6);
    EXPECT_EQ(make_twist_seed(e, 0).kind, SeedKind::PseudoVirtual);
    EXPECT_EQ(make_twist_seed(e, 2).kind, SeedKind::VirtualII);
    try {
        make_twist_seed(e, 5);
        FAIL() << "gap degree accepted";
    } catch (const SeedError& err) {
        EXPECT_EQ(err.reason, SeedError::Reason::Unclassified);
    }
}

TEST(TwistSeeds, BoundaryDegreeIsRefused) {
    try {
        make_twist_seed(make(Family::Eckart, 0, 9.0, 2.0), 1);
        FAIL() << "boundary degree accepted";
    } catch (const SeedError& err) {
        EXPECT_EQ(err.reason, SeedError::Reason::ClassificationBoundary);
    }
}

TEST(OvershootSeeds, Classification) {
    const auto m = make_overshoot_seed(make(Family::Morse, 1.3, 1.0, 0), 3);
    EXPECT_EQ(m.kind, SeedKind::VirtualI);
    EXPECT_NEAR(m.delta_plus, 1.7, 1e-14);
    EXPECT_NEAR(m.energy, -2.89, 1e-13);
    const auto s = make_overshoot_seed(make(Family::Soliton, 2.5, 0, 0), 6);
    EXPECT_EQ(s.kind, SeedKind::OvershootPseudo);
    EXPECT_NEAR(s.delta_plus, 3.5, 1e-14);
    EXPECT_NEAR(s.energy, -12.25, 1e-13);
    try {
        make_overshoot_seed(make(Family::RosenMorse, 3.0, 2.0, 0), 2);
        FAIL() << "RM v=2 accepted";
    } catch (const SeedError& err) {
        EXPECT_EQ(err.reason, SeedError::Reason::EmptyRange);
    }
    EXPECT_THROW(make_overshoot_seed(make(Family::Coulomb, 0, 0, 2.0), 5), SeedError);
}

TEST(OvershootSeeds, WindowsOfRosenMorse) {
    const auto w = overshoot_windows(make(Family::RosenMorse, 3.0, 2.0, 0));
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[0].kind, SeedKind::VirtualII);
    EXPECT_NEAR(w[0].lo, 7.0 / 3.0, 1e-14);
    EXPECT_NEAR(*w[1].hi, 11.0 / 3.0, 1e-14);
    EXPECT_FALSE(w[2].hi);
}

TEST(Seeds, AsymptoticExponentsMatchTable) {
    const auto s = make_twist_seed(make(Family::Soliton, 2.5, 0, 0), 0);
    EXPECT_NEAR(asymptotic_exponent_check(s, Side::Plus), 3.5, 1e-8);
    const auto r = make_twist_seed(make(Family::RosenMorse, 3.0, 2.0, 0), 0);
    EXPECT_NEAR(asymptotic_exponent_check(r, Side::Minus), -3.5, 1e-8);
    EXPECT_NEAR(*r.delta_minus, -3.5, 1e-14);
}

TEST(Seeds, AllKindsSolveTheOriginalEquation) {
    struct Case {
        PotentialSpec spec;
        SeedSolution seed;
    };
    const PotentialSpec sol = make(Family::Soliton, 2.5, 0, 0), mo = make(Family::Morse, 1.3, 1.0, 0),
                        ek = make(Family::Eckart, 0, 9.0, 2.6), hp = make(Family::HyperbolicPT, 3.4, 0, 1.8),
                        rmx = make(Family::RosenMorse, 3.3, 2.0, 0), hs = make(Family::HyperbolicSymTop, 2.0, 1.0, 0);
    const Case cases[] = {
        {sol, make_twist_seed(sol, 3)},          {sol, make_overshoot_seed(sol, 7)},
        {mo, make_twist_seed(mo, 1)},            {mo, make_overshoot_seed(mo, 4)},
        {ek, make_twist_seed(ek, 2)},            {ek, make_overshoot_seed(ek, 5)},
        {hp, make_twist_seed(hp, 1, Twist::H)},  {hp, make_twist_seed(hp, 0, Twist::G)},
        {hp, make_twist_seed(hp, 2, Twist::GH)}, {rmx, make_overshoot_seed(rmx, 3)},
        {hs, make_twist_seed(hs, 1)},
    };
    for (const auto& c : cases)
        for (double x : {0.4, 1.1, 2.5})
            EXPECT_LT(relative_residual(c.spec, c.seed.energy, seed_form(c.seed, Jet::variable(x, 2)), x), 1e-10)
                << family_name(c.spec.family()) << " " << seed_kind_name(c.seed.kind) << " v=" << c.seed.degree;
}
