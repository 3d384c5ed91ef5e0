#include <cmath>

#include "scatter/potentials.hpp"
#include "scatter/seeds.hpp"
#include "scatter/specfun.hpp"
#include "test_util.hpp"

using namespace scatter;

namespace {

PotentialSpec soliton(double h) { return PotentialSpec::make(Family::Soliton, {h, 0.0, 0.0}); }
PotentialSpec rm(double h, double mu) { return PotentialSpec::make(Family::RosenMorse, {h, mu, 0.0}); }
PotentialSpec morse(double h, double mu) { return PotentialSpec::make(Family::Morse, {h, mu, 0.0}); }
PotentialSpec hst(double h, double mu) { return PotentialSpec::make(Family::HyperbolicSymTop, {h, mu, 0.0}); }
PotentialSpec eckart(double g, double mu) { return PotentialSpec::make(Family::Eckart, {0.0, mu, g}); }
PotentialSpec hpt(double h, double g) { return PotentialSpec::make(Family::HyperbolicPT, {h, 0.0, g}); }
PotentialSpec coulomb(double g) { return PotentialSpec::make(Family::Coulomb, {0.0, 0.0, g}); }

}  // namespace

TEST(Families, NamesRoundTrip) {
    for (Family f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_FALSE(parse_family("harmonic"));
}

TEST(Families, ParameterRangesAreEnforced) {
    EXPECT_THROW(rm(1.0, 2.0), ParameterRangeError);
    EXPECT_THROW(soliton(0.4), ParameterRangeError);
    EXPECT_THROW(eckart(3.5, 9.0), ParameterRangeError);
    EXPECT_THROW(hpt(1.0, 1.5), ParameterRangeError);
    EXPECT_THROW(coulomb(1.2), ParameterRangeError);
    try {
        rm(1.0, 2.0);
    } catch (const ParameterRangeError& e) {
        EXPECT_NE(std::string(e.what()).find("h(h-1) > mu > 0"), std::string::npos);
    }
}

TEST(PotentialValue, ReferencePoints) {
    EXPECT_NEAR(potential_value(soliton(1.0), 0.0), -2.0, 1e-15);
    EXPECT_NEAR(potential_value(rm(3.0, 2.0), 30.0), 8.0, 1e-12);
    EXPECT_NEAR(potential_right_asymptote(rm(3.0, 2.0)), 8.0, 0.0);
    EXPECT_NEAR(potential_value(coulomb(2.0), 1.0), 0.0, 1e-15);
    EXPECT_THROW(potential_value(coulomb(2.0), -1.0), DomainError);
}

TEST(PotentialValue, EckartTailUsesStableForm) {
    const PotentialSpec e = eckart(2.6, 9.0);
    const double x = 15.0;
    const double direct = 2.6 * 1.6 / std::pow(std::sinh(x), 2) - 36.0 / std::expm1(2 * x);
    EXPECT_NEAR(potential_value(e, x) / direct, 1.0, 1e-12);
}

TEST(Spectrum, SolitonAndRosenMorse) {
    const PotentialSpec s = soliton(2.5);
    ASSERT_EQ(nmax(s), 2);
    EXPECT_NEAR(energy_formula(s, 0), -6.25, 1e-15);
    EXPECT_NEAR(energy_formula(s, 1), -2.25, 1e-15);
    EXPECT_NEAR(energy_formula(s, 2), -0.25, 1e-15);
    const PotentialSpec r = rm(3.0, 2.0);
    ASSERT_EQ(nmax(r), 1);
    EXPECT_NEAR(energy_formula(r, 0), -49.0 / 9.0, 1e-14);
    EXPECT_NEAR(energy_formula(r, 1), -1.0, 1e-14);
}

TEST(Spectrum, IntegerSolitonUsesStrictBracket) {
    EXPECT_EQ(nmax(soliton(2.0)), 1);
    EXPECT_EQ(bracket_strict(2.0), 1);
    EXPECT_EQ(bracket_strict(2.5), 2);
    EXPECT_FALSE(nmax(coulomb(2.0)));
}

TEST(Eigenfunctions, ClosedFormValues) {
    EXPECT_TRUE(close_c(eigenfunction(soliton(2.5), 0, Jet::variable(0.0, 2)).value(), 1.0, 1e-15));
    EXPECT_TRUE(close_c(eigenfunction(morse(2.3, 1.0), 0, Jet::variable(0.0, 2)).value(), std::exp(-1.0), 1e-15));
}

TEST(Eigenfunctions, SolveTheirEquations) {
    const PotentialSpec specs[] = {soliton(2.5), rm(3.3, 2.0), hst(2.0, 1.0), morse(1.3, 1.0),
                                   eckart(2.6, 9.0), hpt(3.4, 1.8), coulomb(2.5)};
    for (const auto& s : specs) {
        const int top = nmax(s).value_or(3);
        for (int n = 0; n <= top; ++n)
            for (double x : {0.3, 0.7, 1.9}) {
                const double res = relative_residual(s, energy_formula(s, n), eigen_form(s, n, Jet::variable(x, 2)), x);
                EXPECT_LT(res, 1e-11) << family_name(s.family()) << " n=" << n << " x=" << x;
            }
    }
}

TEST(Eigenfunctions, SymmetricTopIsReal) {
    const Jet v = eigenfunction(hst(2.0, 1.0), 1, Jet::variable(0.7, 2));
    EXPECT_EQ(v.value().imag(), 0.0);
    EXPECT_LT(relative_residual(hst(2.0, 1.0), energy_formula(hst(2.0, 1.0), 1),
                                eigen_form(hst(2.0, 1.0), 1, Jet::variable(0.7, 2)), 0.7),
              1e-11);
}

TEST(GroundstateExponents, FamilyTable) {
    const auto s = groundstate_exponents(soliton(2.5));
    EXPECT_NEAR(s.w_plus, 2.5, 1e-15);
    EXPECT_NEAR(*s.w_minus, -2.5, 1e-15);
    EXPECT_NEAR(groundstate_exponents(eckart(2.0, 9.0)).w_plus, 2.5, 1e-15);
    EXPECT_NEAR(groundstate_exponents(coulomb(2.0)).w_plus, 0.5, 1e-15);
}

TEST(KPrime, BranchConvention) {
    EXPECT_TRUE(close_c(kprime(2.0, 4.0), std::sqrt(8.0), 1e-15));
    EXPECT_TRUE(close_c(kprime(2.0, 1.0), Cplx(0.0, std::sqrt(7.0)), 1e-15));
    EXPECT_TRUE(close_c(kprime(2.0, Cplx(0.0, 1.0)), Cplx(0.0, 3.0), 1e-15));
    EXPECT_TRUE(close_c(kprime(1e-12, 2.0), 2.0, 1e-11));
}

// Frozen from an independent adaptive Runge-Kutta (DOP853, rtol 1e-13)
// integration of the Schroedinger equation, not from these closed forms.
TEST(OriginalAmplitudes, MatchIndependentIntegration) {
    struct Case {
        PotentialSpec spec;
        double k;
        std::optional<Cplx> t;
        Cplx r;
    };
    const Case cases[] = {
        {rm(3.3, 2.0), 3.5, Cplx(-4.974665986963e-01, -1.204272522813e+00), {-1.540996115963e-04, 1.536656341863e-03}},
        {rm(3.3, 2.0), 1.7, Cplx(-4.504934653790e+00, -2.645371873041e+01), {-9.436338991579e-01, 3.309910336550e-01}},
        {soliton(2.5), 0.7, Cplx(8.206732626891e-01, -5.277188630781e-01), {1.185069207685e-01, 1.842940780079e-01}},
        {PotentialSpec::make(Family::HyperbolicSymTop, {2.2, 1.5, 0.0}), 1.1,
         Cplx(-1.357541247264e-02, 2.734858007857e-01), {-6.039682835498e-01, 7.484941799444e-01}},
        {morse(1.3, 1.0), 2.0, std::nullopt, {7.432173640007e-01, 6.690500353844e-01}},
        {eckart(2.6, 9.0), 1.2, std::nullopt, {9.732856816302e-01, -2.295974345102e-01}},
        {hpt(3.4, 1.8), 0.9, std::nullopt, {-3.313915783352e-01, 9.434933077709e-01}},
    };
    for (const auto& c : cases) {
        const OriginalAmplitudes a = original_amplitudes(c.spec, c.k);
        EXPECT_TRUE(close_c(a.r, c.r, 1e-8)) << family_name(c.spec.family()) << " k=" << c.k;
        if (c.t) {
            ASSERT_TRUE(a.t);
            EXPECT_TRUE(close_rel(*a.t, *c.t, 1e-8)) << family_name(c.spec.family()) << " k=" << c.k;
        }
    }
}

TEST(OriginalAmplitudes, ReflectionlessSoliton) {
    for (double k : {0.3, 1.0, 2.0, 7.5}) {
        const OriginalAmplitudes a = original_amplitudes(soliton(1.0), k);
        EXPECT_TRUE(close_c(*a.t, Cplx(k, 1.0) / Cplx(k, -1.0), 1e-14));
        EXPECT_EQ(std::abs(a.r), 0.0);
        EXPECT_TRUE(a.near_reflectionless);
    }
}

TEST(OriginalAmplitudes, HalfLineUnimodularAndCoulombReference) {
    EXPECT_NEAR(std::abs(original_amplitudes(morse(1.3, 1.0), 1.0).r), 1.0, 1e-14);
    const Cplx i(0.0, 1.0);
    const Cplx expect = std::exp(-2.0 * M_PI * i) * complex_gamma(2.0 - i) / complex_gamma(2.0 + i);
    const Cplx r = original_amplitudes(coulomb(2.0), 1.0).r;
    EXPECT_TRUE(close_c(r, expect, 1e-13));
    EXPECT_NEAR(std::abs(r), 1.0, 1e-14);
}

TEST(OriginalAmplitudes, ZeroMomentumIsRejected) { EXPECT_THROW(original_amplitudes(soliton(2.5), 0.0), BranchError); }

TEST(FluxCoefficients, ReferenceValues) {
    const auto s = flux_coefficients(soliton(1.0), 2.0);
    EXPECT_NEAR(s.T, 1.0, 1e-14);
    EXPECT_NEAR(s.R, 0.0, 1e-14);
    const auto r = flux_coefficients(rm(3.0, 2.0), 1.0);
    EXPECT_NEAR(r.T, 0.0, 1e-14);
    EXPECT_NEAR(r.R, 1.0, 1e-12);
    const auto h = flux_coefficients(hst(2.0, 1.0), 1.3);
    EXPECT_NEAR(h.T + h.R, 1.0, 1e-12);
}
