#include <cmath>

#include "scatter/specfun.hpp"
#include "test_util.hpp"

using namespace scatter;

namespace {

struct GammaCase {
    Cplx z;
    Cplx value;
};

// mpmath at 30 digits
const GammaCase kGamma[] = {
    {{0.5, 0.0}, {1.772453850905516, 0.0}},
    {{3.7, -2.2}, {-1.8850260130418729, -0.84979094159458942}},
    {{-2.5, 0.3}, {-0.61382299743774149, -0.21123261493704178}},
    {{0.1, 7.0}, {1.8472584713886633e-5, -5.6256095355659045e-6}},
    {{12.3, 4.5}, {7754835.6499916018, -35229566.341605465}},
    {{-7.25, -1.5}, {-5.8225342573868663e-6, 5.1639645181347361e-6}},
};

}  // namespace

TEST(Gamma, MatchesHighPrecisionReference) {
    for (const auto& c : kGamma) EXPECT_TRUE(close_rel(complex_gamma(c.z), c.value, 1e-12)) << c.z;
}

TEST(Gamma, FactorialsAndRecurrence) {
    double f = 1.0;
    for (int n = 1; n < 20; ++n) {
        EXPECT_TRUE(close_rel(complex_gamma(Cplx(n)), f, 1e-14)) << n;
        f *= n;
    }
    for (Cplx z : {Cplx(0.3, 1.1), Cplx(-3.4, -0.7), Cplx(5.5, 9.0)})
        EXPECT_TRUE(close_rel(complex_gamma(z + 1.0), z * complex_gamma(z), 1e-13));
}

TEST(Gamma, PolesThrowAndReciprocalVanishes) {
    for (int n = 0; n > -6; --n) {
        EXPECT_THROW(complex_gamma(Cplx(n)), PoleAtNonpositiveInteger);
        EXPECT_EQ(reciprocal_gamma(Cplx(n)), Cplx(0.0));
    }
    EXPECT_TRUE(close_rel(reciprocal_gamma(Cplx(2.5, 1.0)) * complex_gamma(Cplx(2.5, 1.0)), 1.0, 1e-14));
}

TEST(Gamma, LogGammaExponentiates) {
    for (Cplx z : {Cplx(0.7, 0.2), Cplx(30.0, -4.0), Cplx(-1.5, 2.0)})
        EXPECT_TRUE(close_rel(std::exp(log_gamma(z)), complex_gamma(z), 1e-12)) << z;
}

TEST(SinPi, ExactZerosAtIntegers) {
    for (int n = -5; n <= 5; ++n) EXPECT_EQ(sin_pi(Cplx(n)), Cplx(0.0));
    EXPECT_TRUE(close_c(sin_pi(Cplx(0.5)), 1.0, 1e-15));
    const Cplx z(0.3, 0.8);
    EXPECT_TRUE(close_rel(sin_pi(z), std::sin(M_PI * z), 1e-14));
}

TEST(Jacobi, MatchesHighPrecisionReference) {
    struct Case {
        int n;
        double a, b, x, value;
    };
    const Case cases[] = {
        {3, 0.5, 1.5, 0.3, -0.39725},
        {5, -1.3, 2.2, -0.7, -2.2844724743383588},
        {7, 2.5, -0.5, 0.9, 20.724439226562507},
        {4, -4.5, 1.0, 1.7, 0.185542724609375},
    };
    for (const auto& c : cases) {
        const Jet x = Jet::variable(c.x, 2);
        EXPECT_TRUE(close_rel(jacobi_P(c.n, c.a, c.b, x).value(), c.value, 1e-12)) << c.n;
        EXPECT_TRUE(close_rel(jacobi_P_sum(c.n, c.a, c.b, x).value(), c.value, 1e-12)) << c.n;
    }
}

TEST(Jacobi, DerivativeIdentity) {
    // d/dx P_n^(a,b) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1)
    const Jet x = Jet::variable(0.37, 3);
    const Cplx a(1.2, 0.0), b(-0.4, 0.0);
    const Jet p = jacobi_P(6, a, b, x);
    const Jet q = jacobi_P(5, a + 1.0, b + 1.0, x);
    EXPECT_TRUE(close_rel(p.derivative(1), 0.5 * (6.0 + a + b + 1.0) * q.value(), 1e-13));
}

TEST(Jacobi, DegenerateRecurrenceFallsBackToSum) {
    // n + a + b = 0 at an intermediate step zeroes a recurrence denominator
    const Jet x = Jet::variable(0.2, 1);
    const Cplx a(-1.5), b(-1.5);
    EXPECT_TRUE(close_rel(jacobi_P(3, a, b, x).value(), jacobi_P_sum(3, a, b, x).value(), 1e-13));
}

TEST(Laguerre, MatchesHighPrecisionReference) {
    struct Case {
        int n;
        double a, x, value;
    };
    const Case cases[] = {
        {3, 0.5, 1.2, -0.8305},
        {6, -1.7, 4.4, 1.1935097930555563},
        {4, 2.3, 0.05, 18.566100260416664},
    };
    for (const auto& c : cases)
        EXPECT_TRUE(close_rel(laguerre_L(c.n, c.a, Jet::variable(c.x, 1)).value(), c.value, 1e-12)) << c.n;
}

TEST(Binomial, GeneralizedValues) {
    EXPECT_TRUE(close_c(binomial(5.0, 2), 10.0, 1e-14));
    EXPECT_TRUE(close_c(binomial(-0.5, 3), -0.3125, 1e-15));
    EXPECT_TRUE(close_c(binomial(Cplx(2.0, 1.0), 0), 1.0, 0.0));
}
