#include <cmath>
#include <cstdlib>

#include "scatter/jet.hpp"
#include "test_util.hpp"

using namespace scatter;

TEST(Jet, ProductFollowsLeibniz) {
    const Jet x = Jet::variable(0.4, 6);
    const Jet f = exp(x) * sinh(x);
    // e^x sinh x = (e^{2x} - 1)/2, n-th derivative 2^{n-1} e^{2x}
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(close_rel(f.derivative(n), std::pow(2.0, n - 1) * std::exp(0.8), 1e-13));
}

TEST(Jet, QuotientAndLogInvertOperations) {
    const Jet x = Jet::variable(1.3, 8);
    const Jet f = cosh(x) + x * x;
    const Jet back = (f / exp(x)) * exp(x);
    const Jet logexp = log(exp(f));
    for (int n = 0; n <= 8; ++n) {
        EXPECT_TRUE(close_c(back.derivative(n), f.derivative(n), 1e-11)) << n;
        EXPECT_TRUE(close_rel(logexp.derivative(n), f.derivative(n), 1e-8)) << n;
    }
}

TEST(Jet, TanhAgainstClosedDerivatives) {
    const double x0 = -0.6;
    const Jet t = tanh(Jet::variable(x0, 3));
    const double s = 1.0 / std::cosh(x0), th = std::tanh(x0);
    EXPECT_TRUE(close_c(t.derivative(1), s * s, 1e-15));
    EXPECT_TRUE(close_c(t.derivative(2), -2.0 * th * s * s, 1e-15));
}

TEST(Jet, PowAndAtan) {
    const Jet x = Jet::variable(2.0, 4);
    const Jet p = pow(x, Cplx(2.5));
    EXPECT_TRUE(close_rel(p.derivative(2), 2.5 * 1.5 * std::pow(2.0, 0.5), 1e-14));
    EXPECT_TRUE(close_rel(atan(x).derivative(1), 1.0 / 5.0, 1e-15));
}

TEST(Jet, LogCoshStaysFiniteFarOut) {
    const Jet l = log_cosh(Jet::variable(800.0, 3));
    EXPECT_TRUE(std::isfinite(l.value().real()));
    EXPECT_NEAR(l.value().real(), 800.0 - std::log(2.0), 1e-10);
    EXPECT_NEAR(l.derivative(1).real(), 1.0, 1e-14);
}

TEST(Jet, DifferentiateAndShift) {
    const Jet x = Jet::variable(0.5, 5);
    const Jet f = exp(x * Cplx(3.0));
    EXPECT_EQ(f.differentiate().order(), 4);
    EXPECT_TRUE(close_rel(f.shifted(2).value(), 9.0 * std::exp(1.5), 1e-14));
}

TEST(Jet, OrderAboveMaximumIsRejected) { EXPECT_THROW(Jet::variable(0.0, kMaxJetOrder + 1), DomainError); }

TEST(Jet, DefaultOrderIsClamped) {
    const int o = default_jet_order();
    EXPECT_GE(o, 3);
    EXPECT_LE(o, kMaxJetOrder);
}
