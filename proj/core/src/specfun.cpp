#include "scatter/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace scatter {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients for g = 671/128 (Numerical Recipes, 3rd ed.).
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,       -59.5979603554754912,       14.1360979747417471,
    -0.491913816097620199,     .339946499848118887e-4,     .465236289270485756e-4,
    -.983744753048795646e-4,   .158088703224912494e-3,     -.210264441724104883e-3,
    .217439618115212643e-3,    -.164318106536763890e-3,    .844182239838527433e-4,
    -.261908384015814087e-4,   .368991826595316234e-5};
constexpr double kLanczosG = 5.24218750000000000;  // 671/128
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr double kSqrt2Pi = 2.5066282746310005;

// log Gamma(z) for Re z >= 1/2.
Cplx log_gamma_right(Cplx z) {
    Cplx ser = kLanczosC0;
    Cplx y = z;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    const Cplx tmp = z + kLanczosG;
    return (z + 0.5) * std::log(tmp) - tmp + std::log(kSqrt2Pi * ser / z);
}

bool near_nonpositive_integer(Cplx z) {
    if (std::abs(z.imag()) > 1e-14 || z.real() > 0.5) return false;
    return std::abs(z.real() - std::round(z.real())) <= 1e-14;
}

// sin(pi t), cos(pi t) for real t with exact zeros at integers / half-integers.
void sincos_pi(double t, double& s, double& c) {
    double r = std::fmod(t, 2.0);
    if (r < 0) r += 2.0;
    // r in [0, 2)
    if (r == 0.0) { s = 0.0; c = 1.0; return; }
    if (r == 0.5) { s = 1.0; c = 0.0; return; }
    if (r == 1.0) { s = 0.0; c = -1.0; return; }
    if (r == 1.5) { s = -1.0; c = 0.0; return; }
    s = std::sin(kPi * r);
    c = std::cos(kPi * r);
}

}  // namespace

Cplx sin_pi(Cplx z) {
    double s = 0, c = 0;
    sincos_pi(z.real(), s, c);
    const double y = kPi * z.imag();
    return {s * std::cosh(y), c * std::sinh(y)};
}

Cplx log_gamma(Cplx z) {
    if (near_nonpositive_integer(z)) throw PoleAtNonpositiveInteger(z);
    if (z.real() >= 0.5) return log_gamma_right(z);
    return std::log(kPi) - std::log(sin_pi(z)) - log_gamma_right(1.0 - z);
}

Cplx complex_gamma(Cplx z) {
    if (near_nonpositive_integer(z)) throw PoleAtNonpositiveInteger(z);
    if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
    return kPi / (sin_pi(z) * std::exp(log_gamma_right(1.0 - z)));
}

Cplx reciprocal_gamma(Cplx z) {
    if (z.real() >= 0.5) return std::exp(-log_gamma_right(z));
    return sin_pi(z) * std::exp(log_gamma_right(1.0 - z)) / kPi;
}

Cplx binomial(Cplx z, int m) {
    Cplx r = 1.0;
    for (int j = 0; j < m; ++j) r *= (z - static_cast<double>(j)) / static_cast<double>(j + 1);
    return r;
}

Jet jacobi_P_sum(int n, Cplx a, Cplx b, const Jet& x) {
    const Jet xm = (x - Cplx(1.0)) * 0.5;
    const Jet xp = (x + Cplx(1.0)) * 0.5;
    Jet acc(x.order(), 0.0);
    // powers of xm and xp
    std::array<Jet, 64> pm{}, pp{};
    if (n >= 63) throw DomainError("jacobi_P_sum: degree too large");
    pm[0] = Jet(x.order(), 1.0);
    pp[0] = Jet(x.order(), 1.0);
    for (int s = 1; s <= n; ++s) {
        pm[static_cast<std::size_t>(s)] = pm[static_cast<std::size_t>(s - 1)] * xm;
        pp[static_cast<std::size_t>(s)] = pp[static_cast<std::size_t>(s - 1)] * xp;
    }
    const Cplx na = static_cast<double>(n) + a;
    const Cplx nb = static_cast<double>(n) + b;
    for (int s = 0; s <= n; ++s) {
        const Cplx coef = binomial(na, n - s) * binomial(nb, s);
        acc += pm[static_cast<std::size_t>(s)] * pp[static_cast<std::size_t>(n - s)] * coef;
    }
    return acc;
}

Jet jacobi_P(int n, Cplx a, Cplx b, const Jet& x) {
    if (n < 0) throw DomainError("jacobi_P: negative degree");
    const int order = x.order();
    if (n == 0) return Jet(order, 1.0);
    const Cplx ab = a + b;
    // P_1 = (a+1) + (a+b+2)(x-1)/2
    Jet p1 = (x - Cplx(1.0)) * ((ab + 2.0) * 0.5) + (a + 1.0);
    if (n == 1) return p1;
    for (int m = 2; m <= n; ++m) {
        const double md = m;
        const Cplx d = 2.0 * md * (md + ab) * (2.0 * md + ab - 2.0);
        if (std::abs(d) < 1e-10) return jacobi_P_sum(n, a, b, x);
    }
    Jet p0(order, 1.0);
    for (int m = 2; m <= n; ++m) {
        const double md = m;
        const Cplx c2m = 2.0 * md + ab;
        const Cplx d = 2.0 * md * (md + ab) * (c2m - 2.0);
        const Cplx e = c2m - 1.0;
        const Cplx lin = e * c2m * (c2m - 2.0);
        const Cplx cst = e * (a * a - b * b);
        const Cplx back = 2.0 * (md + a - 1.0) * (md + b - 1.0) * c2m;
        Jet p2 = (p1 * (x * lin + cst) - p0 * back) / d;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

Jet laguerre_L(int n, Cplx a, const Jet& x) {
    if (n < 0) throw DomainError("laguerre_L: negative degree");
    const int order = x.order();
    Jet l0(order, 1.0);
    if (n == 0) return l0;
    Jet l1 = (1.0 + a) - x;
    for (int m = 2; m <= n; ++m) {
        const double md = m;
        Jet l2 = (l1 * ((2.0 * md - 1.0 + a) - x) - l0 * (md - 1.0 + a)) / Cplx(md);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

}  // namespace scatter
