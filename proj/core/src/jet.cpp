#include "scatter/jet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace scatter {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_order(int order) {
    if (order < 0 || order > kMaxJetOrder)
        throw DomainError("jet order " + std::to_string(order) + " outside [0, " +
                          std::to_string(kMaxJetOrder) + "]");
}

// y' = g(y) f' solved coefficient by coefficient, with g(y) = 1 - y^2.
Jet riccati_unit(const Jet& f, Cplx y0) {
    const int n = f.order();
    Jet y(n, y0);
    for (int m = 1; m <= n; ++m) {
        Cplx acc = 0.0;
        for (int k = 1; k <= m; ++k) {
            // coefficient (m-k) of 1 - y^2, using y_0..y_{m-1}
            const int j = m - k;
            Cplx g = (j == 0) ? 1.0 : 0.0;
            for (int i = 0; i <= j; ++i) g -= y.taylor(i) * y.taylor(j - i);
            acc += static_cast<double>(k) * f.taylor(k) * g;
        }
        y.taylor(m) = acc / static_cast<double>(m);
    }
    return y;
}

// Primitive with prescribed constant: b_0 = c, b' = d (d of order n-1).
Jet integrate(const Jet& d, Cplx c, int n) {
    Jet b(n, c);
    for (int m = 1; m <= n; ++m) b.taylor(m) = d.taylor(m - 1) / static_cast<double>(m);
    return b;
}

}  // namespace

int default_jet_order() {
    static const int order = [] {
        int o = 3;
        if (const char* env = std::getenv("SCATTER_JET_ORDER")) {
            try {
                o = std::stoi(env);
            } catch (...) {
                o = 3;
            }
        }
        return std::clamp(o, 3, kMaxJetOrder);
    }();
    return order;
}

Cplx checked_div(Cplx a, Cplx b) {
    if (b == Cplx(0.0, 0.0)) throw DivisionByZero();
    return a / b;
}

Jet::Jet(int order, Cplx c) : order_(order) {
    check_order(order);
    c_[0] = c;
}

Jet Jet::variable(double x0, int order) {
    Jet j(order, x0);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

Jet Jet::from_derivatives(std::initializer_list<Cplx> derivs) {
    const int n = static_cast<int>(derivs.size()) - 1;
    Jet j(std::max(n, 0), 0.0);
    int k = 0;
    for (Cplx d : derivs) {
        j.c_[static_cast<std::size_t>(k)] = d / factorial(k);
        ++k;
    }
    return j;
}

Jet Jet::from_taylor(int order, const Cplx* coeffs) {
    Jet j(order, 0.0);
    for (int k = 0; k <= order; ++k) j.c_[static_cast<std::size_t>(k)] = coeffs[k];
    return j;
}

Cplx Jet::derivative(int k) const {
    if (k < 0 || k > order_) throw IndexError("jet derivative order out of range");
    return c_[static_cast<std::size_t>(k)] * factorial(k);
}

Jet Jet::differentiate() const { return shifted(1); }

Jet Jet::truncated(int order) const {
    Jet j = *this;
    j.order_ = std::min(order, order_);
    for (int k = j.order_ + 1; k <= kMaxJetOrder; ++k) j.c_[static_cast<std::size_t>(k)] = 0.0;
    return j;
}

Jet Jet::shifted(int k) const {
    if (k > order_) throw IndexError("cannot differentiate jet beyond its order");
    Jet j(order_ - k, 0.0);
    for (int m = 0; m <= order_ - k; ++m) {
        // f^(k+m)/m! = c_{k+m} (k+m)!/m!
        double w = 1.0;
        for (int i = m + 1; i <= m + k; ++i) w *= i;
        j.c_[static_cast<std::size_t>(m)] = c_[static_cast<std::size_t>(m + k)] * w;
    }
    return j;
}

Jet& Jet::operator+=(const Jet& o) {
    order_ = std::min(order_, o.order_);
    for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    order_ = std::min(order_, o.order_);
    for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
    return *this;
}

Jet& Jet::operator*=(const Jet& o) {
    const int n = std::min(order_, o.order_);
    std::array<Cplx, kMaxJetOrder + 1> r{};
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            r[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    c_ = r;
    order_ = n;
    return *this;
}

Jet& Jet::operator/=(const Jet& o) {
    const int n = std::min(order_, o.order_);
    const Cplx f0 = o.c_[0];
    if (f0 == Cplx(0.0, 0.0)) throw DivisionByZero();
    std::array<Cplx, kMaxJetOrder + 1> b{};
    for (int m = 0; m <= n; ++m) {
        Cplx acc = c_[static_cast<std::size_t>(m)];
        for (int k = 1; k <= m; ++k) acc -= o.c_[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(m - k)];
        b[static_cast<std::size_t>(m)] = acc / f0;
    }
    c_ = b;
    order_ = n;
    return *this;
}

Jet& Jet::operator+=(Cplx s) {
    c_[0] += s;
    return *this;
}
Jet& Jet::operator-=(Cplx s) {
    c_[0] -= s;
    return *this;
}
Jet& Jet::operator*=(Cplx s) {
    for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] *= s;
    return *this;
}
Jet& Jet::operator/=(Cplx s) {
    if (s == Cplx(0.0, 0.0)) throw DivisionByZero();
    for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] /= s;
    return *this;
}

Jet Jet::operator-() const {
    Jet j = *this;
    for (int k = 0; k <= order_; ++k) j.c_[static_cast<std::size_t>(k)] = -j.c_[static_cast<std::size_t>(k)];
    return j;
}

Jet operator/(Cplx s, const Jet& a) { return Jet(a.order(), s) / a; }

Jet exp(const Jet& f) {
    const int n = f.order();
    Jet b(n, std::exp(f.value()));
    for (int m = 1; m <= n; ++m) {
        Cplx acc = 0.0;
        for (int k = 1; k <= m; ++k) acc += static_cast<double>(k) * f.taylor(k) * b.taylor(m - k);
        b.taylor(m) = acc / static_cast<double>(m);
    }
    return b;
}

Jet log(const Jet& f) {
    const int n = f.order();
    const Cplx f0 = f.value();
    if (f0 == Cplx(0.0, 0.0)) throw DomainError("log of a jet with zero value");
    Jet b(n, std::log(f0));
    for (int m = 1; m <= n; ++m) {
        Cplx acc = f.taylor(m);
        for (int k = 1; k < m; ++k) acc -= static_cast<double>(k) / m * b.taylor(k) * f.taylor(m - k);
        b.taylor(m) = acc / f0;
    }
    return b;
}

Jet pow(const Jet& f, Cplx a) {
    const int n = f.order();
    const Cplx f0 = f.value();
    if (f0 == Cplx(0.0, 0.0)) throw DomainError("pow of a jet with zero value");
    Jet b(n, std::pow(f0, a));
    for (int m = 1; m <= n; ++m) {
        Cplx acc = 0.0;
        for (int k = 1; k <= m; ++k)
            acc += (a * static_cast<double>(k) - static_cast<double>(m - k)) * f.taylor(k) * b.taylor(m - k);
        b.taylor(m) = acc / (static_cast<double>(m) * f0);
    }
    return b;
}

Jet sinh(const Jet& f) {
    Jet r = (exp(f) - exp(-f)) * 0.5;
    r.taylor(0) = std::sinh(f.value());
    return r;
}

Jet cosh(const Jet& f) {
    Jet r = (exp(f) + exp(-f)) * 0.5;
    r.taylor(0) = std::cosh(f.value());
    return r;
}

Jet tanh(const Jet& f) { return riccati_unit(f, std::tanh(f.value())); }

Jet coth(const Jet& f) {
    if (f.value() == Cplx(0.0, 0.0)) throw DomainError("coth at zero");
    return riccati_unit(f, 1.0 / std::tanh(f.value()));
}

Jet atan(const Jet& f) {
    const int n = f.order();
    if (n == 0) return Jet(0, std::atan(f.value()));
    const Jet fl = f.truncated(n - 1);
    const Jet d = f.differentiate() / (fl * fl + Cplx(1.0));
    return integrate(d, std::atan(f.value()), n);
}

Jet log_cosh(const Jet& f) {
    const int n = f.order();
    const Cplx f0 = f.value();
    const double s = f0.real() >= 0 ? 1.0 : -1.0;
    const Cplx v = s * f0 + std::log(1.0 + std::exp(-2.0 * s * f0)) - std::numbers::ln2;
    if (n == 0) return Jet(0, v);
    const Jet d = tanh(f.truncated(n - 1)) * f.differentiate();
    return integrate(d, v, n);
}

Jet log_sinh(const Jet& f) {
    const int n = f.order();
    const Cplx f0 = f.value();
    if (f0.real() <= 0.0) throw DomainError("log_sinh requires a positive argument");
    const Cplx tail = f0.imag() == 0.0 ? Cplx(-std::expm1(-2.0 * f0.real())) : 1.0 - std::exp(-2.0 * f0);
    const Cplx v = f0 + std::log(tail) - std::numbers::ln2;
    if (n == 0) return Jet(0, v);
    const Jet d = coth(f.truncated(n - 1)) * f.differentiate();
    return integrate(d, v, n);
}

}  // namespace scatter
