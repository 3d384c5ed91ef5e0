#pragma once

// Truncated Taylor arithmetic ("jets") with complex coefficients.
//
// A jet of order N at x0 stores f(x0), f'(x0), ..., f^(N)(x0). Internally the
// normalized Taylor coefficients c_k = f^(k)(x0)/k! are kept, so products are
// plain convolutions and the Leibniz rule holds by construction.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "scatter/errors.hpp"

namespace scatter {

inline constexpr int kMaxJetOrder = 12;

/// Order used when a caller does not ask for a specific one. Reads
/// SCATTER_JET_ORDER once; clamps to [3, kMaxJetOrder].
int default_jet_order();

class Jet {
public:
    Jet() = default;
    /// Constant c carried at the given order (all derivatives zero).
    Jet(int order, Cplx c);

    /// The independent variable x0 + t.
    static Jet variable(double x0, int order);
    /// Build from derivative values {f, f', f'', ...}.
    static Jet from_derivatives(std::initializer_list<Cplx> derivs);
    static Jet from_taylor(int order, const Cplx* coeffs);

    int order() const { return order_; }
    Cplx value() const { return c_[0]; }
    /// k-th derivative at the expansion point.
    Cplx derivative(int k) const;
    Cplx taylor(int k) const { return c_[static_cast<std::size_t>(k)]; }
    Cplx& taylor(int k) { return c_[static_cast<std::size_t>(k)]; }

    /// d/dx as a jet of one lower order.
    Jet differentiate() const;
    /// Same function truncated to a lower order.
    Jet truncated(int order) const;
    /// Jet whose value is the k-th derivative of this one (order drops by k).
    Jet shifted(int k) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator/=(const Jet& o);
    Jet& operator+=(Cplx s);
    Jet& operator-=(Cplx s);
    Jet& operator*=(Cplx s);
    Jet& operator/=(Cplx s);
    Jet operator-() const;

private:
    int order_ = 0;
    std::array<Cplx, kMaxJetOrder + 1> c_{};
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }
inline Jet operator+(Jet a, Cplx s) { return a += s; }
inline Jet operator-(Jet a, Cplx s) { return a -= s; }
inline Jet operator*(Jet a, Cplx s) { return a *= s; }
inline Jet operator/(Jet a, Cplx s) { return a /= s; }
inline Jet operator+(Cplx s, Jet a) { return a += s; }
inline Jet operator-(Cplx s, const Jet& a) { return -a + s; }
inline Jet operator*(Cplx s, Jet a) { return a *= s; }
Jet operator/(Cplx s, const Jet& a);

Jet exp(const Jet& f);
Jet log(const Jet& f);
/// f^a via the power-series recurrence; requires f(x0) != 0.
Jet pow(const Jet& f, Cplx a);
Jet sinh(const Jet& f);
Jet cosh(const Jet& f);
Jet tanh(const Jet& f);
/// coth f; requires f(x0) != 0.
Jet coth(const Jet& f);
Jet atan(const Jet& f);
/// log cosh f, stable for large |f|.
Jet log_cosh(const Jet& f);
/// log sinh f for Re f(x0) > 0, stable for large f.
Jet log_sinh(const Jet& f);

/// Checked complex division; throws DivisionByZero on an exact zero divisor.
Cplx checked_div(Cplx a, Cplx b);

}  // namespace scatter
