#include "scatter/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace scatter {

namespace {

using Matrix = std::vector<std::vector<Jet>>;

Jet det_cofactor(const Matrix& a, int r) {
    const std::size_t n = a.size();
    if (n == 0) return Jet(r, 1.0);
    if (n == 1) return a[0][0];
    Jet acc(r, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Jet> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        const Jet term = a[0][j] * det_cofactor(minor, r);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

Jet det_lu(Matrix a, int r) {
    const std::size_t n = a.size();
    if (n == 0) return Jet(r, 1.0);
    const Matrix original = a;
    double sign = 1.0;
    Jet det(r, 1.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k].value()) > std::abs(a[p][k].value())) p = i;
        if (a[p][k].value() == Cplx(0.0, 0.0)) return det_cofactor(original, r);
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Jet f = a[i][k] / a[k][k];
            for (std::size_t c = k + 1; c < n; ++c) a[i][c] -= f * a[k][c];
        }
    }
    return det * Cplx(sign);
}

// W[f1..fn] = f1 W[h2..hn] with h_j = W[f1, f_j] / f1.
Jet det_crum(const std::vector<Jet>& cols, int r) {
    const std::size_t n = cols.size();
    if (n == 0) return Jet(r, 1.0);
    const Jet& f1 = cols[0];
    if (n == 1) return f1.truncated(r);
    if (f1.value() == Cplx(0.0, 0.0)) return Jet(r, 0.0);  // caller falls back
    const Jet d1 = f1.differentiate();
    std::vector<Jet> h;
    h.reserve(n - 1);
    for (std::size_t j = 1; j < n; ++j) h.push_back((f1 * cols[j].differentiate() - d1 * cols[j]) / f1);
    return f1.truncated(r) * det_crum(h, r);
}

Matrix wronskian_matrix(const std::vector<Jet>& cols, int r) {
    const std::size_t n = cols.size();
    Matrix a(n, std::vector<Jet>(n, Jet(r, 0.0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j].shifted(static_cast<int>(i)).truncated(r);
    return a;
}

FactoredJet real_projected(FactoredJet f, Family fam) {
    if (fam != Family::HyperbolicSymTop) return f;
    for (int k = 0; k <= f.poly.order(); ++k) f.poly.taylor(k) = f.poly.taylor(k).real();
    return f;
}

std::vector<FactoredJet> seed_forms(const std::vector<SeedSolution>& seeds, double x, int order) {
    std::vector<FactoredJet> fs;
    fs.reserve(seeds.size());
    const Jet xj = Jet::variable(x, order);
    for (const auto& s : seeds) fs.push_back(seed_form(s, xj));
    return fs;
}

// num / den of two normalised Wronskians, restoring the scale factor.
Jet wronskian_ratio(const std::vector<FactoredJet>& top, const std::vector<FactoredJet>& bottom, double x, int r) {
    Cplx ls_top, ls_bot;
    const Jet num = normalized_wronskian(top, r, ls_top, x, DetStrategy::LU, false);
    const Jet den = normalized_wronskian(bottom, r, ls_bot, x);
    return (num / den) * std::exp(ls_top - ls_bot);
}

}  // namespace

Scenario make_scenario(const PotentialSpec& spec, std::vector<SeedSolution> seeds) {
    std::set<std::tuple<int, int, int>> seen;
    std::set<double> energies;
    const double e0 = energy_formula(spec, 0);
    for (const auto& s : seeds) {
        if (s.parent.family() != spec.family() || s.parent.h() != spec.h() || s.parent.mu() != spec.mu() ||
            s.parent.g() != spec.g())
            throw DomainError("seed does not belong to the scenario potential");
        const int tw = s.twist ? static_cast<int>(*s.twist) : -1;
        if (!seen.insert({static_cast<int>(s.origin), tw, s.degree}).second) {
            std::ostringstream os;
            os << "repeated seed degree " << s.degree;
            throw DomainError(os.str());
        }
        if (!(s.energy < e0)) throw SeedError(SeedError::Reason::AboveGroundState, "seed energy above E_0");
        for (double e : energies)
            if (std::abs(e - s.energy) <= 1e-12 * std::max(1.0, std::abs(e)))
                throw DomainError("two seeds share the same energy; their Wronskian vanishes");
        energies.insert(s.energy);
    }
    return {spec, std::move(seeds)};
}

Jet wronskian_determinant(const std::vector<Jet>& cols, int out_order, DetStrategy strategy) {
    const int n = static_cast<int>(cols.size());
    for (const auto& c : cols)
        if (c.order() < n - 1 + out_order) throw DomainError("wronskian: column jet order too low");
    switch (strategy) {
        case DetStrategy::Cofactor: return det_cofactor(wronskian_matrix(cols, out_order), out_order);
        case DetStrategy::LU: return det_lu(wronskian_matrix(cols, out_order), out_order);
        case DetStrategy::Crum: {
            const bool degenerate =
                std::any_of(cols.begin(), cols.end(), [](const Jet& c) { return c.value() == Cplx(0.0, 0.0); });
            if (degenerate) return det_lu(wronskian_matrix(cols, out_order), out_order);
            return det_crum(cols, out_order);
        }
    }
    return Jet(out_order, 0.0);
}

Jet normalized_wronskian(const std::vector<FactoredJet>& fs, int out_order, Cplx& log_scale, double x,
                         DetStrategy strategy, bool check_zero) {
    log_scale = 0.0;
    if (fs.empty()) return Jet(out_order, 1.0);
    std::vector<Jet> cols;
    cols.reserve(fs.size());
    const int n = static_cast<int>(fs.size());
    // zero test against the column- and row-equilibrated matrix: derivative
    // rows of high-degree polynomials differ by many orders of magnitude
    std::vector<double> cmax(n, 0.0), rmax(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const Cplx l0 = fs[j].log_prefactor.value();
        log_scale += l0;
        Jet col = exp(fs[j].log_prefactor - l0) * fs[j].poly;
        for (int i = 0; i < n; ++i) cmax[j] = std::max(cmax[j], std::abs(col.derivative(i)));
        cols.push_back(std::move(col));
    }
    double scale = 1.0;
    for (int j = 0; j < n; ++j) scale *= cmax[j];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (cmax[j] > 0.0) rmax[i] = std::max(rmax[i], std::abs(cols[j].derivative(i)) / cmax[j]);
        scale *= rmax[i];
    }
    Jet d = wronskian_determinant(cols, out_order, strategy);
    if (check_zero && !(std::abs(d.value()) >= 1e-13 * scale)) throw ZeroWronskian(x);
    return d;
}

WronskianEval wronskian(const std::vector<SeedSolution>& seeds, double x, DetStrategy strategy) {
    WronskianEval w;
    if (seeds.empty()) {
        w.value = 1.0;
        return w;
    }
    const int m = static_cast<int>(seeds.size());
    Cplx ls;
    const Jet d = normalized_wronskian(seed_forms(seeds, x, m + 1), 2, ls, x, strategy);
    const Cplx d0 = d.taylor(0), d1 = d.taylor(1), d2 = d.taylor(2);
    w.value = std::exp(ls) * d0;
    w.log_abs = ls.real() + std::log(std::abs(d0));
    w.sign = (std::exp(Cplx(0.0, ls.imag())) * d0).real() >= 0.0 ? 1 : -1;
    w.logderiv1 = d1 / d0;
    w.logderiv2 = 2.0 * d2 / d0 - w.logderiv1 * w.logderiv1;
    return w;
}

double deformed_potential(const Scenario& sc, double x) {
    const double u = potential_value(sc.spec, x);
    if (sc.seeds.empty()) return u;
    return u - 2.0 * wronskian(sc.seeds, x).logderiv2.real();
}

Jet deformed_eigenfunction(const Scenario& sc, int n, double x, int order) {
    (void)eigen_state(sc.spec, n);
    const int m = sc.M();
    const int jo = m + order;
    auto bottom = seed_forms(sc.seeds, x, jo);
    auto top = bottom;
    top.push_back(real_projected(eigen_form(sc.spec, n, Jet::variable(x, jo)), sc.spec.family()));
    return wronskian_ratio(top, bottom, x, order);
}

Jet ode_jet(const PotentialSpec& spec, Cplx energy, double x, Cplx psi, Cplx dpsi, int order) {
    Jet f(order, psi);
    if (order >= 1) f.taylor(1) = dpsi;
    if (order < 2) return f;
    const Jet v = potential_value(spec, Jet::variable(x, order - 2)) - energy;
    // (m+2)(m+1) a_{m+2} = sum_j v_j a_{m-j}
    for (int m = 0; m + 2 <= order; ++m) {
        Cplx acc = 0.0;
        for (int j = 0; j <= m; ++j) acc += v.taylor(j) * f.taylor(m - j);
        f.taylor(m + 2) = acc / static_cast<double>((m + 2) * (m + 1));
    }
    return f;
}

Jet deformed_wave(const Scenario& sc, Cplx energy, double x, Cplx psi, Cplx dpsi, int order) {
    const int jo = sc.M() + order;
    auto bottom = seed_forms(sc.seeds, x, jo);
    auto top = bottom;
    top.push_back({Jet(jo, 0.0), ode_jet(sc.spec, energy, x, psi, dpsi, jo)});
    return wronskian_ratio(top, bottom, x, order);
}

double norm_ratio(const Scenario& sc, int n) {
    const double en = eigen_state(sc.spec, n).energy;
    double p = 1.0;
    for (const auto& s : sc.seeds) p *= en - s.energy;
    return p;
}

std::pair<double, double> integration_window(const Scenario& sc, int n) {
    const auto amp = [&](double x) {
        try {
            return std::abs(deformed_eigenfunction(sc, n, x, 0).value());
        } catch (const ZeroWronskian&) {
            return 0.0;
        }
    };
    const bool half = on_half_line(sc.spec.family());
    double peak = 0.0;
    for (double x = half ? 0.05 : -8.0; x <= 8.0; x += 0.25) peak = std::max(peak, amp(x));
    const double tiny = 1e-9 * peak;
    double right = 10.0;
    while (right < 400.0 && amp(right) > tiny) right *= 1.5;
    double left = 0.0;
    if (!half) {
        left = -10.0;
        while (left > -400.0 && amp(left) > tiny) left *= 1.5;
        if (sc.spec.family() == Family::Morse) left = std::max(left, -12.0);
    }
    return {left, right};
}

namespace {

double integrate_product(const Scenario& sc, int m, int n) {
    const auto [a1, b1] = integration_window(sc, m);
    const auto [a2, b2] = integration_window(sc, n);
    const double a = std::min(a1, a2), b = std::max(b1, b2);
    const bool half = on_half_line(sc.spec.family());
    auto f = [&](double x) {
        try {
            const Cplx u = deformed_eigenfunction(sc, m, x, 0).value();
            const Cplx v = m == n ? u : deformed_eigenfunction(sc, n, x, 0).value();
            return (std::conj(u) * v).real();
        } catch (const ZeroWronskian&) {
            if (half && x < 1e-3) return 0.0;
            throw;
        }
    };
    using Q = boost::math::quadrature::gauss_kronrod<double, 61>;
    // split at the origin region so the peak is resolved
    double total = 0.0;
    const double pts[] = {a, half ? 0.5 : -2.0, half ? 4.0 : 2.0, b};
    for (int i = 0; i < 3; ++i) {
        const double lo = std::max(a, pts[i]), hi = std::min(b, pts[i + 1]);
        if (hi > lo) total += Q::integrate(f, lo, hi, 20, 1e-12);
    }
    return total;
}

}  // namespace

double norm_ratio_quadrature(const Scenario& sc, int n) {
    const Scenario base{sc.spec, {}};
    return integrate_product(sc, n, n) / integrate_product(base, n, n);
}

double overlap_quadrature(const Scenario& sc, int m, int n) { return integrate_product(sc, m, n); }

}  // namespace scatter
