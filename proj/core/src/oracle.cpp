#include "scatter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

namespace scatter {

namespace {

constexpr Cplx kI{0.0, 1.0};
constexpr double kHalfLineStart = 1e-4;
constexpr double kWallHeight = 1600.0;
constexpr double kRescale = 1e150;

std::vector<double> tabulate(const std::function<double(double)>& f, const std::vector<double>& xs, unsigned threads) {
    std::vector<double> out(xs.size());
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(xs.size() / 2000 + 1));
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    const std::size_t chunk = (xs.size() + n - 1) / n;
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&, t] {
            try {
                const std::size_t lo = t * chunk, hi = std::min(xs.size(), lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) out[i] = f(xs[i]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

double find_flat_radius(const std::function<double(double)>& U, double start, double sign, double target,
                        const OracleOptions& o) {
    double x = start;
    while (std::abs(U(sign * x) - target) > o.flat_tol && x < o.max_radius) x += 2.0;
    const double dev = std::abs(U(sign * x) - target);
    if (dev > 1e-8) {
        std::ostringstream os;
        os << "potential not flat at x=" << sign * x << " (|U - U_asym| = " << dev << ")";
        throw NonFlatAsymptote(os.str());
    }
    return x;
}

// One Numerov step for y'' = f y.
template <class T>
T numerov_next(T y0, T y1, double f0, double f1, double f2, double h2) {
    return (2.0 * (1.0 + 5.0 * h2 * f1 / 12.0) * y1 - (1.0 - h2 * f0 / 12.0) * y0) / (1.0 - h2 * f2 / 12.0);
}

void check_step(double f, double h2) {
    if (h2 * std::abs(f) > 6.0) throw StiffRegion("Numerov step too large for the local potential");
}

// Regular solution on the half line: log-grid from ~1e-4 to x = 1, returning
// psi at x = 1 and x = 1 + h (the first two points of the uniform grid).
template <class T>
std::pair<T, T> half_line_start(const PreparedProblem& p, T energy) {
    const auto& lx = p.log_grid();
    const auto& lu = p.log_u();
    const double lh = p.log_h(), h2 = lh * lh;
    const auto F = [&](std::size_t i) {
        const double x = std::exp(lx[i]);
        return x * x;
    };
    const std::size_t n = lx.size();
    std::vector<T> f(n);
    T z0 = 1.0, z1 = std::exp((p.start_power() - 0.5) * lh);
    for (std::size_t i = 0; i < n; ++i) f[i] = 0.25 + F(i) * (lu[i] - energy);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const T z2 = (2.0 * (1.0 + 5.0 * h2 * f[i] / 12.0) * z1 - (1.0 - h2 * f[i - 1] / 12.0) * z0) /
                     (1.0 - h2 * f[i + 1] / 12.0);
        z0 = z1;
        z1 = z2;
        if (std::abs(z1) > kRescale) {
            z0 /= kRescale;
            z1 /= kRescale;
        }
    }
    // z0 at u = 0 (x = 1), z1 at u = lh (x = e^lh = 1 + h)
    return {z0, z1 * std::exp(0.5 * lh)};
}

Cplx wave_number(double energy, double u_asym) {
    const double d = energy - u_asym;
    return d >= 0.0 ? Cplx(std::sqrt(d), 0.0) : Cplx(0.0, std::sqrt(-d));
}

}  // namespace

OracleProblem make_problem(const Scenario& sc) {
    OracleProblem p;
    const PotentialSpec spec = sc.spec;
    if (sc.seeds.empty()) p.U = [spec](double x) { return potential_value(spec, x); };
    else p.U = [sc](double x) { return deformed_potential(sc, x); };
    switch (spec.family()) {
        case Family::Morse: p.geometry = Geometry::Wall; break;
        case Family::Eckart:
        case Family::HyperbolicPT:
        case Family::Coulomb: p.geometry = Geometry::HalfLine; break;
        default: p.geometry = Geometry::FullLine; break;
    }
    p.u_left = 0.0;
    p.u_right = potential_right_asymptote(spec);
    p.long_range = spec.family() == Family::Coulomb;
    std::ostringstream os;
    os << family_name(spec.family()) << " M=" << sc.M();
    p.label = os.str();
    return p;
}

OracleProblem make_problem(const PotentialSpec& spec) { return make_problem(Scenario{spec, {}}); }

PreparedProblem::PreparedProblem(OracleProblem problem, const OracleOptions& o, double min_right)
    : problem_(std::move(problem)) {
    const auto& U = problem_.U;
    double right = std::max(o.radius, min_right);
    if (!problem_.long_range) right = std::max(right, find_flat_radius(U, o.radius, 1.0, problem_.u_right, o));
    double left = 0.0;
    switch (problem_.geometry) {
        case Geometry::FullLine:
            h_ = o.step;
            left = -find_flat_radius(U, o.radius, -1.0, problem_.u_left, o);
            break;
        case Geometry::Wall:
            h_ = o.step;
            left = 0.0;
            while (U(left) < kWallHeight) {
                left -= 0.25;
                if (left < -o.max_radius) throw StiffRegion("no confining wall found on the left");
            }
            break;
        case Geometry::HalfLine: {
            lh_ = o.step;
            h_ = std::expm1(lh_);
            left = 1.0;
            const int n0 = static_cast<int>(std::ceil(-std::log(kHalfLineStart) / lh_));
            lx_.resize(static_cast<std::size_t>(n0) + 2);
            for (std::size_t i = 0; i < lx_.size(); ++i) lx_[i] = (static_cast<double>(i) - n0) * lh_;
            std::vector<double> xs(lx_.size());
            std::transform(lx_.begin(), lx_.end(), xs.begin(), [](double u) { return std::exp(u); });
            lu_ = tabulate(U, xs, o.threads);
            const double c = xs[0] * xs[0] * lu_[0];
            s_ = 0.5 + std::sqrt(std::max(0.0, 0.25 + c));
            break;
        }
    }
    const auto n = static_cast<std::size_t>(std::ceil((right - left) / h_)) + 1;
    x_.resize(n);
    for (std::size_t i = 0; i < n; ++i) x_[i] = left + static_cast<double>(i) * h_;
    u_ = tabulate(U, x_, o.threads);
    if (problem_.geometry == Geometry::Wall) check_step(u_.front() - problem_.u_right, h_ * h_);
}

OracleResult numerov_scatter(const PreparedProblem& p, double k) {
    if (!(k > 0.0)) throw DomainError("numerov_scatter requires k > 0");
    const OracleProblem& prob = p.problem();
    if (prob.long_range) throw DomainError("no plane-wave matching for the 1/x tail (Coulomb)");
    const double energy = k * k + prob.u_left;
    const auto& x = p.x();
    const auto& u = p.u();
    const std::size_t n = x.size();
    const double h = p.h(), h2 = h * h;
    std::vector<Cplx> y(n);
    OracleResult res;
    res.x_left = prob.geometry == Geometry::HalfLine ? kHalfLineStart : x.front();
    res.x_right = x.back();
    // the second projection point must stay in the flat region; 0.5 keeps
    // sin(k span) away from 0 without reaching into the potential
    const double spacing = std::min(std::numbers::pi / (2.0 * k), 0.5);
    const auto span =
        static_cast<std::size_t>(std::clamp(std::round(spacing / h), 10.0, static_cast<double>(n / 4)));

    if (prob.geometry == Geometry::FullLine) {
        const Cplx kp = wave_number(energy, prob.u_right);
        y[n - 1] = std::exp(kI * kp * x[n - 1]);
        y[n - 2] = std::exp(kI * kp * x[n - 2]);
        for (std::size_t i = n - 2; i > 0; --i)
            y[i - 1] = numerov_next(y[i + 1], y[i], u[i + 1] - energy, u[i] - energy, u[i - 1] - energy, h2);
        const double xa = x[0], xb = x[span];
        const Cplx ya = y[0], yb = y[span];
        const Cplx det = std::exp(kI * k * (xa - xb)) - std::exp(-kI * k * (xa - xb));
        const Cplx A = (ya * std::exp(-kI * k * xb) - yb * std::exp(-kI * k * xa)) / det;
        const Cplx B = (std::exp(kI * k * xa) * yb - std::exp(kI * k * xb) * ya) / det;
        res.t = 1.0 / A;
        res.r = B / A;
        res.kprime = kp;
        res.flux_residual = (kp / k).real() * std::norm(*res.t) + std::norm(res.r) - 1.0;
        return res;
    }

    if (prob.geometry == Geometry::Wall) {
        y[0] = 0.0;
        y[1] = 1.0;
    } else {
        const auto [y0, y1] = half_line_start<Cplx>(p, energy);
        y[0] = y0;
        y[1] = y1;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        y[i + 1] = numerov_next(y[i - 1], y[i], u[i - 1] - energy, u[i] - energy, u[i + 1] - energy, h2);
        if (std::abs(y[i + 1]) > kRescale)
            for (std::size_t j = 0; j <= i + 1; ++j) y[j] /= kRescale;
    }
    // psi = a e^{-ikx} + b e^{ikx}, r = b / a
    const double xa = x[n - 1 - span], xb = x[n - 1];
    const Cplx ya = y[n - 1 - span], yb = y[n - 1];
    const Cplx det = std::exp(-kI * k * xa) * std::exp(kI * k * xb) - std::exp(kI * k * xa) * std::exp(-kI * k * xb);
    const Cplx a = (ya * std::exp(kI * k * xb) - yb * std::exp(kI * k * xa)) / det;
    const Cplx b = (yb * std::exp(-kI * k * xa) - ya * std::exp(-kI * k * xb)) / det;
    res.r = b / a;
    res.flux_residual = std::abs(res.r) - 1.0;
    return res;
}

OracleResult numerov_scatter(const OracleProblem& problem, double k, const OracleOptions& opts) {
    return numerov_scatter(PreparedProblem(problem, opts), k);
}

namespace {

// Sign-faithful matching Wronskian at the potential minimum.
double matching_wronskian(const PreparedProblem& p, double energy, std::size_t m) {
    const OracleProblem& prob = p.problem();
    const auto& x = p.x();
    const auto& u = p.u();
    const std::size_t n = x.size();
    const double h = p.h(), h2 = h * h;

    double l0 = 0, l1 = 0;
    switch (prob.geometry) {
        case Geometry::FullLine: {
            const double kap = std::sqrt(prob.u_left - energy);
            l0 = 1.0;
            l1 = std::exp(kap * h);
            break;
        }
        case Geometry::Wall:
            l0 = 0.0;
            l1 = 1.0;
            break;
        case Geometry::HalfLine: {
            const auto [a, b] = half_line_start<double>(p, energy);
            l0 = a;
            l1 = b;
            break;
        }
    }
    for (std::size_t i = 1; i <= m; ++i) {
        const double l2 = numerov_next(l0, l1, u[i - 1] - energy, u[i] - energy, u[i + 1] - energy, h2);
        l0 = l1;
        l1 = l2;
        if (std::abs(l1) > kRescale) {
            l0 /= kRescale;
            l1 /= kRescale;
        }
    }
    // now l0 = psi_L(m), l1 = psi_L(m+1)

    const double kap = std::sqrt(prob.u_right - energy);
    double r1 = 1.0, r0 = std::exp(kap * h);  // r1 at index n-1, r0 at n-2
    if (prob.long_range) r0 *= std::pow((x[n - 1] - h) / x[n - 1], 1.0 / kap);
    for (std::size_t i = n - 2; i > m; --i) {
        const double rm = numerov_next(r1, r0, u[i + 1] - energy, u[i] - energy, u[i - 1] - energy, h2);
        r1 = r0;
        r0 = rm;
        if (std::abs(r0) > kRescale) {
            r0 /= kRescale;
            r1 /= kRescale;
        }
    }
    // r0 = psi_R(m), r1 = psi_R(m+1)
    return l0 * r1 - l1 * r0;
}

}  // namespace

std::vector<double> shoot_bound_states(const OracleProblem& problem, double e_lo, double e_hi,
                                       const OracleOptions& opts, int mesh) {
    e_hi = std::min({e_hi, problem.u_right - 1e-9, problem.geometry == Geometry::FullLine ? problem.u_left - 1e-9 : e_hi});
    if (!(e_lo < e_hi)) return {};
    double min_right = 0.0;
    if (problem.long_range) {
        // decay length 1/kappa at the top of the window
        min_right = std::min(400.0, 10.0 + 40.0 / std::sqrt(-e_hi));
    }
    const PreparedProblem p(problem, opts, min_right);
    const auto& u = p.u();
    const std::size_t n = u.size();
    std::size_t m = 2;
    for (std::size_t i = 2; i + 3 < n; ++i)
        if (u[i] < u[m]) m = i;

    const auto D = [&](double e) { return matching_wronskian(p, e, m); };
    std::vector<double> roots;
    double ea = e_lo, da = D(ea);
    for (int j = 1; j < mesh; ++j) {
        const double eb = e_lo + (e_hi - e_lo) * j / (mesh - 1);
        const double db = D(eb);
        if (da == 0.0) {
            roots.push_back(ea);
        } else if ((da < 0) != (db < 0)) {
            double a = ea, b = eb, fa = da;
            while (b - a > 1e-10) {
                const double mid = 0.5 * (a + b);
                const double fm = D(mid);
                if ((fm < 0) == (fa < 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        ea = eb;
        da = db;
    }
    return roots;
}

std::vector<double> shoot_bound_states(const OracleProblem& problem, const OracleOptions& opts) {
    const PreparedProblem p(problem, opts);
    const double lo = *std::min_element(p.u().begin(), p.u().end());
    return shoot_bound_states(problem, lo, problem.long_range ? -0.01 : -1e-3, opts);
}

std::pair<Cplx, Cplx> base_wave(const PotentialSpec& spec, double k, double x, const OracleOptions& opts) {
    if (!(k > 0.0)) throw DomainError("base_wave requires k > 0");
    const double energy = k * k;
    const double h = opts.step, h2 = h * h;
    const auto U = [&](double xx) { return potential_value(spec, xx) - energy; };
    std::vector<Cplx> y;
    double x0 = x, step = h;  // grid x0 + j * step, y[j]

    switch (family_group(spec.family()) == Group::A ? Geometry::FullLine
            : spec.family() == Family::Morse         ? Geometry::Wall
                                                     : Geometry::HalfLine) {
        case Geometry::FullLine: {
            const double right = find_flat_radius([&](double xx) { return potential_value(spec, xx); }, opts.radius, 1.0,
                                                  potential_right_asymptote(spec), opts);
            const int top = static_cast<int>(std::ceil((std::max(right, x + 1.0) - x) / h));
            const Cplx kp = wave_number(energy, potential_right_asymptote(spec));
            // index j + 2 holds grid point x + j h, j = -2..top
            y.assign(static_cast<std::size_t>(top) + 3, 0.0);
            const auto X = [&](int j) { return x + j * h; };
            y[static_cast<std::size_t>(top + 2)] = std::exp(kI * kp * X(top));
            y[static_cast<std::size_t>(top + 1)] = std::exp(kI * kp * X(top - 1));
            for (int j = top - 1; j > -2; --j)
                y[static_cast<std::size_t>(j + 1)] =
                    numerov_next(y[static_cast<std::size_t>(j + 3)], y[static_cast<std::size_t>(j + 2)], U(X(j + 1)),
                                 U(X(j)), U(X(j - 1)), h2);
            break;
        }
        case Geometry::Wall: {
            double left = std::min(0.0, x - 1.0);
            while (potential_value(spec, left) < kWallHeight) left -= 0.25;
            const int cnt = static_cast<int>(std::ceil((x - left) / h));
            x0 = x - cnt * h;
            const auto X = [&](int j) { return x0 + j * h; };
            y.assign(static_cast<std::size_t>(cnt) + 3, 0.0);
            y[1] = 1.0;
            for (int j = 1; j + 1 <= cnt + 2; ++j)
                y[static_cast<std::size_t>(j + 1)] =
                    numerov_next(y[static_cast<std::size_t>(j - 1)], y[static_cast<std::size_t>(j)], U(X(j - 1)),
                                 U(X(j)), U(X(j + 1)), h2);
            // shift so that index 2 is x
            y.erase(y.begin(), y.begin() + (cnt - 2));
            break;
        }
        case Geometry::HalfLine: {
            if (!(x > 0.0)) throw DomainError("half-line base wave needs x > 0");
            const double u0 = std::log(kHalfLineStart), ux = std::log(x);
            const int cnt = std::max(50, static_cast<int>(std::ceil((ux - u0) / opts.step)));
            const double lh = (ux - u0) / cnt;
            const double lh2 = lh * lh;
            const auto F = [&](double uu) {
                const double xx = std::exp(uu);
                return 0.25 + xx * xx * (potential_value(spec, xx) - energy);
            };
            const double c = kHalfLineStart * kHalfLineStart * potential_value(spec, kHalfLineStart);
            const double s = 0.5 + std::sqrt(std::max(0.0, 0.25 + c));
            std::vector<Cplx> z(static_cast<std::size_t>(cnt) + 3);
            z[0] = 1.0;
            z[1] = std::exp((s - 0.5) * lh);
            for (int j = 1; j + 1 <= cnt + 2; ++j)
                z[static_cast<std::size_t>(j + 1)] = numerov_next(z[static_cast<std::size_t>(j - 1)], z[static_cast<std::size_t>(j)],
                                                                  F(u0 + (j - 1) * lh), F(u0 + j * lh), F(u0 + (j + 1) * lh), lh2);
            const Cplx zc = z[static_cast<std::size_t>(cnt)];
            const Cplx dz = (-z[static_cast<std::size_t>(cnt + 2)] + 8.0 * z[static_cast<std::size_t>(cnt + 1)] -
                             8.0 * z[static_cast<std::size_t>(cnt - 1)] + z[static_cast<std::size_t>(cnt - 2)]) /
                            (12.0 * lh);
            const double sx = std::sqrt(x);
            return {sx * zc, sx * (dz + 0.5 * zc) / x};
        }
    }
    (void)step;
    (void)x0;
    const Cplx psi = y[2];
    const Cplx dpsi = (-y[4] + 8.0 * y[3] - 8.0 * y[1] + y[0]) / (12.0 * h);
    return {psi, dpsi};
}

Cplx deformed_scattering_wave(const Scenario& sc, double k, double x, const OracleOptions& opts) {
    const auto [psi, dpsi] = base_wave(sc.spec, k, x, opts);
    return deformed_wave(sc, k * k, x, psi, dpsi, 0).value();
}

}  // namespace scatter
