#include "scatter/potentials.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "scatter/specfun.hpp"

namespace scatter {

namespace {

constexpr Cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

void require_positive_x(const PotentialSpec& spec, const Jet& x) {
    if (on_half_line(spec.family()) && !(x.value().real() > 0.0))
        throw DomainError(std::string(family_name(spec.family())) + " is defined for x > 0 only");
}

Jet sech2(const Jet& x) {
    const Jet c = cosh(x);
    return Cplx(1.0) / (c * c);
}

Jet csch2(const Jet& x) {
    const Jet s = sinh(x);
    return Cplx(1.0) / (s * s);
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::RosenMorse: return "rm";
        case Family::Soliton: return "soliton";
        case Family::HyperbolicSymTop: return "hst";
        case Family::Morse: return "morse";
        case Family::Eckart: return "eckart";
        case Family::HyperbolicPT: return "hpt";
        case Family::Coulomb: return "coulomb";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies)
        if (family_name(f) == name) return f;
    if (name == "rosen-morse" || name == "RosenMorse") return Family::RosenMorse;
    if (name == "Soliton") return Family::Soliton;
    if (name == "hyperbolic-symmetric-top" || name == "HyperbolicSymTop") return Family::HyperbolicSymTop;
    if (name == "Morse") return Family::Morse;
    if (name == "Eckart") return Family::Eckart;
    if (name == "hyperbolic-pt" || name == "HyperbolicPT") return Family::HyperbolicPT;
    if (name == "Coulomb") return Family::Coulomb;
    return std::nullopt;
}

Group family_group(Family f) {
    switch (f) {
        case Family::RosenMorse:
        case Family::Soliton:
        case Family::HyperbolicSymTop: return Group::A;
        case Family::Morse:
        case Family::Eckart:
        case Family::HyperbolicPT: return Group::B;
        case Family::Coulomb: return Group::C;
    }
    return Group::A;
}

bool on_half_line(Family f) {
    return f == Family::Eckart || f == Family::HyperbolicPT || f == Family::Coulomb;
}

std::string_view twist_name(Twist t) {
    switch (t) {
        case Twist::H: return "h";
        case Twist::G: return "g";
        case Twist::GH: return "gh";
    }
    return "?";
}

std::optional<Twist> parse_twist(std::string_view name) {
    if (name == "h") return Twist::H;
    if (name == "g") return Twist::G;
    if (name == "gh") return Twist::GH;
    return std::nullopt;
}

std::vector<Twist> family_twists(Family f) {
    switch (f) {
        case Family::Eckart:
        case Family::Coulomb: return {Twist::G};
        case Family::HyperbolicPT: return {Twist::H, Twist::G, Twist::GH};
        default: return {Twist::H};
    }
}

std::string_view parameter_constraint(Family f) {
    switch (f) {
        case Family::RosenMorse: return "h(h-1) > mu > 0";
        case Family::Soliton: return "h > 1/2";
        case Family::HyperbolicSymTop: return "h > 0, mu > 0";
        case Family::Morse: return "h > 1/2, mu > 0";
        case Family::Eckart: return "sqrt(mu) > g > 3/2";
        case Family::HyperbolicPT: return "h > g > 1/2";
        case Family::Coulomb: return "g > 3/2";
    }
    return "";
}

std::string check_parameters(Family f, const Params& p) {
    bool ok = true;
    switch (f) {
        case Family::RosenMorse: ok = p.h * (p.h - 1.0) > p.mu && p.mu > 0.0; break;
        case Family::Soliton: ok = p.h > 0.5; break;
        case Family::HyperbolicSymTop: ok = p.h > 0.0 && p.mu > 0.0; break;
        case Family::Morse: ok = p.h > 0.5 && p.mu > 0.0; break;
        case Family::Eckart: ok = p.mu > 0.0 && std::sqrt(p.mu) > p.g && p.g > 1.5; break;
        case Family::HyperbolicPT: ok = p.h > p.g && p.g > 0.5; break;
        case Family::Coulomb: ok = p.g > 1.5; break;
    }
    if (ok) return {};
    return std::string(family_name(f)) + ": parameter range violated, requires " +
           std::string(parameter_constraint(f));
}

PotentialSpec PotentialSpec::make(Family family, Params params) {
    const std::string err = check_parameters(family, params);
    if (!err.empty()) throw ParameterRangeError(err);
    return {family, params};
}

PotentialSpec PotentialSpec::unchecked(Family family, Params params) { return {family, params}; }

bool PotentialSpec::valid() const { return check_parameters(family_, params_).empty(); }

Params PotentialSpec::shift() const {
    switch (family_) {
        case Family::RosenMorse:
        case Family::Soliton:
        case Family::HyperbolicSymTop:
        case Family::Morse: return {-1.0, 0.0, 0.0};
        case Family::Eckart:
        case Family::Coulomb: return {0.0, 0.0, 1.0};
        case Family::HyperbolicPT: return {-1.0, 0.0, 1.0};
    }
    return {};
}

PotentialSpec PotentialSpec::shifted(int steps) const {
    const Params d = shift();
    return {family_, {params_.h + steps * d.h, params_.mu + steps * d.mu, params_.g + steps * d.g}};
}

PotentialSpec PotentialSpec::twisted(Twist t) const {
    Params p = params_;
    const bool flip_mu = family_ == Family::HyperbolicSymTop || family_ == Family::Morse;
    if (t == Twist::H || t == Twist::GH) {
        p.h = -p.h - 1.0;
        if (flip_mu) p.mu = -p.mu;
    }
    if (t == Twist::G || t == Twist::GH) p.g = 1.0 - p.g;
    return {family_, p};
}

Jet potential_value(const PotentialSpec& spec, const Jet& x) {
    require_positive_x(spec, x);
    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    switch (spec.family()) {
        case Family::RosenMorse:
            return sech2(x) * (-h * (h + 1.0)) + (tanh(x) + Cplx(1.0)) * (2.0 * mu);
        case Family::Soliton: return sech2(x) * (-h * (h + 1.0));
        case Family::HyperbolicSymTop:
            return sech2(x) * ((sinh(x) * (mu * (2.0 * h + 1.0))) + (-h * (h + 1.0) + mu * mu));
        case Family::Morse:
            return exp(x * Cplx(-2.0)) * (mu * mu) - exp(-x) * (mu * (2.0 * h + 1.0));
        case Family::Eckart: {
            // coth x - 1 = 2 / (e^{2x} - 1)
            Jet e2 = exp(x * Cplx(2.0)) - Cplx(1.0);
            e2.taylor(0) = std::expm1(2.0 * x.value().real());
            return csch2(x) * (g * (g - 1.0)) - (Cplx(2.0) / e2) * (2.0 * mu);
        }
        case Family::HyperbolicPT: return csch2(x) * (g * (g - 1.0)) - sech2(x) * (h * (h + 1.0));
        case Family::Coulomb: return (Cplx(g * (g - 1.0)) / (x * x)) - (Cplx(2.0) / x);
    }
    return Jet(x.order(), 0.0);
}

double potential_value(const PotentialSpec& spec, double x) {
    return potential_value(spec, Jet::variable(x, 0)).value().real();
}

double potential_right_asymptote(const PotentialSpec& spec) {
    return spec.family() == Family::RosenMorse ? 4.0 * spec.mu() : 0.0;
}

int bracket_strict(double a) {
    const double f = std::floor(a);
    return static_cast<int>(f == a ? f - 1.0 : f);
}

std::optional<int> nmax(const PotentialSpec& spec) {
    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    switch (spec.family()) {
        case Family::RosenMorse: return bracket_strict(h - std::sqrt(mu));
        case Family::Soliton:
        case Family::HyperbolicSymTop:
        case Family::Morse: return bracket_strict(h);
        case Family::Eckart: return bracket_strict(std::sqrt(mu) - g);
        case Family::HyperbolicPT: return bracket_strict((h - g) / 2.0);
        case Family::Coulomb: return std::nullopt;
    }
    return std::nullopt;
}

double energy_formula(const PotentialSpec& spec, double n) {
    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    switch (spec.family()) {
        case Family::RosenMorse: {
            const double a = h - n;
            const double b = a - mu / a;
            return -b * b;
        }
        case Family::Soliton:
        case Family::HyperbolicSymTop:
        case Family::Morse: return -(h - n) * (h - n);
        case Family::Eckart: {
            const double a = g + n;
            const double b = a - mu / a;
            return -b * b;
        }
        case Family::HyperbolicPT: return -(h - g - 2.0 * n) * (h - g - 2.0 * n);
        case Family::Coulomb: return -1.0 / ((g + n) * (g + n));
    }
    return 0.0;
}

EigenState eigen_state(const PotentialSpec& spec, int n) {
    const auto top = nmax(spec);
    if (n < 0 || (top && n > *top)) {
        std::ostringstream os;
        os << family_name(spec.family()) << ": eigenstate index " << n << " outside 0.."
           << (top ? std::to_string(*top) : std::string("inf"));
        throw IndexError(os.str());
    }
    EigenState s;
    s.n = n;
    s.energy = energy_formula(spec, n);
    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    switch (spec.family()) {
        case Family::RosenMorse: {
            const double a = h - n;
            s.alpha = a + mu / a;
            s.beta = a - mu / a;
            break;
        }
        case Family::Soliton: s.alpha = s.beta = h - n; break;
        case Family::Eckart: {
            const double a = g + n;
            s.alpha = -a + mu / a;
            s.beta = -a - mu / a;
            break;
        }
        case Family::HyperbolicPT:
            s.alpha = g - 0.5;
            s.beta = -h - 0.5;
            break;
        case Family::Morse: s.alpha = 2.0 * h - 2.0 * n; break;
        case Family::Coulomb: s.alpha = 2.0 * g - 1.0; break;
        case Family::HyperbolicSymTop: break;  // complex exponents
    }
    return s;
}

FactoredJet eigen_form(const PotentialSpec& spec, int n, const Jet& x) {
    require_positive_x(spec, x);
    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    const double nd = n;
    switch (spec.family()) {
        case Family::RosenMorse: {
            const double a = h - nd;
            return {x * Cplx(-mu / a) - log_cosh(x) * a,
                    jacobi_P(n, a + mu / a, a - mu / a, tanh(x))};
        }
        case Family::Soliton:
            return {log_cosh(x) * Cplx(-(h - nd)), jacobi_P(n, h - nd, h - nd, tanh(x))};
        case Family::HyperbolicSymTop: {
            const Cplx alpha{-h - 0.5, -mu};
            const Cplx beta{-h - 0.5, mu};
            const Cplx phase = std::pow(-kI, n);
            return {atan(sinh(x)) * Cplx(-mu) - log_cosh(x) * h,
                    jacobi_P(n, alpha, beta, sinh(x) * kI) * phase};
        }
        case Family::Morse: {
            const Jet em = exp(-x);
            const double scale = std::pow(2.0 * mu, -nd);  // real for negative mu too
            return {x * Cplx(-(h - nd)) - em * mu, laguerre_L(n, 2.0 * h - 2.0 * nd, em * (2.0 * mu)) * Cplx(scale)};
        }
        case Family::Eckart: {
            const double a = g + nd;
            return {x * Cplx(-mu / a) + log_sinh(x) * a, jacobi_P(n, -a + mu / a, -a - mu / a, coth(x))};
        }
        case Family::HyperbolicPT:
            return {log_sinh(x) * g - log_cosh(x) * h,
                    jacobi_P(n, g - 0.5, -h - 0.5, cosh(x * Cplx(2.0)))};
        case Family::Coulomb: {
            const double a = g + nd;
            return {x * Cplx(-1.0 / a) + log(x) * g, laguerre_L(n, 2.0 * g - 1.0, x * (2.0 / a))};
        }
    }
    return {Jet(x.order(), 0.0), Jet(x.order(), 0.0)};
}

Jet eigenfunction(const PotentialSpec& spec, int n, const Jet& x) {
    (void)eigen_state(spec, n);
    FactoredJet f = eigen_form(spec, n, x);
    if (spec.family() == Family::HyperbolicSymTop) {
        for (int k = 0; k <= f.poly.order(); ++k) {
            const Cplx c = f.poly.taylor(k);
            if (std::abs(c.imag()) > 1e-10 * std::max(1.0, std::abs(c)))
                throw DomainError("hst eigenfunction has a non-negligible imaginary part");
            f.poly.taylor(k) = c.real();
        }
    }
    return f.value();
}

Exponents eigen_form_exponents(const PotentialSpec& spec, int n) {
    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    const double nd = n;
    Exponents e;
    switch (spec.family()) {
        case Family::RosenMorse: {
            const double a = h - nd;
            e.plus = -(a + mu / a);
            e.minus = a - mu / a;
            break;
        }
        case Family::Soliton:
        case Family::HyperbolicSymTop:
            e.plus = nd - h;
            e.minus = h - nd;
            break;
        case Family::Morse: e.plus = nd - h; break;
        case Family::Eckart: {
            const double a = g + nd;
            e.plus = a - mu / a;
            break;
        }
        case Family::HyperbolicPT: e.plus = g - h + 2.0 * nd; break;
        case Family::Coulomb:
            e.plus = -1.0 / (g + nd);
            e.power = g + nd;
            break;
    }
    return e;
}

GroundstateExponents groundstate_exponents(const PotentialSpec& spec) {
    const Exponents e = eigen_form_exponents(spec, 0);
    GroundstateExponents w;
    w.w_plus = -e.plus;
    if (e.minus) w.w_minus = -*e.minus;
    return w;
}

Cplx kprime(double mu, Cplx k) {
    if (mu == 0.0) return k;
    if (k == Cplx(0.0, 0.0)) return {0.0, 2.0 * std::sqrt(mu)};
    Cplx arg = 1.0 - 4.0 * mu / (k * k);
    // On the real k axis below threshold arg is negative real; take the +i root.
    if (arg.imag() == 0.0 && arg.real() < 0.0) arg = Cplx(arg.real(), 0.0);
    return k * std::sqrt(arg);
}

OriginalAmplitudes amplitudes_at(const PotentialSpec& spec, Cplx k) {
    if (k == Cplx(0.0, 0.0)) throw BranchError("k = 0 is the boundary of the continuum");
    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    const auto G = [](Cplx z) { return complex_gamma(z); };
    const auto RG = [](Cplx z) { return reciprocal_gamma(z); };
    const Cplx ik = kI * k;
    OriginalAmplitudes out;
    switch (spec.family()) {
        case Family::RosenMorse: {
            const Cplx kp = kprime(mu, k);
            const Cplx ikp = kI * kp;
            const Cplx common = G(-h - ik / 2.0 - ikp / 2.0) * G(1.0 + h - ik / 2.0 - ikp / 2.0);
            out.kprime = kp;
            out.t = common * RG(-ik) * RG(1.0 - ikp);
            out.r = G(ik) * common * RG(-ik) * RG(-h + ik / 2.0 - ikp / 2.0) *
                    RG(1.0 + h + ik / 2.0 - ikp / 2.0);
            break;
        }
        case Family::Soliton: {
            const Cplx common = G(-h - ik) * G(1.0 + h - ik);
            out.kprime = k;
            out.t = common * RG(-ik) * RG(1.0 - ik);
            out.r = G(ik) * common * RG(-ik) * RG(-h) * RG(1.0 + h);
            out.near_reflectionless = std::abs(h - std::round(h)) < 1e-6;
            break;
        }
        case Family::HyperbolicSymTop: {
            const Cplx rg_half = RG(0.5 - ik);
            const Cplx t = G(-h - ik) * G(1.0 + h - ik) * G(0.5 + kI * mu - ik) * G(0.5 - kI * mu - ik) *
                           RG(-ik) * RG(1.0 - ik) * rg_half * rg_half;
            double sh = 0, ch = 0;
            // cos(pi h), sin(pi h) with exact zeros at (half-)integers
            const Cplx s = sin_pi(Cplx(h, 0.0));
            const Cplx c = sin_pi(Cplx(h + 0.5, 0.0));
            sh = s.real();
            ch = c.real();
            const Cplx bracket = ch * std::sinh(kPi * mu) / std::cosh(kPi * k) +
                                 kI * sh * std::cosh(kPi * mu) / std::sinh(kPi * k);
            out.kprime = k;
            out.t = t;
            out.r = t * bracket;
            break;
        }
        case Family::Morse:
            out.r = std::exp(-2.0 * ik * std::log(2.0 * mu)) * G(2.0 * ik) * G(-h - ik) * RG(-2.0 * ik) *
                    RG(-h + ik);
            break;
        case Family::Eckart: {
            const Cplx kp = kprime(mu, k);
            const Cplx ikp = kI * kp;
            out.kprime = kp;
            out.r = G(ik) * G(g - ik / 2.0 + ikp / 2.0) * G(g - ik / 2.0 - ikp / 2.0) * RG(-ik) *
                    RG(g + ik / 2.0 + ikp / 2.0) * RG(g + ik / 2.0 - ikp / 2.0);
            break;
        }
        case Family::HyperbolicPT:
            out.r = std::exp(-2.0 * ik * std::numbers::ln2) * G(ik) * G((-h + g - ik) / 2.0) *
                    G((1.0 + h + g - ik) / 2.0) * RG(-ik) * RG((-h + g + ik) / 2.0) *
                    RG((1.0 + h + g + ik) / 2.0);
            break;
        case Family::Coulomb:
            out.r = std::exp(-kI * kPi * g) * G(g - kI / k) * RG(g + kI / k);
            break;
    }
    return out;
}

OriginalAmplitudes original_amplitudes(const PotentialSpec& spec, double k) {
    if (k == 0.0) throw BranchError("k = 0 is the boundary of the continuum");
    if (!(k > 0.0)) throw DomainError("original_amplitudes requires k > 0");
    return amplitudes_at(spec, Cplx(k, 0.0));
}

FluxCoefficients flux_coefficients(const PotentialSpec& spec, double k) {
    if (spec.group() != Group::A) throw DomainError("flux coefficients are defined for full-line scattering");
    const OriginalAmplitudes a = original_amplitudes(spec, k);
    const Cplx kp = a.kprime.value_or(k);
    return {(kp / k).real() * std::norm(*a.t), std::norm(a.r)};
}

}  // namespace scatter
