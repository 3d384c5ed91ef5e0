#include "scatter/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace scatter {

namespace {

bool on_boundary(double v, double b) { return std::abs(v - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

[[noreturn]] void fail(SeedError::Reason reason, const PotentialSpec& spec, int v, const std::string& why) {
    std::ostringstream os;
    os << family_name(spec.family()) << " seed v=" << v << ": " << why;
    throw SeedError(reason, os.str());
}

void reject_boundaries(const PotentialSpec& spec, int v, const std::vector<double>& bounds) {
    for (double b : bounds)
        if (on_boundary(v, b)) {
            std::ostringstream os;
            os << "degree sits on the classification boundary " << b;
            fail(SeedError::Reason::ClassificationBoundary, spec, v, os.str());
        }
}

SeedSolution assemble(const PotentialSpec& parent, const PotentialSpec& form, int v, SeedKind kind,
                      SeedOrigin origin, std::optional<Twist> twist) {
    const Exponents e = eigen_form_exponents(form, v);
    SeedSolution s{.kind = kind,
                   .degree = v,
                   .energy = energy_formula(form, v),
                   .delta_plus = e.plus,
                   .delta_minus = parent.group() == Group::A ? e.minus : std::nullopt,
                   .power = e.power,
                   .origin = origin,
                   .twist = twist,
                   .parent = parent,
                   .form_spec = form};
    const double e0 = energy_formula(parent, 0);
    if (!(s.energy < e0)) {
        std::ostringstream os;
        os << "energy " << s.energy << " is not below E_0 = " << e0;
        fail(SeedError::Reason::AboveGroundState, parent, v, os.str());
    }
    return s;
}

}  // namespace

std::string_view seed_kind_name(SeedKind k) {
    switch (k) {
        case SeedKind::VirtualI: return "virtual-I";
        case SeedKind::VirtualII: return "virtual-II";
        case SeedKind::PseudoVirtual: return "pseudo-virtual";
        case SeedKind::OvershootPseudo: return "overshoot-pseudo";
    }
    return "?";
}

SeedSolution make_twist_seed(const PotentialSpec& spec, int v, std::optional<Twist> twist) {
    if (v < 0) throw IndexError("seed degree must be non-negative");
    const auto allowed = family_twists(spec.family());
    const Twist t = twist.value_or(allowed.front());
    if (std::find(allowed.begin(), allowed.end(), t) == allowed.end())
        throw DomainError(std::string(family_name(spec.family())) + " has no twist " + std::string(twist_name(t)));

    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    const double vd = v;
    SeedKind kind = SeedKind::PseudoVirtual;
    switch (spec.family()) {
        case Family::RosenMorse:
        case Family::Soliton:
        case Family::HyperbolicSymTop:
        case Family::Morse: break;
        case Family::Eckart: {
            const double upper = mu / g + g - 1.0;
            reject_boundaries(spec, v, {g - 1.0, 2.0 * g - 1.0, upper});
            if (vd < g - 1.0) kind = SeedKind::PseudoVirtual;
            else if (vd < 2.0 * g - 1.0) kind = SeedKind::VirtualII;
            else if (vd > upper) kind = SeedKind::PseudoVirtual;
            else fail(SeedError::Reason::Unclassified, spec, v, "degree lies between the virtual II and pseudo virtual ranges");
            break;
        }
        case Family::HyperbolicPT:
            if (t == Twist::H) {
                kind = SeedKind::VirtualI;
            } else if (t == Twist::G) {
                reject_boundaries(spec, v, {g - 0.5, h - 0.5});
                if (vd < g - 0.5) kind = SeedKind::VirtualII;
                else if (vd > h - 0.5) kind = SeedKind::PseudoVirtual;
                else fail(SeedError::Reason::Unclassified, spec, v, "g-1/2 < v < h-1/2 is not classified");
            }
            break;
        case Family::Coulomb:
            reject_boundaries(spec, v, {g - 1.0, 2.0 * g - 1.0});
            if (vd < g - 1.0) kind = SeedKind::PseudoVirtual;
            else if (vd < 2.0 * g - 1.0) kind = SeedKind::VirtualII;
            else fail(SeedError::Reason::Unclassified, spec, v, "v > 2g-1 is not classified");
            break;
    }
    return assemble(spec, spec.twisted(t), v, kind, SeedOrigin::Twist, t);
}

std::vector<DegreeWindow> overshoot_windows(const PotentialSpec& spec) {
    const double h = spec.h(), mu = spec.mu(), g = spec.g();
    switch (spec.family()) {
        case Family::RosenMorse:
            return {{SeedKind::VirtualII, h - mu / h, h},
                    {SeedKind::VirtualI, h, h + mu / h},
                    {SeedKind::OvershootPseudo, 2.0 * h, std::nullopt}};
        case Family::Soliton:
        case Family::HyperbolicSymTop: return {{SeedKind::OvershootPseudo, 2.0 * h, std::nullopt}};
        case Family::Morse: return {{SeedKind::VirtualI, 2.0 * h, std::nullopt}};
        case Family::Eckart: return {{SeedKind::VirtualI, std::max(mu / g - g, 2.0 * g - 1.0), std::nullopt}};
        case Family::HyperbolicPT: return {{SeedKind::VirtualI, h - g, h + 0.5}};
        case Family::Coulomb: return {};
    }
    return {};
}

SeedSolution make_overshoot_seed(const PotentialSpec& spec, int v) {
    const auto top = nmax(spec);
    if (!top) fail(SeedError::Reason::EmptyRange, spec, v, "no overshoot eigenfunctions (infinite spectrum)");
    if (v <= *top) fail(SeedError::Reason::EmptyRange, spec, v, "overshoot degree must exceed nmax");

    const auto windows = overshoot_windows(spec);
    std::vector<double> bounds;
    for (const auto& w : windows) {
        bounds.push_back(w.lo);
        if (w.hi) bounds.push_back(*w.hi);
    }
    reject_boundaries(spec, v, bounds);
    const double vd = v;
    std::optional<SeedKind> kind;
    for (const auto& w : windows)
        if (vd > w.lo && (!w.hi || vd < *w.hi)) kind = w.kind;
    if (!kind) fail(SeedError::Reason::EmptyRange, spec, v, "degree lies in no overshoot classification range");
    return assemble(spec, spec, v, *kind, SeedOrigin::Overshoot, std::nullopt);
}

FactoredJet seed_form(const SeedSolution& seed, const Jet& x) {
    FactoredJet f = eigen_form(seed.form_spec, seed.degree, x);
    if (seed.form_spec.family() == Family::HyperbolicSymTop) {
        for (int k = 0; k <= f.poly.order(); ++k) {
            const Cplx c = f.poly.taylor(k);
            if (std::abs(c.imag()) > 1e-8 * std::max(1.0, std::abs(c)))
                throw DomainError("hst seed has a non-negligible imaginary part");
            f.poly.taylor(k) = c.real();
        }
    }
    return f;
}

Jet seed_value(const SeedSolution& seed, const Jet& x) { return seed_form(seed, x).value(); }

bool sign_pattern_ok(const SeedSolution& seed) {
    const double p = seed.delta_plus;
    const auto& m = seed.delta_minus;
    switch (seed.kind) {
        case SeedKind::VirtualI: return p > 0 && (!m || *m > 0);
        case SeedKind::VirtualII: return p < 0 && (!m || *m < 0);
        case SeedKind::PseudoVirtual:
        case SeedKind::OvershootPseudo: return p > 0 && (!m || *m < 0);
    }
    return false;
}

double asymptotic_exponent_check(const SeedSolution& seed, Side side) {
    if (side == Side::Minus && seed.parent.group() != Group::A)
        throw DomainError("the minus side exists for full-line families only");
    const double x0 = side == Side::Plus ? 12.0 : -12.0;
    const FactoredJet f = seed_form(seed, Jet::variable(x0, 1));
    const Cplx d = f.log_prefactor.derivative(1) + f.poly.derivative(1) / f.poly.value();
    return d.real() - seed.power / x0;
}

double relative_residual(const PotentialSpec& spec, double energy, const FactoredJet& f, double x) {
    const Jet xj = Jet::variable(x, 2);
    const Jet u = potential_value(spec, xj);
    // f = e^L P, so f''/e^L = P'' + 2 L' P' + (L'' + L'^2) P
    const Cplx l1 = f.log_prefactor.derivative(1), l2 = f.log_prefactor.derivative(2);
    const Cplx p0 = f.poly.derivative(0), p1 = f.poly.derivative(1), p2 = f.poly.derivative(2);
    const Cplx f2 = p2 + 2.0 * l1 * p1 + (l2 + l1 * l1) * p0;
    const Cplx pot = (u.value() - energy) * p0;
    const double scale = std::abs(f2) + std::abs(pot);
    if (scale == 0.0) return 0.0;
    return std::abs(pot - f2) / scale;
}

double seed_residual(const SeedSolution& seed, double x) {
    return relative_residual(seed.parent, seed.energy, seed_form(seed, Jet::variable(x, 2)), x);
}

}  // namespace scatter
