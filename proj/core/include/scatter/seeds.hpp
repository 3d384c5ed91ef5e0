#pragma once

// Polynomial-type seed solutions: virtual and pseudo virtual states obtained
// from the eigenfunction forms at twisted parameters, and overshoot
// eigenfunctions (degree above nmax).

#include <optional>
#include <string_view>
#include <vector>

#include "scatter/potentials.hpp"

namespace scatter {

enum class SeedKind { VirtualI, VirtualII, PseudoVirtual, OvershootPseudo };
enum class SeedOrigin { Twist, Overshoot };
enum class Side { Plus, Minus };

std::string_view seed_kind_name(SeedKind k);

struct SeedSolution {
    SeedKind kind = SeedKind::PseudoVirtual;
    int degree = 0;
    double energy = 0.0;
    double delta_plus = 0.0;
    /// Absent on the half line and for Morse.
    std::optional<double> delta_minus;
    /// Coulomb only: seed ~ x^power e^{x delta_plus} at infinity.
    double power = 0.0;
    SeedOrigin origin = SeedOrigin::Twist;
    std::optional<Twist> twist;
    /// The potential the seed belongs to.
    PotentialSpec parent;
    /// Parameters the eigenfunction form is evaluated at.
    PotentialSpec form_spec;
};

/// Seed from the eigenfunction form at twisted parameters. With no twist
/// given, the family's first twist is used. Throws SeedError for boundary
/// degrees, degrees in an unclassified gap, or energies above E_0.
SeedSolution make_twist_seed(const PotentialSpec& spec, int v, std::optional<Twist> twist = std::nullopt);

/// Open degree interval (lo, hi) of one overshoot classification; hi absent
/// means unbounded. Degrees must also exceed nmax.
struct DegreeWindow {
    SeedKind kind;
    double lo;
    std::optional<double> hi;
};
std::vector<DegreeWindow> overshoot_windows(const PotentialSpec& spec);

/// Overshoot eigenfunction of degree v > nmax. Throws SeedError(EmptyRange)
/// when v falls in no classification range.
SeedSolution make_overshoot_seed(const PotentialSpec& spec, int v);

/// Factored seed (log prefactor, polynomial).
FactoredJet seed_form(const SeedSolution& seed, const Jet& x);
Jet seed_value(const SeedSolution& seed, const Jet& x);

/// True when (delta_plus, delta_minus) has the sign pattern of the kind.
bool sign_pattern_ok(const SeedSolution& seed);

/// Numerical log-derivative at x = +12 (plus) or -12 (minus), with the
/// Coulomb power factor removed.
double asymptotic_exponent_check(const SeedSolution& seed, Side side);

/// |(-d^2 + U - E) f| relative to |f''| + |(U - E) f| at x, for f the
/// factored function; used as the Schroedinger residual of seeds and of
/// eigenfunctions alike.
double relative_residual(const PotentialSpec& spec, double energy, const FactoredJet& f, double x);
double seed_residual(const SeedSolution& seed, double x);

}  // namespace scatter
