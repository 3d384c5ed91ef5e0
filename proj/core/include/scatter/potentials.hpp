#pragma once

// The seven shape-invariant families: potentials, eigen-data, groundstate
// exponents and the original (undeformed) scattering amplitudes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scatter/errors.hpp"
#include "scatter/jet.hpp"

namespace scatter {

enum class Family { RosenMorse, Soliton, HyperbolicSymTop, Morse, Eckart, HyperbolicPT, Coulomb };

/// A: waves reach both infinities. B: half-line (or Morse wall). C: Coulomb.
enum class Group { A, B, C };

/// Discrete parameter symmetries of the potentials.
///   H  : h -> -h-1 (with mu -> -mu for hst and Morse)
///   G  : g -> 1-g
///   GH : both (hyperbolic Poschl-Teller only)
enum class Twist { H, G, GH };

inline constexpr Family kAllFamilies[] = {Family::RosenMorse, Family::Soliton,
                                          Family::HyperbolicSymTop, Family::Morse,
                                          Family::Eckart, Family::HyperbolicPT,
                                          Family::Coulomb};

std::string_view family_name(Family f);
/// Accepts the short names used on the command line (rm, soliton, hst, morse,
/// eckart, hpt, coulomb) and the full names.
std::optional<Family> parse_family(std::string_view name);
Group family_group(Family f);
/// Eckart, hyperbolic PT and Coulomb live on x > 0.
bool on_half_line(Family f);
std::string_view twist_name(Twist t);
std::optional<Twist> parse_twist(std::string_view name);
/// Twists meaningful for a family; the first is the default.
std::vector<Twist> family_twists(Family f);

/// Named parameter tuple. Unused entries stay zero.
struct Params {
    double h = 0.0;
    double mu = 0.0;
    double g = 0.0;
};

class PotentialSpec {
public:
    /// Validated constructor; throws ParameterRangeError naming the violated
    /// constraint.
    static PotentialSpec make(Family family, Params params);
    /// No range check. Used for twisted and shifted parameter sets.
    static PotentialSpec unchecked(Family family, Params params);

    Family family() const { return family_; }
    Group group() const { return family_group(family_); }
    const Params& params() const { return params_; }
    double h() const { return params_.h; }
    double mu() const { return params_.mu; }
    double g() const { return params_.g; }

    /// The shift delta of the family.
    Params shift() const;
    /// lambda + steps * delta (unchecked).
    PotentialSpec shifted(int steps = 1) const;
    /// Parameters after a discrete symmetry (unchecked).
    PotentialSpec twisted(Twist t) const;
    bool valid() const;

private:
    PotentialSpec(Family f, Params p) : family_(f), params_(p) {}
    Family family_;
    Params params_;
};

/// Human-readable range constraint of a family.
std::string_view parameter_constraint(Family f);
/// Empty string when the parameters are admissible, else the violated constraint.
std::string check_parameters(Family f, const Params& p);

/// U(x) as a jet. Throws DomainError for x <= 0 on half-line families.
Jet potential_value(const PotentialSpec& spec, const Jet& x);
double potential_value(const PotentialSpec& spec, double x);
/// U(+inf): 4 mu for Rosen-Morse, 0 otherwise.
double potential_right_asymptote(const PotentialSpec& spec);

/// Greatest integer strictly below a.
int bracket_strict(double a);

/// Highest bound-state index; absent for Coulomb (infinitely many levels).
std::optional<int> nmax(const PotentialSpec& spec);

struct EigenState {
    int n = 0;
    double energy = 0.0;
    /// Jacobi/Laguerre exponents where the family uses them.
    std::optional<double> alpha;
    std::optional<double> beta;
};

/// Energy formula E_n of the family, continued to any real n.
double energy_formula(const PotentialSpec& spec, double n);
EigenState eigen_state(const PotentialSpec& spec, int n);

/// exp(log_prefactor) * poly. Keeping the exponential factor in log form
/// avoids overflow at large |x|.
struct FactoredJet {
    Jet log_prefactor;
    Jet poly;
    Jet value() const { return exp(log_prefactor) * poly; }
};

/// The eigenfunction closed form at degree n, without any range check on n
/// or on the parameters. Seeds reuse it at twisted parameters or n > nmax.
FactoredJet eigen_form(const PotentialSpec& spec, int n, const Jet& x);

/// phi_n(x). For hst the complex intermediates must combine to a real value;
/// throws DomainError otherwise.
Jet eigenfunction(const PotentialSpec& spec, int n, const Jet& x);

/// Asymptotic exponents of eigen_form(spec, n, .): phi ~ x^power e^{x plus}
/// at +inf and e^{x minus} at -inf (group A only). power is nonzero only for
/// Coulomb.
struct Exponents {
    double plus = 0.0;
    std::optional<double> minus;
    double power = 0.0;
};
Exponents eigen_form_exponents(const PotentialSpec& spec, int n);

struct GroundstateExponents {
    double w_plus = 0.0;
    std::optional<double> w_minus;
};
GroundstateExponents groundstate_exponents(const PotentialSpec& spec);

/// k' = sqrt(k^2 - 4 mu) on the sheet continuous with k' -> k as mu -> 0:
/// k' = k sqrt(1 - 4 mu / k^2) with the principal root. Real k below the
/// threshold gives k' = +i sqrt(4 mu - k^2); k = i kappa gives i sqrt(kappa^2+4mu).
Cplx kprime(double mu, Cplx k);

struct OriginalAmplitudes {
    std::optional<Cplx> t;
    Cplx r;
    std::optional<Cplx> kprime;
    /// Soliton only: set when |h - round(h)| < 1e-6.
    bool near_reflectionless = false;
};

/// Amplitudes for real k > 0. Throws BranchError at k = 0.
OriginalAmplitudes original_amplitudes(const PotentialSpec& spec, double k);
/// Same closed forms at complex k (diagnostics and pole probing). Gamma
/// poles in numerators raise PoleAtNonpositiveInteger.
OriginalAmplitudes amplitudes_at(const PotentialSpec& spec, Cplx k);

struct FluxCoefficients {
    double T = 0.0;
    double R = 0.0;
};
/// Group A only: T = Re(k'/k)|t|^2, R = |r|^2.
FluxCoefficients flux_coefficients(const PotentialSpec& spec, double k);

}  // namespace scatter
