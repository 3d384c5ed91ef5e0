#pragma once

// Deformed transmission and reflection amplitudes, pole/zero catalogues and
// the shape invariance relations of the original amplitudes.

#include <optional>
#include <string>
#include <vector>

#include "scatter/darboux.hpp"

namespace scatter {

struct DeformedAmplitudes {
    std::optional<Cplx> t;
    Cplx r;
    std::optional<Cplx> kprime;
    /// Per-seed multipliers t_D/t and r_D/r (the (-1)^M sign sits in r_sign).
    std::vector<Cplx> t_factors;
    std::vector<Cplx> r_factors;
    double r_sign = 1.0;
    /// RM/Eckart off both axes: the k' sheet is a convention there.
    bool sheet_ambiguous = false;
};

/// Multiplicative deformation of the original amplitudes. Throws PoleHit
/// when k is within 1e-12 of a factor pole.
DeformedAmplitudes deform_amplitudes(const Scenario& sc, Cplx k);

struct InvarianceReport {
    double max_dev_t = 0.0;
    double max_dev_r = 0.0;
    double max_factor_dev = 0.0;
    int points = 0;
};

/// max ||t_D| - |t|| and ||r_D| - |r|| over real k; RM transmission is
/// compared only above threshold.
InvarianceReport invariance_check(const Scenario& sc, const std::vector<double>& ks);

enum class PoleKind { EigenPole, CancelledPole, SpuriousLowerHalf, Zero, QuasinormalMode };
std::string_view pole_kind_name(PoleKind k);

struct PoleZeroRecord {
    Cplx k;
    PoleKind kind = PoleKind::EigenPole;
    /// "family" or "seed <kind> v=<d>".
    std::string provenance;
    std::optional<double> energy;
    /// Numeric limit confirmed the classification.
    bool verified = false;
};

/// max |amplitude| on circles of radius 1e-3 ... 1e-8 around center.
struct PoleProbe {
    std::vector<double> radii;
    std::vector<double> max_abs;
    bool bounded() const;
    bool grows() const;
};
PoleProbe probe_pole(const Scenario& sc, Cplx center);

/// Classifies every factor of the deformation plus the family's own
/// bound-state poles and (hst) quasinormal modes for n = 0..n_cut.
/// Throws UncancelledPole when a virtual seed's upper-half pole survives.
std::vector<PoleZeroRecord> pole_catalog(const Scenario& sc, int n_cut = 5);

struct ShapeInvarianceReport {
    std::optional<double> max_residual_t;
    double max_residual_r = 0.0;
    bool shifted_valid = true;
    int points = 0;
};

/// Residual of t(lambda+delta)(ik+W-) = (ik+W+) t(lambda) and the matching
/// reflection relation (half line: r(lambda+delta)(-ik+W+) = (ik+W+) r(lambda)).
ShapeInvarianceReport shape_invariance_suite(const PotentialSpec& spec, const std::vector<double>& ks);

}  // namespace scatter
