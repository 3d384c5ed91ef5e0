#include "scatter/amplitudes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace scatter {

namespace {

constexpr Cplx kI{0.0, 1.0};

Cplx checked_factor(Cplx num, Cplx den, Cplx k) {
    if (std::abs(den) < 1e-12) throw PoleHit(k);
    return num / den;
}

// Upper-half nominal pole of a seed's factor.
Cplx nominal_pole(const Scenario& sc, const SeedSolution& s) {
    if (sc.spec.group() == Group::A) return -kI * *s.delta_minus;
    return kI * s.delta_plus;
}

Cplx nominal_zero(const Scenario& sc, const SeedSolution& s) {
    if (sc.spec.group() == Group::A) return kI * *s.delta_minus;
    return -kI * s.delta_plus;
}

std::string seed_label(const SeedSolution& s) {
    std::ostringstream os;
    os << "seed " << seed_kind_name(s.kind) << " v=" << s.degree;
    return os.str();
}

double max_on_circle(const Scenario& sc, Cplx center, double radius) {
    double m = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double th = (j + 0.5) * std::numbers::pi / 4.0;
        const Cplx k = center + radius * Cplx(std::cos(th), std::sin(th));
        const DeformedAmplitudes a = deform_amplitudes(sc, k);
        m = std::max(m, std::abs(a.r));
        if (a.t) m = std::max(m, std::abs(*a.t));
    }
    return m;
}

}  // namespace

std::string_view pole_kind_name(PoleKind k) {
    switch (k) {
        case PoleKind::EigenPole: return "EigenPole";
        case PoleKind::CancelledPole: return "CancelledPole";
        case PoleKind::SpuriousLowerHalf: return "SpuriousLowerHalf";
        case PoleKind::Zero: return "Zero";
        case PoleKind::QuasinormalMode: return "QuasinormalMode";
    }
    return "?";
}

DeformedAmplitudes deform_amplitudes(const Scenario& sc, Cplx k) {
    const OriginalAmplitudes base = amplitudes_at(sc.spec, k);
    DeformedAmplitudes out;
    out.kprime = base.kprime;
    const Family fam = sc.spec.family();
    if ((fam == Family::RosenMorse || fam == Family::Eckart) && k.real() != 0.0 && k.imag() != 0.0)
        out.sheet_ambiguous = true;
    Cplx ft = 1.0, fr = 1.0;
    if (sc.spec.group() == Group::A) {
        const Cplx kn = fam == Family::RosenMorse ? *base.kprime : k;
        for (const auto& s : sc.seeds) {
            const Cplx dp = s.delta_plus, dm = *s.delta_minus;
            const Cplx tf = checked_factor(kn + kI * dp, k + kI * dm, k);
            const Cplx rf = checked_factor(k - kI * dm, k + kI * dm, k);
            out.t_factors.push_back(tf);
            out.r_factors.push_back(rf);
            ft *= tf;
            fr *= rf;
        }
    } else {
        for (const auto& s : sc.seeds) {
            const Cplx dp = s.delta_plus;
            const Cplx rf = checked_factor(k + kI * dp, k - kI * dp, k);
            out.r_factors.push_back(rf);
            fr *= rf;
        }
    }
    out.r_sign = sc.M() % 2 == 0 ? 1.0 : -1.0;
    if (base.t) out.t = ft * *base.t;
    out.r = out.r_sign * fr * base.r;
    return out;
}

InvarianceReport invariance_check(const Scenario& sc, const std::vector<double>& ks) {
    InvarianceReport rep;
    for (double k : ks) {
        const OriginalAmplitudes base = original_amplitudes(sc.spec, k);
        const DeformedAmplitudes d = deform_amplitudes(sc, k);
        const bool open = !base.kprime || base.kprime->imag() == 0.0;
        rep.max_dev_r = std::max(rep.max_dev_r, std::abs(std::abs(d.r) - std::abs(base.r)));
        if (base.t && open) rep.max_dev_t = std::max(rep.max_dev_t, std::abs(std::abs(*d.t) - std::abs(*base.t)));
        for (Cplx f : d.r_factors) rep.max_factor_dev = std::max(rep.max_factor_dev, std::abs(std::abs(f) - 1.0));
        if (open)
            for (Cplx f : d.t_factors) rep.max_factor_dev = std::max(rep.max_factor_dev, std::abs(std::abs(f) - 1.0));
        ++rep.points;
    }
    return rep;
}

bool PoleProbe::bounded() const {
    if (max_abs.empty()) return false;
    return std::isfinite(max_abs.back()) && max_abs.back() <= 10.0 * max_abs.front();
}

bool PoleProbe::grows() const {
    if (max_abs.empty()) return false;
    return !std::isfinite(max_abs.back()) || max_abs.back() >= 1e3 * max_abs.front();
}

PoleProbe probe_pole(const Scenario& sc, Cplx center) {
    PoleProbe p;
    for (double r = 1e-3; r > 0.5e-8; r *= 0.1) {
        p.radii.push_back(r);
        p.max_abs.push_back(max_on_circle(sc, center, r));
    }
    return p;
}

std::vector<PoleZeroRecord> pole_catalog(const Scenario& sc, int n_cut) {
    std::vector<PoleZeroRecord> out;
    const PotentialSpec& spec = sc.spec;

    // Bound states of the original system survive the deformation.
    const auto top = nmax(spec);
    const int last = top ? *top : n_cut;
    for (int n = 0; n <= last; ++n) {
        const double e = energy_formula(spec, n);
        PoleZeroRecord rec{kI * std::sqrt(-e), PoleKind::EigenPole, "family", e, false};
        rec.verified = probe_pole(sc, rec.k).grows();
        out.push_back(rec);
    }

    for (const auto& s : sc.seeds) {
        const Cplx kp = nominal_pole(sc, s);
        PoleZeroRecord rec{kp, PoleKind::EigenPole, seed_label(s), std::nullopt, false};
        if (kp.imag() < 0.0) {
            rec.kind = PoleKind::SpuriousLowerHalf;
            rec.verified = true;
        } else if (s.kind == SeedKind::PseudoVirtual || s.kind == SeedKind::OvershootPseudo) {
            rec.energy = s.energy;
            rec.verified = probe_pole(sc, kp).grows();
        } else {
            if (!probe_pole(sc, kp).bounded()) throw UncancelledPole(kp);
            rec.kind = PoleKind::CancelledPole;
            rec.verified = true;
        }
        out.push_back(rec);
        out.push_back({nominal_zero(sc, s), PoleKind::Zero, seed_label(s), std::nullopt, true});
    }

    if (spec.family() == Family::HyperbolicSymTop) {
        for (int n = 0; n <= n_cut; ++n) {
            for (double sgn : {1.0, -1.0}) {
                const Cplx k{sgn * spec.mu(), -(n + 0.5)};
                PoleZeroRecord rec{k, PoleKind::QuasinormalMode, "family", std::nullopt, false};
                try {
                    rec.verified = probe_pole(sc, k).grows();
                } catch (const Error&) {
                    rec.verified = false;
                }
                out.push_back(rec);
            }
        }
    }
    return out;
}

ShapeInvarianceReport shape_invariance_suite(const PotentialSpec& spec, const std::vector<double>& ks) {
    ShapeInvarianceReport rep;
    const PotentialSpec next = spec.shifted(1);
    rep.shifted_valid = next.valid();
    const GroundstateExponents w = groundstate_exponents(spec);
    const auto rel = [](Cplx a, Cplx b) {
        const double s = std::abs(a) + std::abs(b);
        return s == 0.0 ? 0.0 : std::abs(a - b) / s;
    };
    for (double kr : ks) {
        const Cplx k = kr;
        const OriginalAmplitudes a0 = amplitudes_at(spec, k);
        const OriginalAmplitudes a1 = amplitudes_at(next, k);
        if (spec.group() == Group::A) {
            const Cplx wp = w.w_plus, wm = *w.w_minus;
            const Cplx kn = spec.family() == Family::RosenMorse ? *a0.kprime : k;
            const double rt = rel(*a1.t * (kI * k + wm), (kI * kn + wp) * *a0.t);
            rep.max_residual_t = std::max(rep.max_residual_t.value_or(0.0), rt);
            rep.max_residual_r = std::max(rep.max_residual_r, rel(a1.r * (kI * k + wm), (-kI * k + wm) * a0.r));
        } else {
            const Cplx wp = w.w_plus;
            rep.max_residual_r = std::max(rep.max_residual_r, rel(a1.r * (-kI * k + wp), (kI * k + wp) * a0.r));
        }
        ++rep.points;
    }
    return rep;
}

}  // namespace scatter
