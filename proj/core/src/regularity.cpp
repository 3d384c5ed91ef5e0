#include "scatter/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace scatter {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::RegularByCondition: return "regular";
        case Verdict::SingularByCondition: return "singular";
        case Verdict::NeedsNumericScan: return "needs-scan";
    }
    return "?";
}

IndexSetAnalysis krein_adler_check(const std::vector<int>& D) {
    if (D.empty()) throw DomainError("krein_adler_check: empty index set");
    std::set<int> ds(D.begin(), D.end());
    if (ds.size() != D.size() || *ds.begin() < 0)
        throw DomainError("krein_adler_check: degrees must be distinct and non-negative");
    IndexSetAnalysis a;
    a.D.assign(ds.begin(), ds.end());
    a.N = *ds.rbegin();
    std::set<int> removed;
    for (int d : ds) removed.insert(a.N - d);
    for (int e = 0; e <= a.N; ++e)
        if (!removed.count(e)) a.barD.push_back(e);
    bool ok = true;
    for (int n = 0; n <= a.N + 1 && ok; ++n) {
        double p = 1.0;
        for (int e : a.barD) p *= n - e;
        ok = p >= 0.0;
    }
    a.verdict = ok ? Verdict::RegularByCondition : Verdict::SingularByCondition;
    return a;
}

IndexSetAnalysis krein_adler_check(const Scenario& sc) {
    IndexSetAnalysis na;
    if (sc.seeds.empty()) return na;
    const auto& first = sc.seeds.front();
    std::vector<int> D;
    for (const auto& s : sc.seeds) {
        if (s.origin != SeedOrigin::Twist || s.kind != SeedKind::PseudoVirtual || s.twist != first.twist) return na;
        D.push_back(s.degree);
    }
    // The condition is inherited from deleting eigenstates of the shifted
    // system lambda - (N+1) delta, which must itself be admissible.
    const int n_top = *std::max_element(D.begin(), D.end());
    const PotentialSpec bar = sc.spec.shifted(-(n_top + 1));
    const auto bar_top = bar.valid() ? nmax(bar) : std::nullopt;
    if (bar_top && *bar_top < n_top) return na;
    if (!bar.valid()) return na;
    return krein_adler_check(D);
}

std::optional<bool> type1_chain_condition(const Scenario& sc) {
    if (sc.seeds.empty()) return std::nullopt;
    for (const auto& s : sc.seeds)
        if (s.kind != SeedKind::VirtualI) return std::nullopt;
    const int m = sc.M();
    const bool half = on_half_line(sc.spec.family());
    const double x1 = half ? 1e-6 : -12.0;
    for (const auto& s : sc.seeds) {
        const FactoredJet f = seed_form(s, Jet::variable(x1, 1));
        const double rate = (f.log_prefactor.derivative(1) + f.poly.derivative(1) / f.poly.value()).real();
        if (half) {
            // f ~ x^p near 0: derivatives up to M-1 vanish iff p > M-1
            if (!(x1 * rate > m - 1 + 1e-8)) return false;
        } else if (!(rate > 1e-8)) {
            return false;
        }
    }
    return true;
}

namespace {

// Normalised real Wronskian and the product of column maxima.
std::pair<double, double> scaled_wronskian(const Scenario& sc, double x) {
    if (sc.seeds.empty()) return {1.0, 1.0};
    const int m = sc.M();
    const Jet xj = Jet::variable(x, m - 1);
    std::vector<FactoredJet> fs;
    double scale = 1.0;
    for (const auto& s : sc.seeds) {
        FactoredJet f = seed_form(s, xj);
        const Jet col = exp(f.log_prefactor - f.log_prefactor.value()) * f.poly;
        double mx = 0.0;
        for (int i = 0; i < m; ++i) mx = std::max(mx, std::abs(col.derivative(i)));
        scale *= mx;
        fs.push_back(std::move(f));
    }
    Cplx ls;
    const Jet d = normalized_wronskian(fs, 0, ls, x, DetStrategy::LU, false);
    return {(std::exp(Cplx(0.0, ls.imag())) * d.value()).real(), scale};
}

}  // namespace

double wronskian_sign_function(const Scenario& sc, double x) { return scaled_wronskian(sc, x).first; }

ScanResult nodeless_scan(const Scenario& sc, double lo, double hi, int points) {
    ScanResult r;
    r.lo = lo;
    r.hi = hi;
    r.points = points;
    if (sc.seeds.empty()) return r;
    constexpr double kResolved = 1e-12;
    const double step = (hi - lo) / (points - 1);
    std::vector<double> xs(points), w(points), scale(points);
    for (int i = 0; i < points; ++i) {
        xs[i] = lo + i * step;
        std::tie(w[i], scale[i]) = scaled_wronskian(sc, xs[i]);
    }
    const auto resolved = [&](int i) { return std::abs(w[i]) >= kResolved * scale[i]; };
    const auto f = [&](double x) { return scaled_wronskian(sc, x).first; };

    // Sign changes between resolved samples, refined by bisection. Samples
    // whose magnitude is below the rounding floor carry no sign information.
    int last = -1;
    for (int i = 0; i < points; ++i) {
        if (!resolved(i)) continue;
        if (last >= 0 && (w[last] < 0) != (w[i] < 0)) {
            double a = xs[last], b = xs[i], fl = w[last];
            while (b - a > 1e-9) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fm < 0) == (fl < 0)) {
                    a = mid;
                    fl = fm;
                } else {
                    b = mid;
                }
            }
            r.zeros.push_back(0.5 * (a + b));
        }
        last = i;
    }

    // Even-order zeros do not change sign: local minima of |W| between two
    // resolved neighbours that dive below the rounding floor.
    std::vector<double> extra;
    for (int i = 1; i + 1 < points; ++i) {
        if (!resolved(i - 1) || !resolved(i + 1)) continue;
        const double a = std::abs(w[i - 1]), b = std::abs(w[i]), c = std::abs(w[i + 1]);
        if (!(b <= a && b <= c)) continue;
        double l = xs[i - 1], h = xs[i + 1];
        constexpr double kPhi = 0.6180339887498949;
        for (int it = 0; it < 80 && h - l > 1e-10; ++it) {
            const double m1 = h - kPhi * (h - l), m2 = l + kPhi * (h - l);
            if (std::abs(f(m1)) < std::abs(f(m2))) h = m2;
            else l = m1;
        }
        const double xz = 0.5 * (l + h);
        const auto [wz, sz] = scaled_wronskian(sc, xz);
        if (std::abs(wz) < kResolved * sz) {
            const bool known = std::any_of(r.zeros.begin(), r.zeros.end(),
                                           [&](double z) { return std::abs(z - xz) < 2.0 * step; });
            if (!known) extra.push_back(xz);
        }
    }
    // An interior run of unresolved samples flanked by equal signs is a
    // touching zero too deep to resolve (e.g. W ~ x^6).
    for (int i = 1; i < points; ++i) {
        if (resolved(i) || !resolved(i - 1)) continue;
        int j = i;
        while (j < points && !resolved(j)) ++j;
        if (j < points && (w[i - 1] < 0) == (w[j] < 0)) {
            int best = i;
            for (int k = i; k < j; ++k)
                if (std::abs(w[k]) / scale[k] < std::abs(w[best]) / scale[best]) best = k;
            extra.push_back(xs[best]);
        }
        i = j;
    }
    r.zeros.insert(r.zeros.end(), extra.begin(), extra.end());
    std::sort(r.zeros.begin(), r.zeros.end());
    r.nodeless = r.zeros.empty();
    return r;
}

ScanResult nodeless_scan(const Scenario& sc, int points) {
    if (on_half_line(sc.spec.family())) return nodeless_scan(sc, 1e-4, 12.0, points);
    return nodeless_scan(sc, -12.0, 12.0, points);
}

RegularityReport analyze(const Scenario& sc) {
    RegularityReport rep;
    if (sc.seeds.empty()) {
        rep.method = "trivial";
        return rep;
    }
    const IndexSetAnalysis ka = krein_adler_check(sc);
    rep.scan = nodeless_scan(sc);
    if (ka.verdict != Verdict::NeedsNumericScan) {
        rep.index_analysis = ka;
        rep.method = "krein-adler";
    } else if (type1_chain_condition(sc) == true) {
        rep.method = "type-I chain";
    } else {
        rep.method = "numeric scan";
    }
    rep.regular = rep.scan->nodeless;
    return rep;
}

}  // namespace scatter
