#pragma once

// Non-singularity of deformed potentials: the Krein-Adler integer condition,
// the boundary condition for type I virtual chains, and a numeric scan for
// zeros of the Wronskian.

#include <optional>
#include <string>
#include <vector>

#include "scatter/darboux.hpp"

namespace scatter {

enum class Verdict { RegularByCondition, SingularByCondition, NeedsNumericScan };
std::string_view verdict_name(Verdict v);

struct IndexSetAnalysis {
    std::vector<int> D;
    int N = 0;
    std::vector<int> barD;
    Verdict verdict = Verdict::NeedsNumericScan;
};

/// Krein-Adler check on a set of distinct non-negative degrees:
/// barD = {0..N} \ {N - d}, regular iff prod_e (n - e) >= 0 for n = 0..N+1.
IndexSetAnalysis krein_adler_check(const std::vector<int>& D);

/// For scenarios made of twist pseudo virtual seeds sharing one twist, the
/// Krein-Adler analysis of their degrees; otherwise NeedsNumericScan.
IndexSetAnalysis krein_adler_check(const Scenario& sc);

/// All seeds type I virtual: true iff every seed vanishes at the left end of
/// the domain to order M-1 (checked from the local exponent at x = -12, or
/// x = 1e-6 on the half line). Absent when the precondition fails.
std::optional<bool> type1_chain_condition(const Scenario& sc);

struct ScanResult {
    bool nodeless = true;
    std::vector<double> zeros;
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
};

/// Sign scan of the real Wronskian on [-12, 12] (half line: [1e-4, 12]),
/// zeros refined by bisection to 1e-8.
ScanResult nodeless_scan(const Scenario& sc, int points = 4000);
ScanResult nodeless_scan(const Scenario& sc, double lo, double hi, int points);

/// Real Wronskian divided by its positive scale factor: only the sign and
/// zeros are meaningful.
double wronskian_sign_function(const Scenario& sc, double x);

struct RegularityReport {
    bool regular = true;
    /// "trivial", "krein-adler", "type-I chain" or "numeric scan".
    std::string method;
    std::optional<IndexSetAnalysis> index_analysis;
    std::optional<ScanResult> scan;
};

/// Applies the analytic criterion when it exists and always confirms with the
/// numeric scan; the scan decides when the two disagree.
RegularityReport analyze(const Scenario& sc);

}  // namespace scatter
