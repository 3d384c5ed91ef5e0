#pragma once

// End-to-end acceptance checks shared by the acceptance test binary and the
// CLI `verify` command.

#include <functional>
#include <string>
#include <vector>

#include "scatter/darboux.hpp"

namespace scatter {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Criterion {
    int id;
    std::string name;
    std::function<CriterionResult()> run;
};

/// The eleven acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the selected criteria (all when ids is empty). Exceptions inside a
/// criterion turn into a failing result carrying the message.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

/// "PASS  3 deformation-invariance  (0.12 s)  detail".
std::string format_result(const CriterionResult& r);

/// Reference parameter point of each family.
PotentialSpec reference_spec(Family f);

/// A regular deformed scenario per family, used by the invariance and
/// oracle checks.
Scenario reference_scenario(Family f);

}  // namespace scatter
