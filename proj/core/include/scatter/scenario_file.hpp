#pragma once

// Scenario files: a key-table text format (JSON accepted as well) naming a
// family, its parameters, the seed list and optional k/x grids.
//
//   # comment
//   family = soliton
//   [params]
//   h = 2.5
//   [seeds]
//   pseudo-virtual:0          kind:degree[:twist], one or more per line
//   [grids]
//   k = 0.1:10:50             min:max:points
//   x = -12:12:241

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scatter/darboux.hpp"

namespace scatter {

/// kind is one of twist, overshoot, pseudo-virtual, virtual-I, virtual-II,
/// overshoot-pseudo. The last four name the expected classification and the
/// origin is inferred.
struct SeedRequest {
    std::string kind;
    int degree = 0;
    std::optional<Twist> twist;
    int line = 0;
};

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    std::vector<double> values() const;
};

struct ScenarioFile {
    Family family = Family::Soliton;
    Params params;
    std::vector<SeedRequest> seeds;
    std::optional<GridSpec> k_grid;
    std::optional<GridSpec> x_grid;
};

/// Parameter names used by a family, in canonical order.
std::vector<std::string_view> parameter_names(Family f);

/// "kind:v[:twist]"; aliases pseudo, overshoot-I, overshoot-II are accepted.
SeedRequest parse_seed(std::string_view token, int line = 0);
/// Comma-separated list of seeds.
std::vector<SeedRequest> parse_seed_list(std::string_view text, int line = 0);
/// "min:max:points" with points >= 1 (min == max when points == 1).
GridSpec parse_grid(std::string_view text, int line = 0);

ScenarioFile parse_scenario_text(std::string_view text);
ScenarioFile parse_scenario_json(std::string_view text);
/// JSON when the first non-blank character is '{', key-table otherwise.
ScenarioFile parse_scenario(std::string_view text);
ScenarioFile load_scenario(const std::string& path);

/// Canonical key-table form; parse(serialize(f)) serializes to the same bytes.
std::string serialize(const ScenarioFile& f);
std::string serialize_json(const ScenarioFile& f);

PotentialSpec build_spec(const ScenarioFile& f);
/// Seeds resolved against the family; classification mismatches and seed
/// refusals become ParseError on the seed's line.
Scenario build_scenario(const ScenarioFile& f);

/// Shortest round-trip decimal form.
std::string format_real(double v);

}  // namespace scatter
