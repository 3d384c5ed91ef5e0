#pragma once

// Subcommands of the scatter CLI. Each returns the process exit code:
// 0 pass, 1 usage or input error, 2 singular scenario refused, 3 a
// verification check failed.

#include <optional>
#include <string>
#include <vector>

#include "scatter/scenario_file.hpp"

namespace scatter::cli {

enum Exit { kPass = 0, kUsage = 1, kSingular = 2, kVerifyFailed = 3 };

struct ScenarioArgs {
    std::string file;
    std::string family;
    std::optional<double> h, mu, g;
    std::vector<std::string> params;  // name=value
    std::vector<std::string> seeds;   // kind:v[:twist][,...]
    std::string k_grid;
    std::string x_grid;
    std::string format = "csv";
    std::string out;
    bool force = false;
    bool oracle = false;
};

/// Scenario file (if any) overridden by command-line flags.
ScenarioFile resolve(const ScenarioArgs& a);

int cmd_list(const ScenarioArgs& a);
int cmd_amplitudes(const ScenarioArgs& a);
int cmd_potential(const ScenarioArgs& a);
int cmd_spectrum(const ScenarioArgs& a);
int cmd_regularity(const ScenarioArgs& a);
int cmd_verify(const std::vector<int>& only, const std::string& format, const std::string& out);
int cmd_plot_hints(const std::string& what, const std::string& data);
/// Canonical form of the resolved scenario (text or JSON).
int cmd_canonical(const ScenarioArgs& a);

}  // namespace scatter::cli
