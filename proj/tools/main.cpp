#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "scatter/errors.hpp"

using namespace scatter::cli;

namespace {

void add_scenario_options(CLI::App* cmd, ScenarioArgs& a, bool grids = true) {
    cmd->add_option("scenario", a.file, "Scenario file (key-table or JSON)");
    cmd->add_option("--family", a.family, "rm, soliton, hst, morse, eckart, hpt, coulomb");
    cmd->add_option("--h", a.h, "Parameter h");
    cmd->add_option("--mu", a.mu, "Parameter mu");
    cmd->add_option("--g", a.g, "Parameter g");
    cmd->add_option("--param", a.params, "name=value, repeatable");
    cmd->add_option("--seed", a.seeds, "kind:v[:twist][,...], replaces the file's seeds");
    if (grids) {
        cmd->add_option("--k-grid", a.k_grid, "min:max:points");
        cmd->add_option("--x-grid", a.x_grid, "min:max:points");
    }
    cmd->add_option("--out", a.out, "Write to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Darboux-deformed scattering: amplitudes, spectra and checks"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    ScenarioArgs args;
    std::vector<int> only;
    std::string hint_target, hint_data;

    auto* list = app.add_subcommand("list", "Families, parameter ranges and admissible seeds");
    add_scenario_options(list, args, false);

    auto* amp = app.add_subcommand("amplitudes", "t_D(k), r_D(k) sweep with invariance checks");
    add_scenario_options(amp, args);
    amp->add_flag("--oracle", args.oracle, "Add Numerov amplitudes and their deviation");
    amp->add_flag("--force", args.force, "Evaluate singular scenarios");
    amp->add_option("--format", args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* pot = app.add_subcommand("potential", "U, U^[M] and the Wronskian on an x grid");
    add_scenario_options(pot, args);
    pot->add_flag("--force", args.force, "Evaluate singular scenarios");
    pot->add_option("--format", args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* spec = app.add_subcommand("spectrum", "Analytic levels, shooting levels and pole catalogue (JSON)");
    add_scenario_options(spec, args, false);
    spec->add_flag("--force", args.force, "Evaluate singular scenarios");

    auto* reg = app.add_subcommand("regularity", "Krein-Adler / chain conditions and Wronskian scan (JSON)");
    add_scenario_options(reg, args, false);

    auto* canon = app.add_subcommand("canonical", "Print the scenario in canonical form");
    add_scenario_options(canon, args);
    std::string canon_format = "text";
    canon->add_option("--format", canon_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--only", only, "Criterion ids to run");
    std::string verify_format = "text";
    verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", args.out, "Write to a file instead of stdout");

    auto* hints = app.add_subcommand("plot-hints", "gnuplot commands for the CSV outputs");
    hints->add_option("what", hint_target, "amplitudes or potential")->required();
    hints->add_option("--data", hint_data, "CSV file name to reference");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*list) return cmd_list(args);
        if (*amp) return cmd_amplitudes(args);
        if (*pot) return cmd_potential(args);
        if (*spec) return cmd_spectrum(args);
        if (*reg) return cmd_regularity(args);
        if (*canon) {
            args.format = canon_format;
            return cmd_canonical(args);
        }
        if (*verify) return cmd_verify(only, verify_format, args.out);
        if (*hints) return cmd_plot_hints(hint_target, hint_data);
    } catch (const scatter::UncancelledPole& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const scatter::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
