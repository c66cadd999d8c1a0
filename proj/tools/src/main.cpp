#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace gqss::cli;

// Exit codes: 0 success, 2 usage or configuration problem, 3 a session
// raised a cheat signal. Everything unexpected also maps to 2.
int run(int argc, char** argv) {
    CLI::App app{"Grover-based quantum secret sharing: simulator and analysis tools"};
    app.require_subcommand(1);

    GlobalOptions global;
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "structured-text"}))
        ->capture_default_str();
    auto* out_opt = app.add_option("--out", out_path, "Write output to this file");
    auto* seed_opt = app.add_option("--seed", seed, "Override the scenario seed");

    GroverOptions grover;
    auto* grover_cmd = app.add_subcommand("grover", "Amplitude trace of the search iteration");
    grover_cmd->add_option("--qubits", grover.qubits, "Register size")->required();
    grover_cmd->add_option("--marked", grover.marked, "Marked states (indices or bit strings)")
        ->required()
        ->delimiter(',');
    grover_cmd->add_option("--iterations", grover.iterations, "Rounds to trace")
        ->capture_default_str();
    grover_cmd->add_flag("--trace", grover.trace,
                         "Add unmarked amplitudes and per-round simulation deviation");

    SweepOptions sweep;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "One-round success probability versus marked ratio");
    sweep_cmd->add_option("--samples", sweep.samples, "Sample count over (0, 1]")
        ->capture_default_str();

    Table2Options table2;
    auto* table2_cmd =
        app.add_subcommand("table2", "Success per iteration for 2 to 5 qubit registers");
    table2_cmd->add_flag("--extended", table2.extended,
                         "Every cell, not only the reference grid");

    Table1Options table1;
    auto* table1_cmd =
        app.add_subcommand("table1", "Decode survey of ten four-qubit guesses");
    table1_cmd->add_option("--marked", table1.marked,
                           "Four marked states (default 0001,0011,0101,0111)")
        ->delimiter(',');

    ProtocolOptions protocol;
    auto* protocol_cmd = app.add_subcommand("protocol", "Run sharing sessions from a scenario");
    protocol_cmd->add_option("scenario", protocol.scenario_path, "Scenario JSON file")
        ->required();
    std::uint64_t protocol_trials = 0;
    auto* protocol_trials_opt =
        protocol_cmd->add_option("--trials", protocol_trials, "Override the trial count");
    protocol_cmd->add_option("--transcript", protocol.transcript_path,
                             "Event log path")
        ->capture_default_str();

    CheatOptions cheat;
    auto* cheat_cmd =
        app.add_subcommand("cheat", "Detection report for an adversary strategy");
    cheat_cmd->add_option("scenario", cheat.scenario_path, "Scenario JSON file")->required();
    std::string cheat_strategy;
    auto* cheat_strategy_opt = cheat_cmd->add_option(
        "--strategy", cheat_strategy,
        "honest, guess-diffusion, intercept-resend, or capture-all");
    cheat_cmd->add_option("--guess", cheat.guess, "Guessed letters")->delimiter(',');
    cheat_cmd->add_option("--fake-marked", cheat.fake_marked, "Forged marked states")
        ->delimiter(',');
    cheat_cmd->add_option("--fake-initial", cheat.fake_initial, "Forged preparation letters")
        ->delimiter(',');
    std::string cheat_policy;
    auto* cheat_policy_opt = cheat_cmd->add_option(
        "--policy", cheat_policy, "measure-immediately or guess-diffusion-then-measure");
    std::uint64_t cheat_trials = 0;
    auto* cheat_trials_opt =
        cheat_cmd->add_option("--trials", cheat_trials, "Override the trial count");

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    global.format = format == "csv" ? Format::Csv : Format::StructuredText;
    if (*out_opt) global.out_path = out_path;
    if (*seed_opt) global.seed = seed;

    if (*grover_cmd) return cmd_grover(grover, global);
    if (*sweep_cmd) return cmd_sweep(sweep, global);
    if (*table2_cmd) return cmd_table2(table2, global);
    if (*table1_cmd) return cmd_table1(table1, global);
    if (*protocol_cmd) {
        if (*protocol_trials_opt) protocol.trials = protocol_trials;
        return cmd_protocol(protocol, global);
    }
    if (*cheat_cmd) {
        if (*cheat_strategy_opt) cheat.strategy = cheat_strategy;
        if (*cheat_policy_opt) cheat.policy = cheat_policy;
        if (*cheat_trials_opt) cheat.trials = cheat_trials;
        return cmd_cheat(cheat, global);
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gqss::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
