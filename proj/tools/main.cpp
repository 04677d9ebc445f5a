// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/report.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    using namespace tinysol;

    CLI::App app{"tinysol: run contracts and transaction scenarios"};
    app.require_subcommand(1);

    RunFlags flags;
    flags.chain.fuel = fuel_from_environment();
    std::string format = "text";
    auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("--fuel", flags.chain.fuel, "statement steps per transaction")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--trace", flags.trace, "print rule applications to stderr");
        cmd->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--strict-callee", flags.chain.strict_callee,
            "reject transactions whose callee is an account");
    };

    std::vector<std::filesystem::path> check_paths;
    auto* check = app.add_subcommand("check", "parse and validate contract and scenario files");
    check->add_option("paths", check_paths, "files (*.tns, *.scn)")->required();

    std::filesystem::path run_path;
    auto* run = app.add_subcommand("run", "run a scenario and check its expectations");
    run->add_option("scenario", run_path, "scenario file")->required();
    add_run_flags(run);

    std::filesystem::path state_path;
    std::optional<std::size_t> at;
    auto* state = app.add_subcommand("state", "dump the state after a prefix of the chain");
    state->add_option("scenario", state_path, "scenario file")->required();
    state->add_option("--at", at, "number of transactions to apply");
    add_run_flags(state);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitStatus::ParseError);
    }
    flags.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

    ExitStatus status = ExitStatus::Ok;
    if (check->parsed())
        status = cmd_check(check_paths, std::cout, std::cerr);
    else if (run->parsed())
        status = cmd_run(run_path, flags, std::cout, std::cerr);
    else
        status = cmd_state(state_path, at, flags, std::cout, std::cerr);
    return static_cast<int>(status);
}
