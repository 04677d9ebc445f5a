// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <tinysol/chain.hpp>
#include <tinysol/scenario.hpp>

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tinysol
{
/// Process exit status of the command-line tool.
enum class ExitStatus : int
{
    Ok = 0,
    Failed = 1,
    ParseError = 2,
    InvariantBreach = 3,
};

struct ExpectResult
{
    std::string text;
    SourcePos pos;
    bool passed = false;
    std::optional<Value> lhs;  ///< operand values of a top-level comparison
    std::optional<Value> rhs;
    std::string detail;        ///< failure cause when evaluation is undefined

    friend bool operator==(const ExpectResult&, const ExpectResult&) = default;
};

struct RunReport
{
    std::string scenario;
    std::uint64_t fuel = default_fuel;
    bool strict_callee = false;
    std::vector<Receipt> receipts;
    std::vector<StateRecord> final_state;
    std::vector<ExpectResult> expects;
    ExitStatus status = ExitStatus::Ok;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Evaluates an expectation against a state.
ExpectResult check_expectation(const State& s, const Expectation& e);

/// genesis, apply_chain, expectations. Throws GenesisError and
/// InvariantViolation.
RunReport run_scenario(const Scenario& scenario, const ChainOptions& options = {});

std::string to_text(const RunReport& report);
nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

/// Reads a value written in source syntax, e.g. `(1, @A)`.
Value parse_value(std::string_view text);

enum class OutputFormat : std::uint8_t
{
    Text,
    Json,
};

struct RunFlags
{
    ChainOptions chain;
    OutputFormat format = OutputFormat::Text;
    bool trace = false;
};

/// Parses and validates contract (`.tns`) and scenario (`.scn`) files.
ExitStatus cmd_check(const std::vector<std::filesystem::path>& paths, std::ostream& out,
    std::ostream& err);

ExitStatus cmd_run(const std::filesystem::path& scenario, const RunFlags& flags,
    std::ostream& out, std::ostream& err);

/// Dumps the state after the first `at` transactions (all when empty).
ExitStatus cmd_state(const std::filesystem::path& scenario, std::optional<std::size_t> at,
    const RunFlags& flags, std::ostream& out, std::ostream& err);

/// TINYSOL_FUEL when set to a positive integer, else default_fuel.
std::uint64_t fuel_from_environment();

}  // namespace tinysol
