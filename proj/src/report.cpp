// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/report.hpp>

#include <cstdlib>
#include <ostream>
#include <set>

namespace tinysol
{
using nlohmann::json;

namespace
{
constexpr Cause all_causes[] = {Cause::Throw, Cause::UnboundConst, Cause::UndefinedKeyRead,
    Cause::BadLhs, Cause::TypeMismatch, Cause::UnknownProcedure, Cause::ArityMismatch,
    Cause::NegativeAmount, Cause::InsufficientFunds, Cause::BalanceAssign, Cause::FuelExhausted};

Cause cause_from_name(std::string_view name)
{
    for (Cause c : all_causes)
        if (name == cause_name(c))
            return c;
    throw std::invalid_argument{"unknown failure cause '" + std::string{name} + "'"};
}

bool is_comparison(Operator op)
{
    switch (op)
    {
    case Operator::Eq:
    case Operator::Ne:
    case Operator::Lt:
    case Operator::Le:
    case Operator::Gt:
    case Operator::Ge:
        return true;
    default:
        return false;
    }
}

Address parse_address(std::string_view text)
{
    Value v = parse_value(text);
    if (!v.is_addr())
        throw std::invalid_argument{"expected an address, found '" + std::string{text} + "'"};
    return v.as_addr();
}

BigInt parse_int(std::string_view text)
{
    Value v = parse_value(text);
    if (!v.is_int())
        throw std::invalid_argument{"expected an integer, found '" + std::string{text} + "'"};
    return v.as_int();
}

std::string signed_str(const BigInt& n)
{
    return (n > 0 ? "+" : "") + n.str();
}

json optional_value(const std::optional<Value>& v)
{
    return v ? json(to_string(*v)) : json(nullptr);
}

std::optional<Value> optional_value(const json& j)
{
    if (j.is_null())
        return std::nullopt;
    return parse_value(j.get<std::string>());
}
}  // namespace

Value parse_value(std::string_view text)
{
    auto e = parse_expr(text, {});
    auto v = eval_expr(State{}, Env{}, Address{}, *e);
    if (!v)
        throw std::invalid_argument{"'" + std::string{text} + "' is not a value"};
    return std::move(v).value();
}

ExpectResult check_expectation(const State& s, const Expectation& e)
{
    ExpectResult r{e.text, e.pos, false, std::nullopt, std::nullopt, {}};
    const Address at{};
    if (const auto* app = std::get_if<Expr::Apply>(&e.expr->node);
        app && is_comparison(app->op) && app->args.size() == 2)
    {
        auto lhs = eval_expr(s, {}, at, *app->args[0]);
        auto rhs = eval_expr(s, {}, at, *app->args[1]);
        if (lhs)
            r.lhs = *lhs;
        if (rhs)
            r.rhs = *rhs;
    }
    auto v = eval_expr(s, {}, at, *e.expr);
    if (!v)
        r.detail = std::string{cause_name(v.cause())} + ": " + v.failure().detail;
    else if (!v->is_bool())
        r.detail = "expectation is not boolean: " + to_string(*v);
    else
        r.passed = v->as_bool();
    return r;
}

RunReport run_scenario(const Scenario& scenario, const ChainOptions& options)
{
    const World world = genesis(scenario);
    auto chain = apply_chain(world.registry, world.state, scenario.transactions, options);

    RunReport report;
    report.scenario = scenario.name;
    report.fuel = options.fuel;
    report.strict_callee = options.strict_callee;
    report.receipts = std::move(chain.receipts);
    report.final_state = export_records(chain.final_state);
    for (const auto& e : scenario.expects)
    {
        report.expects.push_back(check_expectation(chain.final_state, e));
        if (!report.expects.back().passed)
            report.status = ExitStatus::Failed;
    }
    return report;
}

std::string to_text(const RunReport& report)
{
    std::string out = "scenario " + report.scenario + "\n";
    out += "fuel " + std::to_string(report.fuel) + " per transaction";
    out += report.strict_callee ? ", strict callee\n" : "\n";
    for (const auto& r : report.receipts)
    {
        out += "tx " + std::to_string(r.index) + ": " + to_string(r.tx) + "\n";
        out += "  rule " + std::string{rule_name(r.rule)} + ", fuel used " +
               std::to_string(r.fuel_used) + "\n";
        if (r.failure)
            out += "  failure " + std::string{cause_name(r.failure->cause)} + ": " +
                   r.failure->detail + "\n";
        for (const auto& [a, d] : r.deltas)
            out += "  " + to_string(a) + " " + signed_str(d) + "\n";
    }
    out += "final state\n";
    for (const auto& rec : report.final_state)
        out += "  " + to_string(rec) + "\n";
    std::size_t passed = 0;
    for (const auto& e : report.expects)
    {
        passed += e.passed;
        out += "expect " + std::to_string(e.pos.line) + ":" + std::to_string(e.pos.column) +
               " " + e.text + " " + (e.passed ? "pass" : "FAIL") + "\n";
        if (!e.passed)
        {
            if (e.lhs || e.rhs)
                out += "  lhs " + (e.lhs ? to_string(*e.lhs) : std::string{"undefined"}) +
                       ", rhs " + (e.rhs ? to_string(*e.rhs) : std::string{"undefined"}) + "\n";
            if (!e.detail.empty())
                out += "  " + e.detail + "\n";
        }
    }
    out += "expectations " + std::to_string(passed) + "/" + std::to_string(report.expects.size()) +
           " passed\n";
    out += "status " + std::to_string(static_cast<int>(report.status)) + "\n";
    return out;
}

json to_json(const RunReport& report)
{
    json receipts = json::array();
    for (const auto& r : report.receipts)
    {
        json args = json::array();
        for (const auto& a : r.tx.args)
            args.push_back(to_string(a));
        json deltas = json::array();
        for (const auto& [a, d] : r.deltas)
            deltas.push_back({{"address", to_string(a)}, {"delta", d.str()}});
        receipts.push_back({
            {"index", r.index},
            {"tx",
                {{"caller", to_string(r.tx.caller)}, {"callee", to_string(r.tx.callee)},
                    {"proc", r.tx.proc}, {"args", args}, {"amount", r.tx.amount.str()}}},
            {"rule", rule_name(r.rule)},
            {"cause", r.failure ? json(cause_name(r.failure->cause)) : json(nullptr)},
            {"detail", r.failure ? json(r.failure->detail) : json(nullptr)},
            {"fuel_used", r.fuel_used},
            {"deltas", deltas},
        });
    }
    json state = json::array();
    for (const auto& rec : report.final_state)
        state.push_back({{"address", to_string(rec.address)}, {"key", to_string(rec.key)},
            {"value", to_string(rec.value)}});
    json expects = json::array();
    for (const auto& e : report.expects)
        expects.push_back({{"text", e.text}, {"line", e.pos.line}, {"column", e.pos.column},
            {"passed", e.passed}, {"lhs", optional_value(e.lhs)}, {"rhs", optional_value(e.rhs)},
            {"detail", e.detail}});
    return {
        {"scenario", report.scenario},
        {"fuel", report.fuel},
        {"strict_callee", report.strict_callee},
        {"receipts", receipts},
        {"final_state", state},
        {"expects", expects},
        {"status", static_cast<int>(report.status)},
    };
}

RunReport report_from_json(const json& j)
{
    RunReport report;
    report.scenario = j.at("scenario").get<std::string>();
    report.fuel = j.at("fuel").get<std::uint64_t>();
    report.strict_callee = j.at("strict_callee").get<bool>();
    for (const auto& r : j.at("receipts"))
    {
        Receipt rec;
        rec.index = r.at("index").get<std::size_t>();
        const auto& tx = r.at("tx");
        rec.tx.caller = parse_address(tx.at("caller").get<std::string>());
        rec.tx.callee = parse_address(tx.at("callee").get<std::string>());
        rec.tx.proc = tx.at("proc").get<std::string>();
        for (const auto& a : tx.at("args"))
            rec.tx.args.push_back(parse_value(a.get<std::string>()));
        rec.tx.amount = parse_int(tx.at("amount").get<std::string>());
        rec.rule = r.at("rule").get<std::string>() == "Tx1" ? TxRule::Tx1 : TxRule::Tx2;
        if (!r.at("cause").is_null())
            rec.failure = EvalFailure{cause_from_name(r.at("cause").get<std::string>()),
                r.at("detail").get<std::string>()};
        rec.fuel_used = r.at("fuel_used").get<std::uint64_t>();
        for (const auto& d : r.at("deltas"))
            rec.deltas.emplace(parse_address(d.at("address").get<std::string>()),
                parse_int(d.at("delta").get<std::string>()));
        report.receipts.push_back(std::move(rec));
    }
    for (const auto& s : j.at("final_state"))
        report.final_state.push_back({parse_address(s.at("address").get<std::string>()),
            parse_value(s.at("key").get<std::string>()),
            parse_value(s.at("value").get<std::string>())});
    for (const auto& e : j.at("expects"))
        report.expects.push_back({e.at("text").get<std::string>(),
            {e.at("line").get<std::size_t>(), e.at("column").get<std::size_t>()}, e.at("passed").get<bool>(),
            optional_value(e.at("lhs")), optional_value(e.at("rhs")),
            e.at("detail").get<std::string>()});
    report.status = static_cast<ExitStatus>(j.at("status").get<int>());
    return report;
}

namespace
{
TraceSink stream_trace(std::ostream& err)
{
    return [&err](const TraceEvent& ev) {
        err << std::string(2 * ev.depth, ' ') << ev.rule << " at " << to_string(ev.at);
        if (!ev.detail.empty())
            err << ": " << ev.detail;
        err << '\n';
    };
}

void report_genesis_error(const GenesisError& e, const std::filesystem::path& path, std::ostream& err)
{
    err << path.string() << ":" << e.pos().line << ":" << e.pos().column << ": error["
        << genesis_error_name(e.code()) << "]: " << e.what() << "\n";
}

std::optional<std::string> strict_callee_violation(const Scenario& sc)
{
    for (std::size_t i = 0; i < sc.transactions.size(); ++i)
        if (!sc.transactions[i].callee.is_contract())
            return "transaction " + std::to_string(i) + " calls account " +
                   to_string(sc.transactions[i].callee) + " under --strict-callee";
    return std::nullopt;
}

// Loads and validates a scenario for run/state; prints diagnostics on failure.
std::optional<Scenario> load_for_run(const std::filesystem::path& path, const RunFlags& flags,
    std::ostream& err)
{
    try
    {
        Scenario sc = load_scenario(path);
        (void)genesis(sc);
        if (flags.chain.strict_callee)
            if (auto msg = strict_callee_violation(sc))
            {
                err << path.string() << ": error[strict-callee]: " << *msg << "\n";
                return std::nullopt;
            }
        return sc;
    }
    catch (const ParseError& e)
    {
        err << e.diagnostic() << "\n";
    }
    catch (const GenesisError& e)
    {
        report_genesis_error(e, path, err);
    }
    return std::nullopt;
}
}  // namespace

ExitStatus cmd_check(const std::vector<std::filesystem::path>& paths, std::ostream& out,
    std::ostream& err)
{
    ExitStatus status = ExitStatus::Ok;
    for (const auto& path : paths)
    {
        try
        {
            if (path.extension() == ".scn")
                (void)genesis(load_scenario(path));
            else
                (void)parse_contract(read_file(path), {}, path.string());
            out << path.string() << ": ok\n";
        }
        catch (const ParseError& e)
        {
            err << e.diagnostic() << "\n";
            status = ExitStatus::Failed;
        }
        catch (const GenesisError& e)
        {
            report_genesis_error(e, path, err);
            status = ExitStatus::Failed;
        }
    }
    return status;
}

ExitStatus cmd_run(const std::filesystem::path& path, const RunFlags& flags, std::ostream& out,
    std::ostream& err)
{
    auto sc = load_for_run(path, flags, err);
    if (!sc)
        return ExitStatus::ParseError;
    ChainOptions options = flags.chain;
    const TraceSink sink = stream_trace(err);
    if (flags.trace)
        options.trace = &sink;
    try
    {
        const RunReport report = run_scenario(*sc, options);
        if (flags.format == OutputFormat::Json)
            out << to_json(report).dump(2) << "\n";
        else
            out << to_text(report);
        return report.status;
    }
    catch (const InvariantViolation& e)
    {
        err << path.string() << ": invariant violation: " << e.what() << "\n";
        return ExitStatus::InvariantBreach;
    }
}

ExitStatus cmd_state(const std::filesystem::path& path, std::optional<std::size_t> at,
    const RunFlags& flags, std::ostream& out, std::ostream& err)
{
    auto sc = load_for_run(path, flags, err);
    if (!sc)
        return ExitStatus::ParseError;
    const std::size_t k = at.value_or(sc->transactions.size());
    if (k > sc->transactions.size())
    {
        err << path.string() << ": error: --at " << k << " is out of range 0.."
            << sc->transactions.size() << "\n";
        return ExitStatus::ParseError;
    }
    ChainOptions options = flags.chain;
    const TraceSink sink = stream_trace(err);
    if (flags.trace)
        options.trace = &sink;
    try
    {
        const World world = genesis(*sc);
        const auto prefix = std::span<const Transaction>{sc->transactions}.first(k);
        const State s = apply_chain(world.registry, world.state, prefix, options).final_state;
        if (flags.format == OutputFormat::Json)
        {
            json state = json::array();
            for (const auto& rec : export_records(s))
                state.push_back({{"address", to_string(rec.address)},
                    {"key", to_string(rec.key)}, {"value", to_string(rec.value)}});
            out << json{{"scenario", sc->name}, {"at", k}, {"state", state}}.dump(2) << "\n";
        }
        else
            out << dump(s);
        return ExitStatus::Ok;
    }
    catch (const InvariantViolation& e)
    {
        err << path.string() << ": invariant violation: " << e.what() << "\n";
        return ExitStatus::InvariantBreach;
    }
}

std::uint64_t fuel_from_environment()
{
    const char* raw = std::getenv("TINYSOL_FUEL");
    if (!raw || !*raw)
        return default_fuel;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0)
        return default_fuel;
    return v;
}

}  // namespace tinysol
