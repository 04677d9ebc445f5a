// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/interp.hpp>
#include <tinysol/scenario.hpp>

#include "parser.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tinysol
{
std::string to_string(const Transaction& tx)
{
    std::string out = to_string(tx.caller) + " -> " + to_string(tx.callee) + "." + tx.proc + "(";
    for (std::size_t i = 0; i < tx.args.size(); ++i)
        out += (i ? ", " : "") + to_string(tx.args[i]);
    return out + ") : " + tx.amount.str();
}

namespace
{
using detail::Parser;
using detail::TokenKind;

// Rejects constants and store access so the expression can be evaluated
// without a state.
bool closed(const Expr& e)
{
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Apply>)
            {
                for (const auto& a : n.args)
                    if (!closed(*a))
                        return false;
                return true;
            }
            else
                return std::is_same_v<T, Expr::Lit> || std::is_same_v<T, Expr::Addr>;
        },
        e.node);
}

bool mentions_constants(const Expr& e)
{
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Const>)
                return true;
            else if constexpr (std::is_same_v<T, Expr::Apply>)
            {
                for (const auto& a : n.args)
                    if (mentions_constants(*a))
                        return true;
                return false;
            }
            else if constexpr (std::is_same_v<T, Expr::Lookup> || std::is_same_v<T, Expr::Bound>)
                return mentions_constants(*n.key);
            else if constexpr (std::is_same_v<T, Expr::Context>)
                return mentions_constants(*n.body);
            else
                return false;
        },
        e.node);
}

class ScenarioParser
{
public:
    ScenarioParser(std::string_view source, const SourceLoader& loader, std::string file)
      : p_{source, file}, loader_{loader}
    {}

    Scenario run()
    {
        Scenario sc;
        if (p_.accept_word("scenario"))
        {
            if (p_.peek().kind == TokenKind::Ident && !is_item_start())
                sc.name = p_.advance().text;
            else if (p_.peek().kind == TokenKind::String)
                sc.name = p_.advance().text;
        }
        std::vector<std::pair<Address, SourcePos>> callees;
        while (!p_.at_end())
        {
            if (p_.accept_word("accounts"))
                accounts(sc);
            else if (p_.accept_word("contract"))
                sc.contracts.push_back(contract());
            else if (p_.is_word("tx"))
            {
                const SourcePos pos = p_.advance().pos;
                sc.transactions.push_back(transaction());
                callees.emplace_back(sc.transactions.back().callee, pos);
            }
            else if (p_.accept_word("expect"))
                sc.expects.push_back(expectation());
            else
                p_.unexpected("'accounts', 'contract', 'tx' or 'expect'");
        }

        std::set<Address> declared;
        for (const auto& c : sc.contracts)
            declared.insert(c.contract.address);
        for (const auto& [callee, pos] : callees)
            if (callee.is_contract() && !declared.contains(callee))
                p_.fail(ParseErrorCode::UnknownAddress, pos,
                    "transaction calls undeclared contract " + to_string(callee));
        return sc;
    }

private:
    bool is_item_start() const
    {
        return p_.is_word("accounts") || p_.is_word("contract") || p_.is_word("tx") ||
               p_.is_word("expect");
    }

    Value constant(const NameSet& scope = {}, bool key = false)
    {
        const SourcePos pos = p_.peek().pos;
        auto e = p_.expression(scope);
        if (key)
            e = detail::as_key(e, scope);
        if (!closed(*e))
            p_.fail(ParseErrorCode::NonConstant, pos,
                "expected a constant, found '" + print_expr(*e) + "'");
        auto v = eval_expr(State{}, Env{}, Address{}, *e);
        if (!v)
            p_.fail(ParseErrorCode::NonConstant, pos,
                "constant expression is undefined: " + v.failure().detail);
        return std::move(v).value();
    }

    BigInt integer()
    {
        const SourcePos pos = p_.peek().pos;
        Value v = constant();
        if (!v.is_int())
            p_.fail(ParseErrorCode::Syntax, pos, "expected an integer, found " + to_string(v));
        return v.as_int();
    }

    void accounts(Scenario& sc)
    {
        p_.expect_punct("{");
        if (!p_.is_punct("}"))
        {
            do
            {
                const SourcePos pos = p_.peek().pos;
                Address a = p_.expect_address("an account address");
                if (!a.is_account())
                    p_.fail(ParseErrorCode::Syntax, pos,
                        "only '@' accounts belong in 'accounts'; declare contracts with "
                        "'contract'");
                p_.expect_punct(":");
                sc.accounts.push_back({std::move(a), integer(), pos});
            } while (p_.accept_punct(","));
        }
        p_.expect_punct("}");
    }

    ContractDecl contract()
    {
        ContractDecl decl;
        decl.pos = p_.peek().pos;
        Address a = p_.expect_address("a contract address");
        if (!a.is_contract())
            p_.fail(ParseErrorCode::Syntax, decl.pos, "contracts must have '#' addresses");
        p_.expect_word("from");
        const SourcePos src_pos = p_.peek().pos;
        decl.source = p_.expect_string("a contract file name");
        std::string text;
        try
        {
            text = loader_(decl.source);
        }
        catch (const ParseError&)
        {
            throw;
        }
        catch (const std::exception& e)
        {
            p_.fail(ParseErrorCode::Io, src_pos, e.what());
        }
        decl.contract = parse_contract(text, {}, decl.source);
        decl.contract.address = std::move(a);

        if (p_.accept_word("balance"))
            decl.balance = integer();
        if (p_.accept_punct("{"))
        {
            if (!p_.is_punct("}"))
            {
                do
                {
                    Value key = constant({}, true);
                    p_.expect_punct(":");
                    decl.seeds.emplace_back(std::move(key), constant());
                } while (p_.accept_punct(","));
            }
            p_.expect_punct("}");
        }
        return decl;
    }

    Transaction transaction()
    {
        Transaction tx;
        const SourcePos pos = p_.peek().pos;
        tx.caller = p_.expect_address("the calling account");
        if (!tx.caller.is_account())
            p_.fail(ParseErrorCode::Syntax, pos, "transactions originate from '@' accounts");
        p_.expect_punct("->");
        tx.callee = p_.expect_address("the called address");
        p_.expect_punct(".");
        tx.proc = p_.expect_ident("a procedure name");
        p_.expect_punct("(");
        if (!p_.is_punct(")"))
        {
            do
                tx.args.push_back(constant());
            while (p_.accept_punct(","));
        }
        p_.expect_punct(")");
        if (p_.accept_punct(":"))
            tx.amount = integer();
        return tx;
    }

    Expectation expectation()
    {
        Expectation ex;
        ex.pos = p_.peek().pos;
        ex.expr = p_.expression({});
        if (mentions_constants(*ex.expr))
            p_.fail(ParseErrorCode::NonConstant, ex.pos,
                "expectations cannot mention constant names: '" + print_expr(*ex.expr, {}) +
                    "'");
        ex.text = print_expr(*ex.expr, {});
        return ex;
    }

    Parser p_;
    const SourceLoader& loader_;
};
}  // namespace

Scenario parse_scenario(std::string_view source, const SourceLoader& loader, std::string_view file)
{
    ScenarioParser parser{source, loader, std::string{file}};
    Scenario sc = parser.run();
    if (sc.name.empty() && !file.empty())
        sc.name = std::filesystem::path{file}.stem().string();
    return sc;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw ParseError{ParseErrorCode::Io, {}, "cannot open file", path.string()};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Scenario load_scenario(const std::filesystem::path& path)
{
    const auto dir = path.parent_path();
    const SourceLoader loader = [&](const std::string& rel) { return read_file(dir / rel); };
    return parse_scenario(read_file(path), loader, path.string());
}

}  // namespace tinysol
