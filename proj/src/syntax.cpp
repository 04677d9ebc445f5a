// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace tinysol
{
const char* error_code_name(ParseErrorCode code) noexcept
{
    switch (code)
    {
    case ParseErrorCode::Syntax:
        return "syntax";
    case ParseErrorCode::DuplicateProcedure:
        return "duplicate-procedure";
    case ParseErrorCode::ReservedFormal:
        return "reserved-formal";
    case ParseErrorCode::DuplicateFormal:
        return "duplicate-formal";
    case ParseErrorCode::BalanceLhs:
        return "balance-lhs";
    case ParseErrorCode::UnknownAddress:
        return "unknown-address";
    case ParseErrorCode::NonConstant:
        return "non-constant";
    case ParseErrorCode::Io:
        return "io";
    }
    return "?";
}

namespace
{
std::string format_diagnostic(
    const std::string& file, SourcePos pos, ParseErrorCode code, const std::string& message)
{
    std::ostringstream out;
    out << (file.empty() ? "<input>" : file);
    if (pos.line != 0)
        out << ':' << pos.line << ':' << pos.column;
    out << ": error[" << error_code_name(code) << "]: " << message;
    return out.str();
}
}  // namespace

ParseError::ParseError(ParseErrorCode code, SourcePos pos, std::string message, std::string file)
  : std::runtime_error{format_diagnostic(file, pos, code, message)},
    code_{code},
    pos_{pos},
    message_{std::move(message)},
    file_{std::move(file)}
{}

std::string ParseError::diagnostic() const
{
    return what();
}

NameSet procedure_scope(const std::vector<std::string>& formals)
{
    NameSet scope{formals.begin(), formals.end()};
    scope.insert("sender");
    scope.insert("value");
    return scope;
}

namespace
{
constexpr std::array keywords = {"contract", "skip", "throw", "if", "then", "else", "while",
    "do", "true", "false", "not", "hash", "fst", "snd"};

// Longest match first.
constexpr std::array puncts = {":=", "::", "->", "==", "!=", "<=", ">=", "&&", "||", "{", "}",
    "(", ")", ",", ";", ":", ".", "!", "<", ">", "+", "-", "*", "/", "%", "^", "?"};

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
}  // namespace

bool is_keyword(std::string_view s) noexcept
{
    return std::find(keywords.begin(), keywords.end(), s) != keywords.end();
}

bool is_identifier(std::string_view s) noexcept
{
    if (s.empty() || !ident_start(s.front()))
        return false;
    return std::all_of(s.begin(), s.end(), ident_char);
}

namespace detail
{
std::vector<Token> tokenize(std::string_view src, const std::string& file)
{
    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    auto bump = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i)
        {
            if (src[i] == '\n')
            {
                ++line;
                col = 1;
            }
            else
                ++col;
        }
    };
    auto error = [&](SourcePos pos, std::string msg) {
        throw ParseError{ParseErrorCode::Syntax, pos, std::move(msg), file};
    };

    while (i < src.size())
    {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c)))
        {
            bump(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/')
        {
            while (i < src.size() && src[i] != '\n')
                bump(1);
            continue;
        }

        Token tok;
        tok.pos = {line, col};
        if (ident_start(c))
        {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j]))
                ++j;
            tok.kind = TokenKind::Ident;
            tok.text = std::string{src.substr(i, j - i)};
            bump(j - i);
        }
        else if (c == '@' || c == '#')
        {
            std::size_t j = i + 1;
            while (j < src.size() && ident_char(src[j]))
                ++j;
            if (j == i + 1)
                error(tok.pos, std::string{"expected a name after '"} + c + "'");
            tok.kind = c == '@' ? TokenKind::Account : TokenKind::ContractAddr;
            tok.text = std::string{src.substr(i + 1, j - i - 1)};
            bump(j - i);
        }
        else if (std::isdigit(static_cast<unsigned char>(c)))
        {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            if (j < src.size() && ident_start(src[j]))
                error(tok.pos, "malformed number");
            tok.kind = TokenKind::Int;
            tok.text = std::string{src.substr(i, j - i)};
            bump(j - i);
        }
        else if (c == '"')
        {
            bump(1);
            std::string text;
            for (;;)
            {
                if (i >= src.size() || src[i] == '\n')
                    error(tok.pos, "unterminated string literal");
                const char d = src[i];
                if (d == '"')
                {
                    bump(1);
                    break;
                }
                if (d == '\\')
                {
                    if (i + 1 >= src.size())
                        error(tok.pos, "unterminated string literal");
                    const char e = src[i + 1];
                    switch (e)
                    {
                    case '"':
                    case '\\':
                        text += e;
                        break;
                    case 'n':
                        text += '\n';
                        break;
                    case 't':
                        text += '\t';
                        break;
                    default:
                        error({line, col}, std::string{"unknown escape '\\"} + e + "'");
                    }
                    bump(2);
                    continue;
                }
                text += d;
                bump(1);
            }
            tok.kind = TokenKind::String;
            tok.text = std::move(text);
        }
        else
        {
            const auto* match = std::find_if(puncts.begin(), puncts.end(),
                [&](std::string_view p) { return src.substr(i, p.size()) == p; });
            if (match == puncts.end())
                error(tok.pos, std::string{"unexpected character '"} + c + "'");
            tok.kind = TokenKind::Punct;
            tok.text = *match;
            bump(tok.text.size());
        }
        out.push_back(std::move(tok));
    }

    Token end;
    end.kind = TokenKind::End;
    end.pos = {line, col};
    out.push_back(std::move(end));
    return out;
}

Expr::Ptr as_key(const Expr::Ptr& e, const NameSet& scope)
{
    if (const auto* c = std::get_if<Expr::Const>(&e->node); c && !scope.contains(c->name))
        return ast::lit(Value{c->name});
    return e;
}

Parser::Parser(std::string_view source, std::string file)
  : tokens_{tokenize(source, file)}, file_{std::move(file)}
{}

const Token& Parser::peek(std::size_t ahead) const
{
    return tokens_[std::min(cursor_ + ahead, tokens_.size() - 1)];
}

const Token& Parser::advance()
{
    const Token& t = tokens_[cursor_];
    if (cursor_ + 1 < tokens_.size())
        ++cursor_;
    return t;
}

bool Parser::is_punct(std::string_view p, std::size_t ahead) const
{
    const auto& t = peek(ahead);
    return t.kind == TokenKind::Punct && t.text == p;
}

bool Parser::is_word(std::string_view w, std::size_t ahead) const
{
    const auto& t = peek(ahead);
    return t.kind == TokenKind::Ident && t.text == w;
}

bool Parser::accept_punct(std::string_view p)
{
    if (!is_punct(p))
        return false;
    advance();
    return true;
}

bool Parser::accept_word(std::string_view w)
{
    if (!is_word(w))
        return false;
    advance();
    return true;
}

const Token& Parser::expect_punct(std::string_view p)
{
    if (!is_punct(p))
        unexpected("'" + std::string{p} + "'");
    return advance();
}

void Parser::expect_word(std::string_view w)
{
    if (!accept_word(w))
        unexpected("'" + std::string{w} + "'");
}

std::string Parser::expect_ident(std::string_view what)
{
    const auto& t = peek();
    if (t.kind != TokenKind::Ident || is_keyword(t.text))
        unexpected(what);
    return advance().text;
}

Address Parser::expect_address(std::string_view what)
{
    const auto& t = peek();
    if (t.kind == TokenKind::Account)
        return Address::account(advance().text);
    if (t.kind == TokenKind::ContractAddr)
        return Address::contract(advance().text);
    unexpected(what);
}

std::string Parser::expect_string(std::string_view what)
{
    if (peek().kind != TokenKind::String)
        unexpected(what);
    return advance().text;
}

void Parser::fail(ParseErrorCode code, SourcePos pos, std::string message) const
{
    throw ParseError{code, pos, std::move(message), file_};
}

void Parser::unexpected(std::string_view wanted) const
{
    const auto& t = peek();
    std::string found;
    switch (t.kind)
    {
    case TokenKind::End:
        found = "end of input";
        break;
    case TokenKind::String:
        found = quote(t.text);
        break;
    case TokenKind::Account:
        found = "'@" + t.text + "'";
        break;
    case TokenKind::ContractAddr:
        found = "'#" + t.text + "'";
        break;
    default:
        found = "'" + t.text + "'";
    }
    fail(ParseErrorCode::Syntax, t.pos,
        "expected " + std::string{wanted} + ", found " + found);
}

Expr::Ptr Parser::expression(const NameSet& scope)
{
    return or_expr(scope);
}

Expr::Ptr Parser::or_expr(const NameSet& scope)
{
    auto lhs = and_expr(scope);
    while (accept_punct("||"))
        lhs = ast::apply(Operator::Or, {lhs, and_expr(scope)});
    return lhs;
}

Expr::Ptr Parser::and_expr(const NameSet& scope)
{
    auto lhs = not_expr(scope);
    while (accept_punct("&&"))
        lhs = ast::apply(Operator::And, {lhs, not_expr(scope)});
    return lhs;
}

Expr::Ptr Parser::not_expr(const NameSet& scope)
{
    if (accept_word("not"))
        return ast::apply(Operator::Not, {not_expr(scope)});
    return cmp_expr(scope);
}

Expr::Ptr Parser::cmp_expr(const NameSet& scope)
{
    static constexpr std::array<std::pair<std::string_view, Operator>, 6> table = {{
        {"==", Operator::Eq},
        {"!=", Operator::Ne},
        {"<", Operator::Lt},
        {"<=", Operator::Le},
        {">", Operator::Gt},
        {">=", Operator::Ge},
    }};
    auto lhs = add_expr(scope);
    for (const auto& [sym, op] : table)
    {
        if (accept_punct(sym))
        {
            auto rhs = add_expr(scope);
            for (const auto& [sym2, op2] : table)
                if (is_punct(sym2))
                    fail(ParseErrorCode::Syntax, peek().pos,
                        "comparison operators do not chain; add parentheses");
            return ast::apply(op, {lhs, rhs});
        }
    }
    return lhs;
}

Expr::Ptr Parser::add_expr(const NameSet& scope)
{
    auto lhs = mul_expr(scope);
    for (;;)
    {
        if (accept_punct("+"))
            lhs = ast::apply(Operator::Add, {lhs, mul_expr(scope)});
        else if (accept_punct("-"))
            lhs = ast::apply(Operator::Sub, {lhs, mul_expr(scope)});
        else if (accept_punct("^"))
            lhs = ast::apply(Operator::Concat, {lhs, mul_expr(scope)});
        else
            return lhs;
    }
}

Expr::Ptr Parser::mul_expr(const NameSet& scope)
{
    auto lhs = unary(scope);
    for (;;)
    {
        if (accept_punct("*"))
            lhs = ast::apply(Operator::Mul, {lhs, unary(scope)});
        else if (accept_punct("/"))
            lhs = ast::apply(Operator::Div, {lhs, unary(scope)});
        else if (accept_punct("%"))
            lhs = ast::apply(Operator::Mod, {lhs, unary(scope)});
        else
            return lhs;
    }
}

Expr::Ptr Parser::unary(const NameSet& scope)
{
    if (accept_punct("-"))
    {
        if (peek().kind == TokenKind::Int)
            return ast::lit(Value{BigInt{"-" + advance().text}});
        return ast::apply(Operator::Neg, {unary(scope)});
    }
    if (accept_punct("?"))
        return ast::lookup(as_key(unary(scope), scope));
    return postfix(scope);
}

Expr::Ptr Parser::postfix(const NameSet& scope)
{
    auto e = primary(scope);
    while (accept_punct("?"))
        e = ast::bound(as_key(e, scope));
    return e;
}

Expr::Ptr Parser::primary(const NameSet& scope)
{
    const Token& t = peek();
    switch (t.kind)
    {
    case TokenKind::Int:
        return ast::lit(Value{BigInt{advance().text}});
    case TokenKind::String:
        return ast::lit(Value{advance().text});
    case TokenKind::Account:
    case TokenKind::ContractAddr: {
        Address a = expect_address("an address");
        if (accept_punct("::"))
            return ast::context(std::move(a), unary(scope));
        return ast::addr(std::move(a));
    }
    case TokenKind::Ident: {
        if (accept_word("true"))
            return ast::lit(Value{true});
        if (accept_word("false"))
            return ast::lit(Value{false});
        for (auto [word, op] : {std::pair{"hash", Operator::Hash}, std::pair{"fst", Operator::Fst},
                 std::pair{"snd", Operator::Snd}})
        {
            if (accept_word(word))
            {
                expect_punct("(");
                auto arg = expression(scope);
                expect_punct(")");
                return ast::apply(op, {arg});
            }
        }
        if (is_keyword(t.text))
            unexpected("an expression");
        return ast::name(advance().text);
    }
    case TokenKind::Punct:
        if (accept_punct("("))
        {
            auto first = expression(scope);
            if (accept_punct(","))
            {
                auto second = expression(scope);
                expect_punct(")");
                return ast::apply(Operator::MakePair, {first, second});
            }
            expect_punct(")");
            return first;
        }
        break;
    case TokenKind::End:
        break;
    }
    unexpected("an expression");
}

Stmt::Ptr Parser::statement_list(const NameSet& scope)
{
    std::vector<Stmt::Ptr> items;
    while (!is_punct("}"))
    {
        items.push_back(statement(scope));
        if (!accept_punct(";"))
            break;
    }
    if (items.empty())
        return ast::skip();
    Stmt::Ptr acc = items.back();
    for (auto it = items.rbegin() + 1; it != items.rend(); ++it)
        acc = ast::seq(*it, acc);
    return acc;
}

Stmt::Ptr Parser::statement(const NameSet& scope)
{
    if (accept_word("skip"))
        return ast::skip();
    if (accept_word("throw"))
        return ast::throw_();
    if (accept_punct("{"))
    {
        auto body = statement_list(scope);
        expect_punct("}");
        return body;
    }
    if (accept_word("if"))
    {
        auto cond = expression(scope);
        expect_word("then");
        auto then_branch = statement(scope);
        Stmt::Ptr else_branch;
        if (accept_word("else"))
            else_branch = statement(scope);
        return ast::if_(cond, then_branch, else_branch);
    }
    if (accept_word("while"))
    {
        auto cond = expression(scope);
        expect_word("do");
        return ast::while_(cond, statement(scope));
    }

    const SourcePos start = peek().pos;
    auto head = expression(scope);
    if (accept_punct(":="))
    {
        auto lhs = as_key(head, scope);
        if (const auto* l = std::get_if<Expr::Lit>(&lhs->node);
            l && l->value.is_str() && l->value.as_str() == "balance")
            fail(ParseErrorCode::BalanceLhs, start, "the key 'balance' cannot be assigned");
        return ast::assign(lhs, expression(scope));
    }
    if (accept_punct("!"))
        return ast::transfer(head, expression(scope));
    if (accept_punct("."))
    {
        std::string proc = expect_ident("a procedure name");
        expect_punct("(");
        std::vector<Expr::Ptr> args;
        if (!is_punct(")"))
        {
            do
                args.push_back(expression(scope));
            while (accept_punct(","));
        }
        expect_punct(")");
        Expr::Ptr amount;
        if (accept_punct(":"))
            amount = expression(scope);
        return ast::call(head, std::move(proc), std::move(args), amount);
    }
    unexpected("':=', '!' or '.' after expression");
}

Procedure Parser::procedure()
{
    Procedure proc;
    proc.name = expect_ident("a procedure name");
    expect_punct("(");
    if (!is_punct(")"))
    {
        do
        {
            const SourcePos pos = peek().pos;
            std::string formal = expect_ident("a formal parameter");
            if (formal == "sender" || formal == "value")
                fail(ParseErrorCode::ReservedFormal, pos,
                    "'" + formal + "' cannot be a formal parameter of '" + proc.name + "'");
            if (std::find(proc.formals.begin(), proc.formals.end(), formal) != proc.formals.end())
                fail(ParseErrorCode::DuplicateFormal, pos,
                    "duplicate formal parameter '" + formal + "' in '" + proc.name + "'");
            proc.formals.push_back(std::move(formal));
        } while (accept_punct(","));
    }
    expect_punct(")");
    expect_punct("{");
    proc.body = statement_list(procedure_scope(proc.formals));
    expect_punct("}");
    return proc;
}

Contract Parser::contract()
{
    expect_word("contract");
    Contract c;
    const SourcePos pos = peek().pos;
    c.address = expect_address("a contract address");
    if (!c.address.is_contract())
        fail(ParseErrorCode::Syntax, pos, "contracts must have '#' addresses");
    expect_punct("{");
    while (!is_punct("}"))
    {
        const SourcePos ppos = peek().pos;
        Procedure p = procedure();
        if (c.find(p.name) != nullptr)
            fail(ParseErrorCode::DuplicateProcedure, ppos,
                "procedure '" + p.name + "' is defined more than once");
        c.procedures.push_back(std::move(p));
    }
    expect_punct("}");
    return c;
}
}  // namespace detail

Contract parse_contract(std::string_view source, const ParseOptions& options, std::string_view file)
{
    detail::Parser p{source, std::string{file}};
    Contract c = p.contract();
    if (!p.at_end())
        p.unexpected("end of input");
    return options.desugar ? desugar(c) : c;
}

Stmt::Ptr parse_stmt(std::string_view source, const NameSet& scope, const ParseOptions& options)
{
    detail::Parser p{source, {}};
    auto s = p.statement_list(scope);
    if (!p.at_end())
        p.unexpected("end of input");
    return options.desugar ? desugar(s) : s;
}

Expr::Ptr parse_expr(std::string_view source, const NameSet& scope)
{
    detail::Parser p{source, {}};
    auto e = p.expression(scope);
    if (!p.at_end())
        p.unexpected("end of input");
    return e;
}

namespace
{
void check_no_balance_lhs(const Stmt& s)
{
    std::visit(
        [](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Stmt::Assign>)
            {
                if (const auto* l = std::get_if<Expr::Lit>(&n.lhs->node);
                    l && l->value.is_str() && l->value.as_str() == "balance")
                    throw ParseError{ParseErrorCode::BalanceLhs, {},
                        "the key 'balance' cannot be assigned"};
            }
            else if constexpr (std::is_same_v<T, Stmt::Seq>)
            {
                check_no_balance_lhs(*n.first);
                check_no_balance_lhs(*n.second);
            }
            else if constexpr (std::is_same_v<T, Stmt::If>)
            {
                check_no_balance_lhs(*n.then_branch);
                if (n.else_branch)
                    check_no_balance_lhs(*n.else_branch);
            }
            else if constexpr (std::is_same_v<T, Stmt::While>)
                check_no_balance_lhs(*n.body);
        },
        s.node);
}
}  // namespace

void validate(const Contract& contract)
{
    if (!contract.address.is_contract())
        throw ParseError{ParseErrorCode::Syntax, {}, "contracts must have '#' addresses"};
    for (std::size_t i = 0; i < contract.procedures.size(); ++i)
    {
        const auto& p = contract.procedures[i];
        for (std::size_t j = 0; j < i; ++j)
            if (contract.procedures[j].name == p.name)
                throw ParseError{ParseErrorCode::DuplicateProcedure, {},
                    "procedure '" + p.name + "' is defined more than once"};
        for (std::size_t k = 0; k < p.formals.size(); ++k)
        {
            const auto& x = p.formals[k];
            if (x == "sender" || x == "value")
                throw ParseError{ParseErrorCode::ReservedFormal, {},
                    "'" + x + "' cannot be a formal parameter of '" + p.name + "'"};
            if (std::find(p.formals.begin(), p.formals.begin() + static_cast<std::ptrdiff_t>(k),
                    x) != p.formals.begin() + static_cast<std::ptrdiff_t>(k))
                throw ParseError{ParseErrorCode::DuplicateFormal, {},
                    "duplicate formal parameter '" + x + "' in '" + p.name + "'"};
        }
        if (!p.body)
            throw ParseError{ParseErrorCode::Syntax, {}, "procedure '" + p.name + "' has no body"};
        check_no_balance_lhs(*p.body);
    }
}

Stmt::Ptr desugar(const Stmt::Ptr& stmt)
{
    return std::visit(
        [&](const auto& n) -> Stmt::Ptr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Stmt::Seq>)
                return ast::seq(desugar(n.first), desugar(n.second));
            else if constexpr (std::is_same_v<T, Stmt::If>)
                return ast::if_(n.cond, desugar(n.then_branch),
                    n.else_branch ? desugar(n.else_branch) : ast::skip());
            else if constexpr (std::is_same_v<T, Stmt::While>)
                return ast::while_(n.cond, desugar(n.body));
            else if constexpr (std::is_same_v<T, Stmt::Call>)
                return n.amount ? stmt :
                                  ast::call(n.target, n.proc, n.args, ast::lit(Value{0}));
            else if constexpr (std::is_same_v<T, Stmt::Transfer>)
                return ast::call(n.target, skip_procedure_name, {}, n.amount);
            else
                return stmt;
        },
        stmt->node);
}

Contract desugar(const Contract& contract)
{
    Contract out{contract.address, {}};
    for (const auto& p : contract.procedures)
        out.procedures.push_back({p.name, p.formals, desugar(p.body)});
    return out;
}

bool is_desugared(const Stmt& stmt)
{
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Stmt::Seq>)
                return is_desugared(*n.first) && is_desugared(*n.second);
            else if constexpr (std::is_same_v<T, Stmt::If>)
                return n.else_branch && is_desugared(*n.then_branch) &&
                       is_desugared(*n.else_branch);
            else if constexpr (std::is_same_v<T, Stmt::While>)
                return is_desugared(*n.body);
            else if constexpr (std::is_same_v<T, Stmt::Call>)
                return n.amount != nullptr;
            else if constexpr (std::is_same_v<T, Stmt::Transfer>)
                return false;
            else
                return true;
        },
        stmt.node);
}

// ---------------------------------------------------------------------------
// Printer. Precedence levels mirror the parser: 1 `||`, 2 `&&`, 3 `not`,
// 4 comparisons, 5 additive, 6 multiplicative, 7 prefix (`-`, `?`, `::`),
// 8 postfix `?`, 9 atoms.

namespace
{
int level_of(const Expr& e)
{
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Lit>)
                return n.value.is_int() && n.value.as_int() < 0 ? 7 : 9;
            else if constexpr (std::is_same_v<T, Expr::Apply>)
            {
                switch (n.op)
                {
                case Operator::Or:
                    return 1;
                case Operator::And:
                    return 2;
                case Operator::Not:
                    return 3;
                case Operator::Eq:
                case Operator::Ne:
                case Operator::Lt:
                case Operator::Le:
                case Operator::Gt:
                case Operator::Ge:
                    return 4;
                case Operator::Add:
                case Operator::Sub:
                case Operator::Concat:
                    return 5;
                case Operator::Mul:
                case Operator::Div:
                case Operator::Mod:
                    return 6;
                case Operator::Neg:
                    return 7;
                default:
                    return 9;
                }
            }
            else if constexpr (std::is_same_v<T, Expr::Lookup> || std::is_same_v<T, Expr::Context>)
                return 7;
            else if constexpr (std::is_same_v<T, Expr::Bound>)
                return 8;
            else
                return 9;
        },
        e.node);
}

std::string print_at(const Expr& e, const NameSet& scope, int min_level);

std::string print_key(const Expr& e, const NameSet& scope, int min_level)
{
    if (const auto* l = std::get_if<Expr::Lit>(&e.node); l && l->value.is_str())
    {
        const auto& s = l->value.as_str();
        if (is_identifier(s) && !is_keyword(s) && !scope.contains(s))
            return s;
    }
    return print_at(e, scope, min_level);
}

std::string print_at(const Expr& e, const NameSet& scope, int min_level)
{
    std::string body = std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Lit>)
                return to_string(n.value);
            else if constexpr (std::is_same_v<T, Expr::Const>)
                return n.name;
            else if constexpr (std::is_same_v<T, Expr::Addr>)
                return to_string(n.address);
            else if constexpr (std::is_same_v<T, Expr::Lookup>)
                return "?" + print_key(*n.key, scope, 7);
            else if constexpr (std::is_same_v<T, Expr::Bound>)
                return print_key(*n.key, scope, 8) + "?";
            else if constexpr (std::is_same_v<T, Expr::Context>)
                return to_string(n.address) + " :: " + print_at(*n.body, scope, 7);
            else
            {
                const auto& a = n.args;
                switch (n.op)
                {
                case Operator::Not:
                    return "not " + print_at(*a[0], scope, 3);
                case Operator::Neg: {
                    const auto* l = std::get_if<Expr::Lit>(&a[0]->node);
                    if (l && l->value.is_int())
                        return "-(" + to_string(l->value) + ")";
                    return "-" + print_at(*a[0], scope, 7);
                }
                case Operator::Hash:
                case Operator::Fst:
                case Operator::Snd:
                    return std::string{operator_symbol(n.op)} + "(" + print_at(*a[0], scope, 0) +
                           ")";
                case Operator::MakePair:
                    return "(" + print_at(*a[0], scope, 0) + ", " + print_at(*a[1], scope, 0) +
                           ")";
                default: {
                    const int own = level_of(e);
                    const int lhs_level = own == 4 ? 5 : own;
                    return print_at(*a[0], scope, lhs_level) + " " + operator_symbol(n.op) + " " +
                           print_at(*a[1], scope, own + 1);
                }
                }
            }
        },
        e.node);
    if (level_of(e) < min_level)
        return "(" + body + ")";
    return body;
}

bool is_simple(const Stmt& s)
{
    return !std::holds_alternative<Stmt::Seq>(s.node) &&
           !std::holds_alternative<Stmt::If>(s.node) &&
           !std::holds_alternative<Stmt::While>(s.node);
}

std::string pad(int indent)
{
    return std::string(static_cast<std::size_t>(indent) * 2, ' ');
}

std::string print_block(const Stmt& s, const NameSet& scope, int indent)
{
    return "{\n" + pad(indent + 1) + print_stmt(s, scope, indent + 1) + "\n" + pad(indent) + "}";
}

std::string print_args(const std::vector<Expr::Ptr>& args, const NameSet& scope)
{
    std::string out = "(";
    for (std::size_t i = 0; i < args.size(); ++i)
    {
        if (i != 0)
            out += ", ";
        out += print_at(*args[i], scope, 0);
    }
    return out + ")";
}
}  // namespace

std::string print_expr(const Expr& e, const NameSet& scope)
{
    return print_at(e, scope, 0);
}

std::string print_stmt(const Stmt& s, const NameSet& scope, int indent)
{
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Stmt::Skip>)
                return "skip";
            else if constexpr (std::is_same_v<T, Stmt::Throw>)
                return "throw";
            else if constexpr (std::is_same_v<T, Stmt::Assign>)
                return print_key(*n.lhs, scope, 0) + " := " + print_at(*n.rhs, scope, 0);
            else if constexpr (std::is_same_v<T, Stmt::Seq>)
            {
                // Left-nested sequences need braces to keep their shape.
                std::string first = std::holds_alternative<Stmt::Seq>(n.first->node) ?
                                        print_block(*n.first, scope, indent) :
                                        print_stmt(*n.first, scope, indent);
                return first + ";\n" + pad(indent) + print_stmt(*n.second, scope, indent);
            }
            else if constexpr (std::is_same_v<T, Stmt::If>)
            {
                std::string out = "if " + print_at(*n.cond, scope, 0) + " then ";
                out += is_simple(*n.then_branch) ? print_stmt(*n.then_branch, scope, indent) :
                                                   print_block(*n.then_branch, scope, indent);
                if (n.else_branch)
                {
                    out += " else ";
                    const bool bare = is_simple(*n.else_branch) ||
                                      std::holds_alternative<Stmt::If>(n.else_branch->node);
                    out += bare ? print_stmt(*n.else_branch, scope, indent) :
                                  print_block(*n.else_branch, scope, indent);
                }
                return out;
            }
            else if constexpr (std::is_same_v<T, Stmt::While>)
            {
                return "while " + print_at(*n.cond, scope, 0) + " do " +
                       (is_simple(*n.body) ? print_stmt(*n.body, scope, indent) :
                                             print_block(*n.body, scope, indent));
            }
            else if constexpr (std::is_same_v<T, Stmt::Call>)
            {
                std::string out =
                    print_at(*n.target, scope, 0) + "." + n.proc + print_args(n.args, scope);
                if (n.amount)
                    out += " : " + print_at(*n.amount, scope, 0);
                return out;
            }
            else
                return print_at(*n.target, scope, 0) + " ! " + print_at(*n.amount, scope, 0);
        },
        s.node);
}

std::string print_contract(const Contract& c)
{
    std::string out = "contract " + to_string(c.address) + " {\n";
    for (const auto& p : c.procedures)
    {
        out += pad(1) + p.name + "(";
        for (std::size_t i = 0; i < p.formals.size(); ++i)
            out += (i ? ", " : "") + p.formals[i];
        out += ") {\n" + pad(2) + print_stmt(*p.body, procedure_scope(p.formals), 2) + "\n" +
               pad(1) + "}\n";
    }
    return out + "}\n";
}

}  // namespace tinysol
