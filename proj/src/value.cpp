// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/value.hpp>

namespace tinysol
{
std::string to_string(const Address& a)
{
    return (a.is_account() ? "@" : "#") + a.name;
}

Value::Value(Value first, Value second)
  : data_{std::make_shared<const Pair>(Pair{std::move(first), std::move(second)})}
{}

const Value& Value::first() const
{
    return std::get<std::shared_ptr<const Pair>>(data_)->first;
}

const Value& Value::second() const
{
    return std::get<std::shared_ptr<const Pair>>(data_)->second;
}

bool operator==(const Value& a, const Value& b)
{
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Value& a, const Value& b)
{
    if (a.tag() != b.tag())
        return a.tag() <=> b.tag();
    switch (a.tag())
    {
    case Value::Tag::Int:
        return a.as_int().compare(b.as_int()) <=> 0;
    case Value::Tag::Bool:
        return a.as_bool() <=> b.as_bool();
    case Value::Tag::Str:
        return a.as_str().compare(b.as_str()) <=> 0;
    case Value::Tag::Addr:
        return a.as_addr() <=> b.as_addr();
    case Value::Tag::Pair:
        if (auto c = a.first() <=> b.first(); c != 0)
            return c;
        return a.second() <=> b.second();
    }
    return std::strong_ordering::equal;
}

const char* tag_name(Value::Tag t) noexcept
{
    switch (t)
    {
    case Value::Tag::Int:
        return "int";
    case Value::Tag::Bool:
        return "bool";
    case Value::Tag::Str:
        return "string";
    case Value::Tag::Addr:
        return "address";
    case Value::Tag::Pair:
        return "pair";
    }
    return "?";
}

std::string quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s)
    {
        switch (c)
        {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            out += c;
        }
    }
    out += '"';
    return out;
}

std::string to_string(const Value& v)
{
    switch (v.tag())
    {
    case Value::Tag::Int:
        return v.as_int().str();
    case Value::Tag::Bool:
        return v.as_bool() ? "true" : "false";
    case Value::Tag::Str:
        return quote(v.as_str());
    case Value::Tag::Addr:
        return to_string(v.as_addr());
    case Value::Tag::Pair:
        return "(" + to_string(v.first()) + ", " + to_string(v.second()) + ")";
    }
    return {};
}

namespace
{
void append_sized(std::string& out, std::string_view payload)
{
    out += std::to_string(payload.size());
    out += ':';
    out += payload;
}
}  // namespace

std::string canonical_bytes(const Value& v)
{
    std::string out;
    switch (v.tag())
    {
    case Value::Tag::Int:
        out += 'I';
        append_sized(out, v.as_int().str());
        break;
    case Value::Tag::Bool:
        out += v.as_bool() ? "B1" : "B0";
        break;
    case Value::Tag::Str:
        out += 'S';
        append_sized(out, v.as_str());
        break;
    case Value::Tag::Addr:
        out += 'A';
        out += v.as_addr().is_account() ? 'a' : 'c';
        append_sized(out, v.as_addr().name);
        break;
    case Value::Tag::Pair:
        out += 'P';
        out += canonical_bytes(v.first());
        out += canonical_bytes(v.second());
        break;
    }
    return out;
}

}  // namespace tinysol
