// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/corpus.hpp>
#include <tinysol/report.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace tinysol;

namespace
{
const std::filesystem::path root{TINYSOL_TEST_CORPUS};

Scenario load(const char* rel)
{
    return load_scenario(root / rel);
}

std::vector<Address> all_addresses(const State& a, const State& b)
{
    auto xs = a.addresses();
    for (const auto& x : b.addresses())
        xs.push_back(x);
    return xs;
}

std::vector<TxRule> rules(const ChainResult& r)
{
    std::vector<TxRule> out;
    for (const auto& rec : r.receipts)
        out.push_back(rec.rule);
    return out;
}

ChainResult replay(const Scenario& sc, const ChainOptions& opts = {})
{
    const World w = genesis(sc);
    return apply_chain(w.registry, w.state, sc.transactions, opts);
}

const Address account(const char* n)
{
    return Address::account(n);
}

const Address contract(const char* n)
{
    return Address::contract(n);
}

constexpr TxRule Tx1 = TxRule::Tx1;
constexpr TxRule Tx2 = TxRule::Tx2;
}  // namespace

TEST(corpus, lists_every_case)
{
    std::set<std::string> names;
    for (const auto& c : corpus_cases(root))
    {
        names.insert(c.name);
        EXPECT_FALSE(c.note.empty()) << c.name;
        EXPECT_FALSE(c.contracts.empty()) << c.name;
    }
    for (const char* n : {"wallet", "wallet_unauthorized", "bot", "harmless_reentrancy",
             "vicious_reentrancy", "example6", "extended_wallet", "escrow", "lottery", "ponzi"})
        EXPECT_TRUE(names.contains(n)) << n;
}

TEST(corpus, every_scenario_meets_its_expectations_and_conserves_currency)
{
    std::size_t scenarios = 0;
    for (const auto& c : corpus_cases(root))
        for (const auto& path : c.scenarios)
        {
            ++scenarios;
            const Scenario sc = load_scenario(path);
            const RunReport report = run_scenario(sc);
            EXPECT_EQ(report.status, ExitStatus::Ok) << path << "\n" << to_text(report);
            EXPECT_FALSE(report.expects.empty()) << path;

            const World w = genesis(sc);
            const auto r = apply_chain(w.registry, w.state, sc.transactions);
            const auto addrs = all_addresses(w.state, r.final_state);
            EXPECT_EQ(total_supply(w.state, addrs), total_supply(r.final_state, addrs)) << path;
        }
    EXPECT_GE(scenarios, 16u);
}

TEST(corpus, wallet_payment_moves_two_units)
{
    const Scenario sc = load("wallet/deposit_pay.scn");
    const auto r = replay(sc);
    EXPECT_EQ(r.receipts[1].deltas,
        (std::map<Address, BigInt>{{account("B"), 2}, {contract("C"), -2}}));
}

TEST(corpus, unauthorized_and_bot_transactions_are_identities)
{
    for (const char* rel : {"wallet_unauthorized/unauthorized.scn", "bot/bot.scn"})
    {
        const Scenario sc = load(rel);
        const World w = genesis(sc);
        const auto r = apply_chain(w.registry, w.state, sc.transactions);
        for (const auto& rec : r.receipts)
            EXPECT_EQ(rec.rule, Tx2) << rel << " tx " << rec.index;
        EXPECT_EQ(export_records(r.final_state), export_records(w.state)) << rel;
    }
    const auto bot = replay(load("bot/bot.scn"));
    std::vector<Cause> causes;
    for (const auto& rec : bot.receipts)
        causes.push_back(rec.failure->cause);
    EXPECT_EQ(causes, (std::vector<Cause>{Cause::UndefinedKeyRead, Cause::UndefinedKeyRead,
                          Cause::UndefinedKeyRead, Cause::Throw, Cause::UndefinedKeyRead,
                          Cause::FuelExhausted}));
}

TEST(corpus, example_chain)
{
    const auto r = replay(load("example6/chain.scn"));
    EXPECT_EQ(rules(r), (std::vector<TxRule>{Tx1, Tx1, Tx2}));
    EXPECT_EQ(r.final_state.balance(account("A")), 2);
    EXPECT_EQ(r.final_state.balance(contract("C")), 1);
    EXPECT_EQ(r.final_state.balance(account("B")), 2);
}

TEST(corpus, vicious_reentrancy_nests_n_plus_one_activations)
{
    for (int n : {1, 3, 10})
    {
        const Scenario sc = load(("vicious_reentrancy/drain_" + std::to_string(n) + ".scn").c_str());
        std::size_t live = 0, most = 0;
        std::vector<bool> stack;
        const TraceSink sink = [&](const TraceEvent& e) {
            if (e.rule == "call")
            {
                stack.push_back(e.at == contract("A"));
                live += stack.back();
                most = std::max(most, live);
            }
            else if (e.rule == "return")
            {
                live -= stack.back();
                stack.pop_back();
            }
        };
        const auto r = replay(sc, {default_fuel, &sink});
        EXPECT_EQ(most, std::size_t(n) + 1);
        EXPECT_EQ(r.final_state.balance(contract("B")), n);
        EXPECT_EQ(r.final_state.get(contract("A"), Value{"k"}), Value{true});
    }
}

TEST(corpus, escrow_dispute_split_sums_to_the_deposit)
{
    const auto r = replay(load("escrow/dispute.scn"));
    const State& s = r.final_state;
    const BigInt buyer = s.balance(account("Buyer")), seller = s.balance(account("Seller")),
                 fee = s.balance(contract("Oracle"));
    EXPECT_EQ(buyer, 40);
    EXPECT_EQ(fee, 1);
    EXPECT_EQ(seller, 59);
    EXPECT_EQ(buyer + seller + fee, 100);
    EXPECT_EQ(rules(r), (std::vector<TxRule>{Tx1, Tx1, Tx2, Tx1, Tx2, Tx2, Tx2, Tx1}));
}

TEST(corpus, escrow_split_for_every_percentage)
{
    // Independent arithmetic: fee = floor(d/100), buyer = floor(d*z/100), seller = rest.
    for (int deposit : {1, 99, 100, 101, 250, 999})
        for (int z = 0; z <= 99; z += 7)
        {
            Scenario sc = load("escrow/dispute.scn");
            sc.accounts[0].balance = deposit;
            sc.transactions[1].amount = deposit;
            sc.transactions.back().args = {Value{z}};
            sc.expects.clear();
            const auto r = replay(sc);
            ASSERT_EQ(r.receipts.back().rule, Tx1) << deposit << " " << z;
            const int fee = deposit / 100, buyer = deposit * z / 100;
            EXPECT_EQ(r.final_state.balance(contract("Oracle")), fee);
            EXPECT_EQ(r.final_state.balance(account("Buyer")), buyer);
            EXPECT_EQ(r.final_state.balance(account("Seller")), deposit - fee - buyer);
        }
}

TEST(corpus, ponzi_payouts)
{
    const auto r = replay(load("ponzi/three_investors.scn"));
    ASSERT_EQ(r.receipts.size(), 6u);
    const Address owner = account("Owner"), p = contract("Ponzi");
    // Each join: owner takes a tenth, earlier investors are paid twice their stake.
    EXPECT_EQ(r.receipts[1].deltas, (std::map<Address, BigInt>{{owner, 1}, {account("I1"), -10},
                                        {p, 9}}));
    EXPECT_EQ(r.receipts[2].deltas, (std::map<Address, BigInt>{{owner, 3}, {account("I1"), 20},
                                        {account("I2"), -30}, {p, 7}}));
    EXPECT_EQ(r.receipts[3].deltas, (std::map<Address, BigInt>{{owner, 5}, {account("I2"), 60},
                                        {account("I3"), -50}, {p, -15}}));
    EXPECT_EQ(r.receipts[4].rule, Tx2);
    EXPECT_EQ(r.receipts[5].rule, Tx2);
}

TEST(corpus, lottery_rounds)
{
    const auto win = replay(load("lottery/win.scn"));
    EXPECT_EQ(rules(win), (std::vector<TxRule>{Tx1, Tx1, Tx2, Tx1, Tx2, Tx1, Tx1, Tx1, Tx2}));
    // Secrets 7 and 4: odd sum, the second player wins.
    EXPECT_EQ(win.receipts[7].deltas,
        (std::map<Address, BigInt>{{account("P2"), 2}, {contract("Lottery"), -2}}));

    const auto timeout = replay(load("lottery/timeout.scn"));
    EXPECT_EQ(timeout.final_state.balance(account("P1")), 6);
    const auto leave = replay(load("lottery/leave.scn"));
    EXPECT_EQ(leave.final_state.balance(account("P1")), 3);
}

TEST(corpus, init_procedures_resist_replay)
{
    std::size_t checked = 0;
    for (const auto& c : corpus_cases(root))
        for (const auto& path : c.scenarios)
        {
            const Scenario sc = load_scenario(path);
            const World w = genesis(sc);
            const auto r = apply_chain(w.registry, w.state, sc.transactions);
            for (std::size_t i = 0; i < sc.transactions.size(); ++i)
            {
                const Transaction& first = sc.transactions[i];
                if (first.proc != "init" || r.receipts[i].rule != Tx1)
                    continue;
                ++checked;
                for (const auto& caller : {first.caller, account("Intruder")})
                {
                    Transaction again = first;
                    again.caller = caller;
                    again.amount = 0;
                    const auto out = apply_tx(w.registry, r.final_state, again);
                    EXPECT_TRUE(out.receipt.rule == Tx2 ||
                                out.state.store(first.callee) == r.final_state.store(first.callee))
                        << path;
                }
            }
        }
    EXPECT_GE(checked, 8u);
}

TEST(corpus, transaction_order_matters)
{
    Scenario sc = load("extended_wallet/payments.scn");
    const auto in_order = replay(sc);
    std::swap(sc.transactions[0], sc.transactions[1]);
    const auto swapped = replay(sc);
    EXPECT_NE(in_order.final_state, swapped.final_state);
    EXPECT_EQ(swapped.final_state.get(contract("W"), Value{"owner"}), Value{account("Mallory")});
}
