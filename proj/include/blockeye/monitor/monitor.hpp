// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/tx/transaction.hpp>
#include <blockeye/tx/valuation.hpp>

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace blockeye::monitor {

using tx::Transaction;
using tx::Valuation;

/// Transactions from one sender inside a block window around a target t0.
struct Cluster {
    Transaction target;                  // t0
    std::vector<Transaction> members;    // t0..tk, (block, index)-sorted
    Address sender;                      // x
    std::pair<uint64_t, uint64_t> block_window;  // [low, high]
};

/// Net position of one address over a cluster, valued in native wei.
struct ProfitLedger {
    BigInt benefit;   // inflows to x
    BigInt cost;      // outflows from x plus all gas paid
    BigInt profit;    // benefit - cost
    bool unvaluable = false;  // some transfer had no configured rate
};

enum class RuleId : uint8_t { ProfitThreshold, Burst, Inconclusive };

std::string_view name(RuleId r);

struct RuleConfig {
    BigInt threshold_wei;   // R1 fires on profit strictly above this
    uint32_t min_burst = 2; // R2 fires on clusters at least this large
};

struct Alert {
    Cluster cluster;
    ProfitLedger ledger;
    RuleId rule = RuleId::ProfitThreshold;
    BigInt threshold;
    std::vector<Hash32> dumped_sequence;  // member hashes in order
};

/// Members of the pool sharing t0's sender within |block - t0.block| <=
/// window_blocks. window_blocks = 0 keeps only t0's own block.
Cluster cluster(const Transaction& t0, std::span<const Transaction> pool,
                uint64_t window_blocks);

/// Net position of `who` across `txs` (gas charged on transactions it sent,
/// reverted included). The transaction-level `value` field counts only when
/// no equivalent native transfer edge is present, so fixtures with explicit
/// edges never double count.
ProfitLedger ledger_for(const Address& who, std::span<const Transaction> txs,
                        const Valuation& valuation);

ProfitLedger ledger(const Cluster& c, const Valuation& valuation);

/// Applies the heuristic rules to one cluster. An unvaluable ledger yields
/// exactly one Inconclusive alert; otherwise the profit-threshold rule fires
/// on profit strictly above the threshold and the burst rule on
/// |members| >= min_burst.
std::vector<Alert> evaluate(const Cluster& c, const ProfitLedger& l,
                            const RuleConfig& rules);

/// Ranked (address, alert count), count descending, ties by address
/// ascending; at most n entries.
std::vector<std::pair<Address, size_t>> top_attackers(
    std::span<const Alert> alerts, size_t n);

struct MonitorConfig {
    RuleConfig rules;
    Valuation valuation;
    uint64_t window_blocks = 0;
};

/// Streaming phase-2 engine. Every incoming transaction is a candidate t0;
/// a candidate is evaluated once its forward window is complete (or at
/// finish()). Alerts are emitted in target order, each distinct
/// (sender, window low, rule) at most once. Single-consumer: one thread
/// feeds one Monitor.
class Monitor {
public:
    using AlertSink = std::function<void(const Alert&)>;

    Monitor(MonitorConfig config, AlertSink sink);

    /// Feeds the next transaction. Throws tx::OutOfOrderInputError when the
    /// stream is not strictly (block_number, tx_index)-ordered.
    void feed(Transaction tx);

    /// Flushes candidates still waiting for their window to complete.
    void finish();

private:
    void evaluate_block(uint64_t block);
    void drain_ready(uint64_t upto_block);

    MonitorConfig config_;
    AlertSink sink_;
    std::deque<Transaction> buffer_;  // ordered working set
    std::set<uint64_t> pending_blocks_;
    std::set<std::tuple<Address, uint64_t, RuleId>> emitted_;
    std::optional<std::pair<uint64_t, uint32_t>> last_position_;
    size_t records_seen_ = 0;
};

/// Runs the whole stream through a Monitor and returns the alerts in order.
std::vector<Alert> run_monitor(std::span<const Transaction> stream,
                               const MonitorConfig& config);

/// One alert as a canonical JSONL line (no trailing newline).
std::string alert_to_jsonl(const Alert& alert);

/// Parses one alert line (the subset of fields the report command needs:
/// rule, sender, block_window, profit, threshold, txs).
struct AlertRecord {
    std::string rule;
    Address sender;
    std::pair<uint64_t, uint64_t> block_window;
    BigInt profit_wei;
    BigInt threshold_wei;
    std::vector<Hash32> txs;
};

AlertRecord parse_alert(std::string_view line);

}  // namespace blockeye::monitor
