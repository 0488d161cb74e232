// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/monitor/monitor.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>

namespace blockeye::monitor {

namespace {

bool within_window(uint64_t block, uint64_t center, uint64_t window)
{
    const uint64_t low = center >= window ? center - window : 0;
    const uint64_t high = center > std::numeric_limits<uint64_t>::max() - window
                              ? std::numeric_limits<uint64_t>::max()
                              : center + window;
    return block >= low && block <= high;
}

bool has_equivalent_native_edge(const Transaction& t)
{
    if (!t.to)
        return false;
    return std::any_of(t.transfers.begin(), t.transfers.end(),
                       [&](const tx::Transfer& e) {
                           return std::holds_alternative<tx::Native>(e.asset) &&
                                  e.from == t.sender && e.to == *t.to &&
                                  e.amount == t.value;
                       });
}

}  // namespace

std::string_view name(RuleId r)
{
    switch (r) {
    case RuleId::ProfitThreshold: return "profit_threshold";
    case RuleId::Burst: return "burst";
    case RuleId::Inconclusive: return "inconclusive";
    }
    return "?";
}

Cluster cluster(const Transaction& t0, std::span<const Transaction> pool,
                uint64_t window_blocks)
{
    Cluster c;
    c.target = t0;
    c.sender = t0.sender;
    const uint64_t low =
        t0.block_number >= window_blocks ? t0.block_number - window_blocks : 0;
    const uint64_t high =
        t0.block_number > std::numeric_limits<uint64_t>::max() - window_blocks
            ? std::numeric_limits<uint64_t>::max()
            : t0.block_number + window_blocks;
    c.block_window = {low, high};

    bool saw_target = false;
    for (const auto& t : pool) {
        if (t.sender != t0.sender)
            continue;
        if (!within_window(t.block_number, t0.block_number, window_blocks))
            continue;
        saw_target = saw_target || t.position() == t0.position();
        c.members.push_back(t);
    }
    if (!saw_target)
        c.members.push_back(t0);
    std::sort(c.members.begin(), c.members.end(),
              [](const Transaction& a, const Transaction& b) {
                  return a.position() < b.position();
              });
    return c;
}

ProfitLedger ledger_for(const Address& who, std::span<const Transaction> txs,
                        const Valuation& valuation)
{
    ProfitLedger l;
    for (const auto& t : txs) {
        if (t.sender == who)
            l.cost += BigInt{t.gas_used} * BigInt{t.gas_price};

        if (t.status != tx::TxStatus::Success)
            continue;

        for (const auto& e : t.transfers) {
            if (e.to != who && e.from != who)
                continue;
            try {
                const Word v = tx::value_in_native(e, valuation);
                if (e.to == who)
                    l.benefit += BigInt{v};
                else
                    l.cost += BigInt{v};
            } catch (const tx::UnknownAssetError&) {
                l.unvaluable = true;  // excluded from the sums
            }
        }

        // Top-level value, unless an explicit edge already covers it.
        if (t.value != 0 && t.to && !has_equivalent_native_edge(t)) {
            if (t.sender == who && *t.to != who)
                l.cost += BigInt{t.value};
            else if (*t.to == who && t.sender != who)
                l.benefit += BigInt{t.value};
        }
    }
    l.profit = l.benefit - l.cost;
    return l;
}

ProfitLedger ledger(const Cluster& c, const Valuation& valuation)
{
    return ledger_for(c.sender, c.members, valuation);
}

std::vector<Alert> evaluate(const Cluster& c, const ProfitLedger& l,
                            const RuleConfig& rules)
{
    auto make_alert = [&](RuleId rule) {
        Alert a;
        a.cluster = c;
        a.ledger = l;
        a.rule = rule;
        a.threshold = rules.threshold_wei;
        a.dumped_sequence.reserve(c.members.size());
        for (const auto& m : c.members)
            a.dumped_sequence.push_back(m.hash);
        return a;
    };

    if (l.unvaluable)
        return {make_alert(RuleId::Inconclusive)};

    std::vector<Alert> alerts;
    if (l.profit > rules.threshold_wei)
        alerts.push_back(make_alert(RuleId::ProfitThreshold));
    if (c.members.size() >= rules.min_burst)
        alerts.push_back(make_alert(RuleId::Burst));
    return alerts;
}

std::vector<std::pair<Address, size_t>> top_attackers(
    std::span<const Alert> alerts, size_t n)
{
    std::map<Address, size_t> counts;
    for (const auto& a : alerts)
        ++counts[a.cluster.sender];

    std::vector<std::pair<Address, size_t>> ranked{counts.begin(),
                                                   counts.end()};
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second)
                      return a.second > b.second;
                  return a.first < b.first;
              });
    if (ranked.size() > n)
        ranked.resize(n);
    return ranked;
}

Monitor::Monitor(MonitorConfig config, AlertSink sink)
    : config_{std::move(config)}, sink_{std::move(sink)}
{
    config_.valuation.validate();
}

void Monitor::feed(Transaction tx)
{
    ++records_seen_;
    if (last_position_ && tx.position() <= *last_position_)
        throw tx::OutOfOrderInputError{
            records_seen_,
            "transactions must arrive ordered by (block_number, tx_index)"};
    last_position_ = tx.position();

    const uint64_t block = tx.block_number;
    buffer_.push_back(std::move(tx));
    pending_blocks_.insert(block);

    drain_ready(block);

    // Evict transactions no candidate can reach any more.
    const uint64_t anchor =
        pending_blocks_.empty() ? block : *pending_blocks_.begin();
    const uint64_t keep_from =
        anchor >= config_.window_blocks ? anchor - config_.window_blocks : 0;
    while (!buffer_.empty() && buffer_.front().block_number < keep_from)
        buffer_.pop_front();
}

void Monitor::finish()
{
    while (!pending_blocks_.empty()) {
        const uint64_t block = *pending_blocks_.begin();
        pending_blocks_.erase(pending_blocks_.begin());
        evaluate_block(block);
    }
    buffer_.clear();
    // Stream may resume (replay property): ordering state is kept.
}

void Monitor::drain_ready(uint64_t upto_block)
{
    // A candidate in block B is complete once blocks through B + window have
    // fully arrived, i.e. some transaction from a later block showed up.
    while (!pending_blocks_.empty()) {
        const uint64_t block = *pending_blocks_.begin();
        if (upto_block <= config_.window_blocks ||
            block >= upto_block - config_.window_blocks)
            break;
        pending_blocks_.erase(pending_blocks_.begin());
        evaluate_block(block);
    }
}

void Monitor::evaluate_block(uint64_t block)
{
    const std::vector<Transaction> pool{buffer_.begin(), buffer_.end()};
    for (const auto& t : pool) {
        if (t.block_number != block)
            continue;
        Cluster c = cluster(t, pool, config_.window_blocks);
        const ProfitLedger l = ledger(c, config_.valuation);
        for (auto& alert : evaluate(c, l, config_.rules)) {
            const auto key = std::make_tuple(c.sender, c.block_window.first,
                                             alert.rule);
            if (emitted_.insert(key).second)
                sink_(alert);
        }
    }
}

std::vector<Alert> run_monitor(std::span<const Transaction> stream,
                               const MonitorConfig& config)
{
    std::vector<Alert> alerts;
    Monitor m{config, [&alerts](const Alert& a) { alerts.push_back(a); }};
    for (const auto& t : stream)
        m.feed(t);
    m.finish();
    return alerts;
}

std::string alert_to_jsonl(const Alert& alert)
{
    nlohmann::ordered_json j;
    j["rule"] = std::string{name(alert.rule)};
    j["sender"] = alert.cluster.sender.to_string();
    j["block_window"] = {alert.cluster.block_window.first,
                         alert.cluster.block_window.second};
    j["profit_wei"] = alert.ledger.profit.str();
    j["threshold_wei"] = alert.threshold.str();
    j["txs"] = nlohmann::ordered_json::array();
    for (const auto& h : alert.dumped_sequence)
        j["txs"].push_back(h.to_string());
    return j.dump();
}

AlertRecord parse_alert(std::string_view line)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw tx::SchemaError{"<json>", e.what()};
    }
    AlertRecord rec;
    try {
        rec.rule = j.at("rule").get<std::string>();
        rec.sender = Address::parse(j.at("sender").get<std::string>());
        rec.block_window = {j.at("block_window").at(0).get<uint64_t>(),
                            j.at("block_window").at(1).get<uint64_t>()};
        rec.profit_wei = BigInt{j.at("profit_wei").get<std::string>()};
        rec.threshold_wei = BigInt{j.at("threshold_wei").get<std::string>()};
        for (const auto& h : j.at("txs"))
            rec.txs.push_back(Hash32::parse(h.get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        throw tx::SchemaError{"<alert>", e.what()};
    } catch (const std::invalid_argument& e) {
        throw tx::SchemaError{"<alert>", e.what()};
    }
    return rec;
}

}  // namespace blockeye::monitor
