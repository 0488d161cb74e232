// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/cli/config.hpp>

#include <nlohmann/json.hpp>

#include <fstream>

namespace blockeye::cli {

namespace {

using nlohmann::json;
using oracle::ConfigError;

[[noreturn]] void bad(const std::string& why)
{
    throw ConfigError{"config: " + why};
}

Word parse_word_field(const json& j, const char* field)
{
    if (!j.is_string())
        bad(std::string{field} + " must be a decimal string");
    try {
        return word_from_dec(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        bad(std::string{field} + ": " + e.what());
    }
}

Address parse_address_field(const json& j, const char* field)
{
    if (!j.is_string())
        bad(std::string{field} + " must be an address string");
    try {
        return Address::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        bad(std::string{field} + ": " + e.what());
    }
}

}  // namespace

oracle::AddressBook Config::address_book() const
{
    oracle::AddressBook book;
    book.oracles.insert(oracles.begin(), oracles.end());
    for (const auto& [addr, info] : tokens)
        book.tokens.insert(addr);
    book.wildcard_oracle = wildcard_oracle;
    book.validate();
    return book;
}

tx::Valuation Config::valuation() const
{
    tx::Valuation v;
    for (const auto& [addr, info] : tokens)
        v.rates.emplace(addr, tx::Valuation::Rate{info.rate_num, info.rate_den});
    v.validate();
    return v;
}

monitor::MonitorConfig Config::monitor_config() const
{
    monitor::MonitorConfig mc;
    mc.rules.threshold_wei = threshold_wei;
    mc.rules.min_burst = min_burst;
    mc.valuation = valuation();
    mc.window_blocks = window_blocks;
    return mc;
}

sym::ExploreConfig Config::explore_config() const
{
    sym::ExploreConfig ec;
    ec.max_depth = max_depth;
    ec.max_paths = max_paths;
    ec.loop_bound = loop_bound;
    return ec;
}

Config load_config(const std::string& path)
{
    std::ifstream in{path};
    if (!in)
        throw ConfigError{"config: cannot open " + path};

    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError{std::string{"config: "} + e.what()};
    }
    if (!j.is_object())
        bad("top level must be an object");

    Config cfg;
    if (j.contains("oracles")) {
        if (!j["oracles"].is_array())
            bad("oracles must be an array");
        for (const auto& a : j["oracles"])
            cfg.oracles.push_back(parse_address_field(a, "oracles[]"));
    }
    if (j.contains("tokens")) {
        if (!j["tokens"].is_object())
            bad("tokens must be an object keyed by address");
        for (const auto& [key, info] : j["tokens"].items()) {
            Address addr;
            try {
                addr = Address::parse(key);
            } catch (const std::invalid_argument& e) {
                bad(std::string{"tokens key: "} + e.what());
            }
            Config::TokenInfo ti;
            ti.symbol = info.value("symbol", std::string{});
            ti.rate_num = info.contains("rate_num")
                              ? parse_word_field(info["rate_num"], "rate_num")
                              : Word{1};
            ti.rate_den = info.contains("rate_den")
                              ? parse_word_field(info["rate_den"], "rate_den")
                              : Word{1};
            if (ti.rate_den == 0)
                bad("rate_den must be positive for " + key);
            cfg.tokens.emplace(addr, std::move(ti));
        }
    }
    if (j.contains("threshold_wei")) {
        if (!j["threshold_wei"].is_string())
            bad("threshold_wei must be a decimal string");
        try {
            cfg.threshold_wei = BigInt{j["threshold_wei"].get<std::string>()};
        } catch (const std::exception&) {
            bad("threshold_wei is not a valid integer");
        }
    }

    auto read_uint = [&](const char* field, auto& out) {
        if (!j.contains(field))
            return;
        if (!j[field].is_number_unsigned())
            bad(std::string{field} + " must be an unsigned integer");
        out = static_cast<std::remove_reference_t<decltype(out)>>(
            j[field].get<uint64_t>());
    };
    read_uint("window_blocks", cfg.window_blocks);
    read_uint("min_burst", cfg.min_burst);
    read_uint("max_depth", cfg.max_depth);
    read_uint("max_paths", cfg.max_paths);
    read_uint("loop_bound", cfg.loop_bound);
    read_uint("confirmation_depth", cfg.confirmation_depth);
    if (j.contains("wildcard_oracle")) {
        if (!j["wildcard_oracle"].is_boolean())
            bad("wildcard_oracle must be a boolean");
        cfg.wildcard_oracle = j["wildcard_oracle"].get<bool>();
    }

    if (cfg.max_depth < 1 || cfg.max_paths < 1 || cfg.loop_bound < 1)
        bad("exploration bounds must be >= 1");
    cfg.address_book();  // validates oracle/token disjointness
    return cfg;
}

}  // namespace blockeye::cli
