// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/monitor/monitor.hpp>
#include <blockeye/oracle/address_book.hpp>
#include <blockeye/sym/engine.hpp>

#include <map>
#include <string>

namespace blockeye::cli {

/// One configuration file drives both phases so the oracle/token address
/// books stay consistent. JSON, all fields optional:
///
///   {
///     "oracles": ["0x..."],
///     "tokens": {"0x...": {"symbol": "DAI", "rate_num": "1", "rate_den": "1"}},
///     "threshold_wei": "0",
///     "window_blocks": 0,
///     "min_burst": 2,
///     "max_depth": 4096,
///     "max_paths": 256,
///     "loop_bound": 2,
///     "wildcard_oracle": false,
///     "confirmation_depth": 6
///   }
struct Config {
    struct TokenInfo {
        std::string symbol;
        Word rate_num;
        Word rate_den;
    };

    std::vector<Address> oracles;
    std::map<Address, TokenInfo> tokens;
    BigInt threshold_wei;
    uint64_t window_blocks = 0;
    uint32_t min_burst = 2;
    size_t max_depth = 4096;
    size_t max_paths = 256;
    uint32_t loop_bound = 2;
    bool wildcard_oracle = false;
    uint64_t confirmation_depth = 6;

    oracle::AddressBook address_book() const;
    tx::Valuation valuation() const;
    monitor::MonitorConfig monitor_config() const;
    sym::ExploreConfig explore_config() const;
};

/// Loads and validates a config file. Throws oracle::ConfigError on
/// unreadable files, bad JSON, or violated invariants.
Config load_config(const std::string& path);

}  // namespace blockeye::cli
