// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/chain/source.hpp>

#include <chrono>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

namespace blockeye::chain {

class RpcError : public std::runtime_error {
public:
    RpcError(int code, const std::string& message);

    int code;
};

struct RpcConfig {
    std::string endpoint;       // http://host:port[/path]
    uint64_t start_block = 0;   // first block to deliver
    uint64_t confirmation_depth = 6;  // trail head by this many blocks
    uint64_t max_blocks_per_batch = 16;
    std::chrono::milliseconds poll_interval{1000};  // idle wait between polls
    std::chrono::milliseconds backoff_initial{1000};
    std::chrono::milliseconds backoff_cap{60000};
    // 0 = retry transient failures forever (long-running monitors);
    // one-shot commands set a cap and get RpcError instead.
    uint32_t max_retries = 0;
};

/// Minimal JSON-RPC 2.0 poller over eth_blockNumber /
/// eth_getBlockByNumber(tag, true) / eth_getTransactionReceipt. Produces
/// native-value transactions only; token transfer extraction from logs is a
/// fixture-side concern. Transient transport failures retry with exponential
/// backoff forever; a response that is not valid JSON is fatal.
class RpcSource final : public StreamSource {
public:
    explicit RpcSource(RpcConfig config);
    ~RpcSource() override;

    std::vector<tx::Transaction> next_batch() override;
    bool exhausted() const override { return false; }  // endless feed
    std::optional<Cursor> cursor() const override { return cursor_; }

    /// Injection point so tests do not sleep for real.
    using SleepFn = std::function<void(std::chrono::milliseconds)>;
    void set_sleeper(SleepFn sleeper);

    /// eth_getCode for `address` at the latest block; raw bytecode hex
    /// (with 0x prefix) as returned by the node.
    std::string fetch_code(const std::string& address);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::optional<Cursor> cursor_;
    uint64_t next_block_;
};

}  // namespace blockeye::chain
