// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/chain/rpc_source.hpp>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <thread>

namespace blockeye::chain {

namespace {

using nlohmann::json;

uint64_t hex_quantity(const std::string& s)
{
    if (!s.starts_with("0x"))
        throw RpcError{-1, "expected hex quantity, got '" + s + "'"};
    return std::stoull(s.substr(2), nullptr, 16);
}

Word hex_word(const std::string& s)
{
    if (!s.starts_with("0x"))
        throw RpcError{-1, "expected hex quantity, got '" + s + "'"};
    Word w = 0;
    for (size_t i = 2; i < s.size(); ++i) {
        const char c = s[i];
        int digit;
        if (c >= '0' && c <= '9')
            digit = c - '0';
        else if (c >= 'a' && c <= 'f')
            digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            digit = c - 'A' + 10;
        else
            throw RpcError{-1, "bad hex digit in '" + s + "'"};
        w = (w << 4) | digit;
    }
    return w;
}

std::string to_hex_tag(uint64_t v)
{
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

RpcError::RpcError(int code_, const std::string& message_)
    : std::runtime_error{"rpc error " + std::to_string(code_) + ": " + message_},
      code{code_}
{}

struct RpcSource::Impl {
    RpcConfig config;
    httplib::Client client;
    std::string path;
    SleepFn sleeper = [](std::chrono::milliseconds d) {
        std::this_thread::sleep_for(d);
    };
    int next_id = 1;

    explicit Impl(RpcConfig cfg)
        : config{std::move(cfg)}, client{base_url(config.endpoint)},
          path{url_path(config.endpoint)}
    {
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
    }

    static std::string base_url(const std::string& endpoint)
    {
        const auto scheme_end = endpoint.find("://");
        const size_t host_start =
            scheme_end == std::string::npos ? 0 : scheme_end + 3;
        const auto slash = endpoint.find('/', host_start);
        return slash == std::string::npos ? endpoint : endpoint.substr(0, slash);
    }

    static std::string url_path(const std::string& endpoint)
    {
        const auto scheme_end = endpoint.find("://");
        const size_t host_start =
            scheme_end == std::string::npos ? 0 : scheme_end + 3;
        const auto slash = endpoint.find('/', host_start);
        return slash == std::string::npos ? "/" : endpoint.substr(slash);
    }

    /// One JSON-RPC exchange. Transport failures back off and retry without
    /// limit; unparsable bodies and protocol errors throw.
    json call(const std::string& method, json params)
    {
        json req{{"jsonrpc", "2.0"},
                 {"id", next_id++},
                 {"method", method},
                 {"params", std::move(params)}};
        const std::string body = req.dump();

        auto backoff = config.backoff_initial;
        uint32_t attempts = 0;
        for (;;) {
            auto res = client.Post(path, body, "application/json");
            if (!res || res->status >= 500 || res->status == 429) {
                if (config.max_retries != 0 && ++attempts > config.max_retries)
                    throw RpcError{-1, "endpoint unreachable after " +
                                           std::to_string(attempts - 1) +
                                           " retries"};
                sleeper(backoff);
                backoff = std::min(backoff * 2, config.backoff_cap);
                continue;
            }
            if (res->status != 200)
                throw RpcError{-res->status,
                               "unexpected HTTP status " +
                                   std::to_string(res->status)};
            json parsed;
            try {
                parsed = json::parse(res->body);
            } catch (const json::parse_error& e) {
                throw RpcError{-1, std::string{"malformed response: "} + e.what()};
            }
            if (parsed.contains("error") && !parsed["error"].is_null()) {
                const auto& err = parsed["error"];
                throw RpcError{err.value("code", -1),
                               err.value("message", "unknown error")};
            }
            if (!parsed.contains("result"))
                throw RpcError{-1, "response has no result"};
            return parsed["result"];
        }
    }

    tx::Transaction map_transaction(const json& raw, uint64_t block,
                                    uint32_t index)
    {
        try {
            tx::Transaction t;
            t.hash = Hash32::parse(raw.at("hash").get<std::string>());
            t.block_number = block;
            t.tx_index = index;
            t.sender = Address::parse(raw.at("from").get<std::string>());
            if (raw.contains("to") && !raw["to"].is_null())
                t.to = Address::parse(raw["to"].get<std::string>());
            t.value = hex_word(raw.at("value").get<std::string>());
            t.gas_price = raw.contains("gasPrice")
                              ? hex_word(raw["gasPrice"].get<std::string>())
                              : Word{0};

            const json receipt = call("eth_getTransactionReceipt",
                                      json::array({t.hash.to_string()}));
            if (receipt.is_null())
                throw RpcError{-1, "missing receipt for " + t.hash.to_string()};
            t.gas_used = hex_quantity(receipt.at("gasUsed").get<std::string>());
            const std::string status =
                receipt.value("status", std::string{"0x1"});
            t.status = hex_quantity(status) == 1 ? tx::TxStatus::Success
                                                 : tx::TxStatus::Reverted;
            return t;
        } catch (const json::exception& e) {
            throw RpcError{-1, std::string{"malformed transaction: "} + e.what()};
        } catch (const std::invalid_argument& e) {
            throw RpcError{-1, std::string{"malformed transaction: "} + e.what()};
        }
    }
};

RpcSource::RpcSource(RpcConfig config)
    : impl_{std::make_unique<Impl>(std::move(config))},
      next_block_{impl_->config.start_block}
{}

RpcSource::~RpcSource() = default;

void RpcSource::set_sleeper(SleepFn sleeper)
{
    impl_->sleeper = std::move(sleeper);
}

std::vector<tx::Transaction> RpcSource::next_batch()
{
    const uint64_t head =
        hex_quantity(impl_->call("eth_blockNumber", json::array()).get<std::string>());
    if (head < impl_->config.confirmation_depth)
        return {};
    const uint64_t safe_head = head - impl_->config.confirmation_depth;
    if (next_block_ > safe_head)
        return {};

    const uint64_t last = std::min(
        safe_head, next_block_ + impl_->config.max_blocks_per_batch - 1);

    std::vector<tx::Transaction> out;
    for (uint64_t b = next_block_; b <= last; ++b) {
        const json block = impl_->call(
            "eth_getBlockByNumber", json::array({to_hex_tag(b), true}));
        if (block.is_null())
            throw RpcError{-1, "missing block " + std::to_string(b)};
        uint32_t index = 0;
        for (const auto& raw : block.value("transactions", json::array()))
            out.push_back(impl_->map_transaction(raw, b, index++));
    }
    next_block_ = last + 1;
    if (!out.empty())
        cursor_ = out.back().position();
    return out;
}

std::string RpcSource::fetch_code(const std::string& address)
{
    return impl_->call("eth_getCode", json::array({address, "latest"}))
        .get<std::string>();
}

}  // namespace blockeye::chain
