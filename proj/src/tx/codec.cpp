// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/tx/codec.hpp>

#include <nlohmann/json.hpp>
#include <zlib.h>

#include <fstream>
#include <set>
#include <sstream>

namespace blockeye::tx {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& field, const std::string& why)
{
    throw SchemaError{field, why};
}

const json& require(const json& j, const char* field)
{
    auto it = j.find(field);
    if (it == j.end())
        bad(field, "missing");
    return *it;
}

std::string require_string(const json& j, const char* field)
{
    const json& v = require(j, field);
    if (!v.is_string())
        bad(field, "expected a string");
    return v.get<std::string>();
}

uint64_t require_uint(const json& j, const char* field)
{
    const json& v = require(j, field);
    if (!v.is_number_unsigned())
        bad(field, "expected an unsigned integer");
    return v.get<uint64_t>();
}

Word require_word(const json& j, const char* field)
{
    const std::string s = require_string(j, field);
    try {
        return word_from_dec(s);
    } catch (const std::invalid_argument& e) {
        bad(field, e.what());
    }
}

Address require_address(const json& j, const char* field)
{
    const std::string s = require_string(j, field);
    try {
        return Address::parse(s);
    } catch (const std::invalid_argument& e) {
        bad(field, e.what());
    }
}

Transfer parse_transfer(const json& j)
{
    if (!j.is_object())
        bad("transfers", "expected an object");

    Transfer t;
    const std::string asset = require_string(j, "asset");
    if (asset == "native") {
        t.asset = Native{};
    } else {
        try {
            t.asset = Token{Address::parse(asset)};
        } catch (const std::invalid_argument&) {
            bad("asset", "expected \"native\" or a token address");
        }
    }
    t.from = require_address(j, "from");
    t.to = require_address(j, "to");
    t.amount = require_word(j, "amount");
    if (t.amount == 0)
        bad("amount", "must be positive");
    if (t.from == t.to)
        bad("to", "transfer endpoints must differ");
    return t;
}

std::string asset_string(const Asset& asset)
{
    if (std::holds_alternative<Native>(asset))
        return "native";
    return std::get<Token>(asset).contract.to_string();
}

}  // namespace

SchemaError::SchemaError(std::string field_, const std::string& what_)
    : std::runtime_error{"field '" + field_ + "': " + what_},
      field{std::move(field_)}
{}

OutOfOrderInputError::OutOfOrderInputError(size_t position_,
                                           const std::string& what_)
    : std::runtime_error{"record " + std::to_string(position_) + ": " + what_},
      position{position_}
{}

Transaction parse_fixture(std::string_view line)
{
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        bad("<json>", e.what());
    }
    if (!j.is_object())
        bad("<json>", "expected an object");

    Transaction tx;
    const std::string hash = require_string(j, "hash");
    try {
        tx.hash = Hash32::parse(hash);
    } catch (const std::invalid_argument& e) {
        bad("hash", e.what());
    }
    tx.block_number = require_uint(j, "block_number");
    const uint64_t index = require_uint(j, "tx_index");
    if (index > UINT32_MAX)
        bad("tx_index", "out of range");
    tx.tx_index = static_cast<uint32_t>(index);
    tx.sender = require_address(j, "from");
    const json& to = require(j, "to");
    if (to.is_null()) {
        tx.to = std::nullopt;  // contract creation
    } else if (to.is_string()) {
        try {
            tx.to = Address::parse(to.get<std::string>());
        } catch (const std::invalid_argument& e) {
            bad("to", e.what());
        }
    } else {
        bad("to", "expected an address or null");
    }
    tx.value = require_word(j, "value");
    tx.gas_used = require_uint(j, "gas_used");
    tx.gas_price = require_word(j, "gas_price");

    const std::string status = require_string(j, "status");
    if (status == "success")
        tx.status = TxStatus::Success;
    else if (status == "reverted")
        tx.status = TxStatus::Reverted;
    else
        bad("status", "expected \"success\" or \"reverted\"");

    const json& transfers = require(j, "transfers");
    if (!transfers.is_array())
        bad("transfers", "expected an array");
    for (const auto& t : transfers)
        tx.transfers.push_back(parse_transfer(t));

    if (tx.status == TxStatus::Reverted && !tx.transfers.empty())
        bad("transfers", "reverted transactions move no assets");

    return tx;
}

std::string serialize(const Transaction& tx)
{
    ordered_json j;
    j["hash"] = tx.hash.to_string();
    j["block_number"] = tx.block_number;
    j["tx_index"] = tx.tx_index;
    j["from"] = tx.sender.to_string();
    if (tx.to)
        j["to"] = tx.to->to_string();
    else
        j["to"] = nullptr;
    j["value"] = word_to_dec(tx.value);
    j["gas_used"] = tx.gas_used;
    j["gas_price"] = word_to_dec(tx.gas_price);
    j["status"] = tx.status == TxStatus::Success ? "success" : "reverted";
    j["transfers"] = ordered_json::array();
    for (const auto& t : tx.transfers) {
        ordered_json tj;
        tj["asset"] = asset_string(t.asset);
        tj["from"] = t.from.to_string();
        tj["to"] = t.to.to_string();
        tj["amount"] = word_to_dec(t.amount);
        j["transfers"].push_back(std::move(tj));
    }
    return j.dump();
}

std::vector<Transaction> parse_dataset(std::string_view text)
{
    std::vector<Transaction> out;
    std::istringstream in{std::string{text}};
    size_t record = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        ++record;
        Transaction tx = parse_fixture(line);
        if (!out.empty()) {
            const auto prev = out.back().position();
            if (tx.position() == prev)
                throw DatasetError{"duplicate (block_number, tx_index) at record " +
                                   std::to_string(record)};
            if (tx.position() < prev)
                throw OutOfOrderInputError{
                    record, "transactions must be ordered by (block_number, tx_index)"};
        }
        out.push_back(std::move(tx));
    }
    return out;
}

std::string read_fixture_file(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw std::runtime_error{"cannot open " + path};
    std::string raw{std::istreambuf_iterator<char>{in},
                    std::istreambuf_iterator<char>{}};

    // gzip magic: 1f 8b
    if (raw.size() < 2 || static_cast<uint8_t>(raw[0]) != 0x1f ||
        static_cast<uint8_t>(raw[1]) != 0x8b)
        return raw;

    z_stream zs{};
    if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK)
        throw std::runtime_error{"zlib init failed"};

    std::string out;
    std::array<char, 1 << 15> buf;
    zs.next_in = reinterpret_cast<Bytef*>(raw.data());
    zs.avail_in = static_cast<uInt>(raw.size());
    int rc = Z_OK;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf.data());
        zs.avail_out = static_cast<uInt>(buf.size());
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            throw std::runtime_error{"gzip decompression failed for " + path};
        }
        out.append(buf.data(), buf.size() - zs.avail_out);
    } while (rc != Z_STREAM_END);
    inflateEnd(&zs);
    return out;
}

}  // namespace blockeye::tx
