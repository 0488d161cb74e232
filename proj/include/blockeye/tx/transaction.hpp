// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/core/address.hpp>
#include <blockeye/core/word.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace blockeye::tx {

/// Asset moved by a transfer edge: the chain's native currency or a token
/// identified by its contract address.
struct Native {
    bool operator==(const Native&) const = default;
};

struct Token {
    Address contract;
    bool operator==(const Token&) const = default;
};

using Asset = std::variant<Native, Token>;

struct Transfer {
    Asset asset;
    Address from;
    Address to;
    Word amount;  // base units of the asset; always > 0
};

enum class TxStatus : uint8_t { Success, Reverted };

struct Transaction {
    Hash32 hash;
    uint64_t block_number = 0;
    uint32_t tx_index = 0;
    Address sender;
    std::optional<Address> to;
    Word value;
    uint64_t gas_used = 0;
    Word gas_price;
    TxStatus status = TxStatus::Success;
    std::vector<Transfer> transfers;  // empty for reverted transactions

    std::pair<uint64_t, uint32_t> position() const
    {
        return {block_number, tx_index};
    }
};

class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string field, const std::string& what);

    std::string field;  // first offending field
};

/// Duplicate (block_number, tx_index) within one dataset.
class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Stream-contract violation: input not ordered by (block_number, tx_index).
/// `position` is the 1-based record number of the offender.
class OutOfOrderInputError : public std::runtime_error {
public:
    OutOfOrderInputError(size_t position, const std::string& what);

    size_t position;
};

}  // namespace blockeye::tx
