// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/tx/transaction.hpp>

#include <map>
#include <stdexcept>

namespace blockeye::tx {

class UnknownAssetError : public std::runtime_error {
public:
    explicit UnknownAssetError(const Address& token);

    Address token;
};

class ValueOverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Static rational exchange rates: wei of native per token base unit.
/// Native is implicitly (1, 1). Fixtures pin rates so runs reproduce.
struct Valuation {
    struct Rate {
        Word numerator;
        Word denominator;  // > 0
    };

    std::map<Address, Rate> rates;

    /// Throws std::invalid_argument on a zero denominator.
    void validate() const;
};

/// amount * numerator / denominator with floor division. Throws
/// UnknownAssetError for unpriced tokens, ValueOverflowError if the result
/// exceeds 256 bits.
Word value_in_native(const Transfer& transfer, const Valuation& valuation);

}  // namespace blockeye::tx
