// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/tx/valuation.hpp>

namespace blockeye::tx {

UnknownAssetError::UnknownAssetError(const Address& token_)
    : std::runtime_error{"no rate for token " + token_.to_string()},
      token{token_}
{}

void Valuation::validate() const
{
    for (const auto& [addr, rate] : rates) {
        if (rate.denominator == 0)
            throw std::invalid_argument{"zero rate denominator for " +
                                        addr.to_string()};
    }
}

Word value_in_native(const Transfer& transfer, const Valuation& valuation)
{
    if (std::holds_alternative<Native>(transfer.asset))
        return transfer.amount;

    const Address& token = std::get<Token>(transfer.asset).contract;
    auto it = valuation.rates.find(token);
    if (it == valuation.rates.end())
        throw UnknownAssetError{token};
    const auto& rate = it->second;

    // Widen: amount * numerator can exceed 256 bits before the division.
    const BigInt wide = BigInt{transfer.amount} * BigInt{rate.numerator} /
                        BigInt{rate.denominator};
    if (wide >> 256 != 0)
        throw ValueOverflowError{"native value exceeds 256 bits"};
    return Word{wide};
}

}  // namespace blockeye::tx
