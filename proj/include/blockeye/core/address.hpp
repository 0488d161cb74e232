// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/core/word.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace blockeye {

/// 20-byte account address.
struct Address {
    std::array<uint8_t, 20> bytes{};

    auto operator<=>(const Address&) const = default;

    /// Low 160 bits of a word, big-endian (how an address sits on the stack).
    static Address from_word(const Word& w);
    Word to_word() const;

    /// Parses "0x" + 40 hex digits (case-insensitive). Throws
    /// std::invalid_argument otherwise.
    static Address parse(std::string_view text);

    /// Lower-case "0x"-prefixed rendering.
    std::string to_string() const;
};

/// 32-byte transaction hash / identifier.
struct Hash32 {
    std::array<uint8_t, 32> bytes{};

    auto operator<=>(const Hash32&) const = default;

    static Hash32 parse(std::string_view text);
    std::string to_string() const;
};

}  // namespace blockeye
