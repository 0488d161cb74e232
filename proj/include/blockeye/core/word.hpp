// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace blockeye {

/// 256-bit unsigned machine word. Arithmetic wraps modulo 2^256,
/// matching EVM stack semantics.
using Word = boost::multiprecision::uint256_t;

/// Unbounded signed integer for monetary sums (profit can be negative and
/// sums of 256-bit quantities must not overflow).
using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kWordBytes = 32;

Word word_from_bytes_be(const uint8_t* data, size_t len);
void word_to_bytes_be(const Word& w, uint8_t out[kWordBytes]);

/// Parses a decimal string into a Word. Throws std::invalid_argument on
/// junk or values >= 2^256.
Word word_from_dec(const std::string& s);
std::string word_to_dec(const Word& w);

/// Lower-case hex without 0x prefix, no leading zeros ("0" for zero).
std::string word_to_hex(const Word& w);

}  // namespace blockeye
