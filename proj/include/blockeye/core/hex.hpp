// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace blockeye {

using Bytes = std::vector<uint8_t>;

/// Decodes hex text into bytes. Accepts an optional 0x prefix and ignores
/// ASCII whitespace anywhere in the input. Throws std::invalid_argument on
/// non-hex characters or an odd digit count.
Bytes hex_decode(std::string_view text);

std::string hex_encode(const uint8_t* data, size_t len);
std::string hex_encode(const Bytes& data);

}  // namespace blockeye
