// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/core/address.hpp>
#include <blockeye/core/hex.hpp>

#include <stdexcept>

namespace blockeye {

Address Address::from_word(const Word& w)
{
    uint8_t buf[kWordBytes];
    word_to_bytes_be(w, buf);
    Address a;
    std::copy(buf + 12, buf + 32, a.bytes.begin());
    return a;
}

Word Address::to_word() const
{
    return word_from_bytes_be(bytes.data(), bytes.size());
}

Address Address::parse(std::string_view text)
{
    if (text.size() != 42 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
        throw std::invalid_argument{"address: expected 0x + 40 hex digits"};
    const Bytes raw = hex_decode(text);
    Address a;
    std::copy(raw.begin(), raw.end(), a.bytes.begin());
    return a;
}

std::string Address::to_string() const
{
    return "0x" + hex_encode(bytes.data(), bytes.size());
}

Hash32 Hash32::parse(std::string_view text)
{
    if (text.size() != 66 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
        throw std::invalid_argument{"hash: expected 0x + 64 hex digits"};
    const Bytes raw = hex_decode(text);
    Hash32 h;
    std::copy(raw.begin(), raw.end(), h.bytes.begin());
    return h;
}

std::string Hash32::to_string() const
{
    return "0x" + hex_encode(bytes.data(), bytes.size());
}

}  // namespace blockeye
