// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/core/hex.hpp>

#include <cctype>
#include <stdexcept>

namespace blockeye {

namespace {

int nibble(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

}  // namespace

Bytes hex_decode(std::string_view text)
{
    std::string digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        digits.push_back(c);
    }
    std::string_view v{digits};
    if (v.size() >= 2 && v[0] == '0' && (v[1] == 'x' || v[1] == 'X'))
        v.remove_prefix(2);
    if (v.size() % 2 != 0)
        throw std::invalid_argument{"hex: odd number of digits"};

    Bytes out;
    out.reserve(v.size() / 2);
    for (size_t i = 0; i < v.size(); i += 2) {
        const int hi = nibble(v[i]);
        const int lo = nibble(v[i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument{"hex: invalid character"};
        out.push_back(static_cast<uint8_t>(hi << 4 | lo));
    }
    return out;
}

std::string hex_encode(const uint8_t* data, size_t len)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (size_t i = 0; i < len; ++i) {
        out.push_back(kDigits[data[i] >> 4]);
        out.push_back(kDigits[data[i] & 0x0f]);
    }
    return out;
}

std::string hex_encode(const Bytes& data)
{
    return hex_encode(data.data(), data.size());
}

}  // namespace blockeye
