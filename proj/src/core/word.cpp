// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/core/word.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace blockeye {

Word word_from_bytes_be(const uint8_t* data, size_t len)
{
    Word w = 0;
    for (size_t i = 0; i < len; ++i) {
        w <<= 8;
        w |= data[i];
    }
    return w;
}

void word_to_bytes_be(const Word& w, uint8_t out[kWordBytes])
{
    Word v = w;
    for (int i = kWordBytes - 1; i >= 0; --i) {
        out[i] = static_cast<uint8_t>(v & 0xff);
        v >>= 8;
    }
}

Word word_from_dec(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument{"decimal: empty string"};
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument{"decimal: invalid character"};
    }
    // Bounds check via unbounded parse: uint256_t would silently truncate.
    const BigInt big{s};
    if (big >> 256 != 0)
        throw std::invalid_argument{"decimal: value does not fit in 256 bits"};
    return Word{s};
}

std::string word_to_dec(const Word& w)
{
    return w.str();
}

std::string word_to_hex(const Word& w)
{
    std::ostringstream os;
    os << std::hex << w;
    std::string s = os.str();
    for (auto& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace blockeye
