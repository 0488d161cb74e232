// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/core/hex.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockeye::evm {

class AsmParseError : public std::runtime_error {
public:
    AsmParseError(size_t line, const std::string& what);

    size_t line;
};

/// Assembles mnemonic text into bytecode, one instruction per line.
///
///   PUSH1 0x01        ; immediates in hex (0x..) or decimal
///   ADD               ; comments start with ';' or '#'
///   @loop: JUMPDEST   ; "@name:" defines a label at this offset
///   PUSH2 @loop       ; "@name" as an immediate inserts the label offset
///
/// Labels always assemble with the PUSH width given by the mnemonic; an
/// offset that does not fit the width is an AsmParseError. Round-trips with
/// disassemble() on the (mnemonic, immediate) sequence.
Bytes assemble(std::string_view text);

}  // namespace blockeye::evm
