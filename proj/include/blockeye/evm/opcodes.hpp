// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace blockeye::evm {

// Supported opcode subset: enough to express the oracle pattern
// (external call -> arithmetic -> transfer/storage write) plus the stack,
// memory and control-flow machinery around it. Anything else decodes to
// UnknownOpcodeError.
enum class OpcodeId : uint8_t {
    STOP = 0x00,
    ADD = 0x01,
    MUL = 0x02,
    SUB = 0x03,
    DIV = 0x04,
    MOD = 0x06,
    EXP = 0x0a,
    LT = 0x10,
    GT = 0x11,
    EQ = 0x14,
    ISZERO = 0x15,
    AND = 0x16,
    OR = 0x17,
    XOR = 0x18,
    NOT = 0x19,
    SHL = 0x1b,
    SHR = 0x1c,
    SHA3 = 0x20,
    ADDRESS = 0x30,
    BALANCE = 0x31,
    CALLER = 0x33,
    CALLVALUE = 0x34,
    CALLDATALOAD = 0x35,
    CALLDATASIZE = 0x36,
    RETURNDATASIZE = 0x3d,
    RETURNDATACOPY = 0x3e,
    POP = 0x50,
    MLOAD = 0x51,
    MSTORE = 0x52,
    SLOAD = 0x54,
    SSTORE = 0x55,
    JUMP = 0x56,
    JUMPI = 0x57,
    PC = 0x58,
    JUMPDEST = 0x5b,
    PUSH1 = 0x60,  // ..PUSH32 = 0x7f
    DUP1 = 0x80,   // ..DUP16 = 0x8f
    SWAP1 = 0x90,  // ..SWAP16 = 0x9f
    LOG0 = 0xa0,   // ..LOG4 = 0xa4
    CALL = 0xf1,
    RETURN = 0xf3,
    DELEGATECALL = 0xf4,
    STATICCALL = 0xfa,
    REVERT = 0xfd,
};

/// Static description of one opcode.
struct Opcode {
    std::string_view mnemonic;
    uint8_t code = 0;
    uint8_t pops = 0;
    uint8_t pushes = 0;
    uint8_t immediate_len = 0;  // 0 except PUSH1..PUSH32 (1..32)

    bool is_push() const { return code >= 0x60 && code <= 0x7f; }
    bool is_dup() const { return code >= 0x80 && code <= 0x8f; }
    bool is_swap() const { return code >= 0x90 && code <= 0x9f; }
    bool is_log() const { return code >= 0xa0 && code <= 0xa4; }
    bool is_call_family() const
    {
        return code == 0xf1 || code == 0xf4 || code == 0xfa;
    }
};

/// Table lookup by byte. Empty for bytes outside the supported subset.
std::optional<Opcode> opcode_for_byte(uint8_t byte);

/// Table lookup by mnemonic (exact, upper-case). Empty if unknown.
std::optional<Opcode> opcode_for_mnemonic(std::string_view mnemonic);

}  // namespace blockeye::evm
