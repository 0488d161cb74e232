// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/evm/opcodes.hpp>

#include <array>
#include <deque>
#include <map>
#include <string>

namespace blockeye::evm {

namespace {

struct Tables {
    std::array<std::optional<Opcode>, 256> by_byte;
    std::map<std::string, Opcode, std::less<>> by_name;
    // Owns generated family mnemonics; deque keeps them address-stable.
    std::deque<std::string> names;

    void add(std::string mnemonic, uint8_t code, uint8_t pops, uint8_t pushes,
             uint8_t immediate_len = 0)
    {
        names.push_back(std::move(mnemonic));
        const Opcode op{names.back(), code, pops, pushes, immediate_len};
        by_byte[code] = op;
        by_name.emplace(names.back(), op);
    }
};

Tables build_tables()
{
    Tables t;
    t.add("STOP", 0x00, 0, 0);
    t.add("ADD", 0x01, 2, 1);
    t.add("MUL", 0x02, 2, 1);
    t.add("SUB", 0x03, 2, 1);
    t.add("DIV", 0x04, 2, 1);
    t.add("MOD", 0x06, 2, 1);
    t.add("EXP", 0x0a, 2, 1);
    t.add("LT", 0x10, 2, 1);
    t.add("GT", 0x11, 2, 1);
    t.add("EQ", 0x14, 2, 1);
    t.add("ISZERO", 0x15, 1, 1);
    t.add("AND", 0x16, 2, 1);
    t.add("OR", 0x17, 2, 1);
    t.add("XOR", 0x18, 2, 1);
    t.add("NOT", 0x19, 1, 1);
    t.add("SHL", 0x1b, 2, 1);
    t.add("SHR", 0x1c, 2, 1);
    t.add("SHA3", 0x20, 2, 1);
    t.add("ADDRESS", 0x30, 0, 1);
    t.add("BALANCE", 0x31, 1, 1);
    t.add("CALLER", 0x33, 0, 1);
    t.add("CALLVALUE", 0x34, 0, 1);
    t.add("CALLDATALOAD", 0x35, 1, 1);
    t.add("CALLDATASIZE", 0x36, 0, 1);
    t.add("RETURNDATASIZE", 0x3d, 0, 1);
    t.add("RETURNDATACOPY", 0x3e, 3, 0);
    t.add("POP", 0x50, 1, 0);
    t.add("MLOAD", 0x51, 1, 1);
    t.add("MSTORE", 0x52, 2, 0);
    t.add("SLOAD", 0x54, 1, 1);
    t.add("SSTORE", 0x55, 2, 0);
    t.add("JUMP", 0x56, 1, 0);
    t.add("JUMPI", 0x57, 2, 0);
    t.add("PC", 0x58, 0, 1);
    t.add("JUMPDEST", 0x5b, 0, 0);
    for (int n = 1; n <= 32; ++n)
        t.add("PUSH" + std::to_string(n), static_cast<uint8_t>(0x5f + n), 0, 1,
              static_cast<uint8_t>(n));
    for (int n = 1; n <= 16; ++n)
        t.add("DUP" + std::to_string(n), static_cast<uint8_t>(0x7f + n),
              static_cast<uint8_t>(n), static_cast<uint8_t>(n + 1));
    for (int n = 1; n <= 16; ++n)
        t.add("SWAP" + std::to_string(n), static_cast<uint8_t>(0x8f + n),
              static_cast<uint8_t>(n + 1), static_cast<uint8_t>(n + 1));
    for (int n = 0; n <= 4; ++n)
        t.add("LOG" + std::to_string(n), static_cast<uint8_t>(0xa0 + n),
              static_cast<uint8_t>(n + 2), 0);
    t.add("CALL", 0xf1, 7, 1);
    t.add("RETURN", 0xf3, 2, 0);
    t.add("DELEGATECALL", 0xf4, 6, 1);
    t.add("STATICCALL", 0xfa, 6, 1);
    t.add("REVERT", 0xfd, 2, 0);

    return t;
}

const Tables& tables()
{
    static const Tables t = build_tables();
    return t;
}

}  // namespace

std::optional<Opcode> opcode_for_byte(uint8_t byte)
{
    return tables().by_byte[byte];
}

std::optional<Opcode> opcode_for_mnemonic(std::string_view mnemonic)
{
    const auto& m = tables().by_name;
    auto it = m.find(mnemonic);
    if (it == m.end())
        return std::nullopt;
    return it->second;
}

}  // namespace blockeye::evm
