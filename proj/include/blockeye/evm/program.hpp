// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/core/hex.hpp>
#include <blockeye/core/word.hpp>
#include <blockeye/evm/opcodes.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace blockeye::evm {

/// Byte outside the supported opcode table; carries the offending offset so
/// diagnostics can show where decoding stopped.
class UnknownOpcodeError : public std::runtime_error {
public:
    UnknownOpcodeError(uint8_t byte, size_t offset);

    uint8_t byte;
    size_t offset;
};

struct Instruction {
    size_t offset = 0;
    Opcode opcode;
    // Present iff opcode.immediate_len > 0; truncated pushes are
    // zero-padded on the right per EVM semantics.
    std::optional<Word> immediate;

    size_t size() const { return 1 + opcode.immediate_len; }
    size_t next_offset() const { return offset + size(); }
};

/// Decoded bytecode: instructions tile `code` without gaps or overlaps.
struct Program {
    Bytes code;
    std::vector<Instruction> instructions;
    std::unordered_set<size_t> jumpdests;

    bool is_jumpdest(size_t offset) const { return jumpdests.contains(offset); }

    /// Instruction starting exactly at `offset`, if any.
    const Instruction* instruction_at(size_t offset) const
    {
        auto it = by_offset_.find(offset);
        return it == by_offset_.end() ? nullptr : &instructions[it->second];
    }

    void rebuild_index();

private:
    std::unordered_map<size_t, size_t> by_offset_;
};

/// Decodes the instruction starting at `offset`. Requires offset < code size.
Instruction decode_instruction(const Bytes& code, size_t offset);

/// Decodes a whole byte sequence in one pass, collecting jump destinations.
/// Bytes inside PUSH immediates are data, never JUMPDESTs.
Program disassemble(Bytes code);

}  // namespace blockeye::evm
