// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/evm/program.hpp>

namespace blockeye::evm {

UnknownOpcodeError::UnknownOpcodeError(uint8_t byte_, size_t offset_)
    : std::runtime_error{"unknown opcode 0x" +
                         hex_encode(&byte_, 1) +
                         " at offset " + std::to_string(offset_)},
      byte{byte_},
      offset{offset_}
{}

void Program::rebuild_index()
{
    by_offset_.clear();
    by_offset_.reserve(instructions.size());
    for (size_t i = 0; i < instructions.size(); ++i)
        by_offset_.emplace(instructions[i].offset, i);
}

Instruction decode_instruction(const Bytes& code, size_t offset)
{
    const uint8_t byte = code.at(offset);
    const auto opcode = opcode_for_byte(byte);
    if (!opcode)
        throw UnknownOpcodeError{byte, offset};

    Instruction ins;
    ins.offset = offset;
    ins.opcode = *opcode;
    if (opcode->immediate_len > 0) {
        // Immediate bytes past end-of-code read as zero (EVM pads truncated
        // pushes on the right).
        Word imm = 0;
        for (unsigned i = 0; i < opcode->immediate_len; ++i) {
            imm <<= 8;
            const size_t pos = offset + 1 + i;
            if (pos < code.size())
                imm |= code[pos];
        }
        ins.immediate = imm;
    }
    return ins;
}

Program disassemble(Bytes code)
{
    Program p;
    p.code = std::move(code);
    size_t offset = 0;
    while (offset < p.code.size()) {
        Instruction ins = decode_instruction(p.code, offset);
        if (ins.opcode.code == static_cast<uint8_t>(OpcodeId::JUMPDEST))
            p.jumpdests.insert(offset);
        offset = ins.next_offset();
        p.instructions.push_back(std::move(ins));
    }
    p.rebuild_index();
    return p;
}

}  // namespace blockeye::evm
