// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include "interpreter.hpp"

#include <stdexcept>

namespace blockeye::testsupport {

namespace {

using evm::Instruction;
using evm::OpcodeId;

class Machine {
public:
    Machine(const evm::Program& program, const ConcreteInput& input)
        : program_{program}, input_{input}
    {}

    ConcreteResult run(size_t max_steps)
    {
        for (size_t step = 0; step < max_steps; ++step) {
            if (pc_ >= program_.code.size()) {
                result_.status = ConcreteStatus::Stop;
                return finish();
            }
            const Instruction* ins = program_.instruction_at(pc_);
            if (ins == nullptr) {
                result_.status = ConcreteStatus::InvalidJump;
                return finish();
            }
            result_.trace.push_back(ins->offset);
            if (!execute(*ins))
                return finish();
        }
        result_.status = ConcreteStatus::OutOfSteps;
        return finish();
    }

private:
    ConcreteResult finish()
    {
        result_.final_stack = stack_;
        result_.storage = storage_;
        return std::move(result_);
    }

    bool halt(ConcreteStatus status)
    {
        result_.status = status;
        halted_ = true;
        return false;
    }

    bool underflow(size_t need)
    {
        return stack_.size() < need;
    }

    Word pop()
    {
        Word w = stack_.back();
        stack_.pop_back();
        return w;
    }

    bool push(Word w)
    {
        if (stack_.size() >= 1024)
            return halt(ConcreteStatus::StackOverflow);
        stack_.push_back(std::move(w));
        return true;
    }

    void mem_grow(size_t end)
    {
        if (memory_.size() < end)
            memory_.resize(end, 0);
    }

    void mem_store_word(size_t offset, const Word& w)
    {
        mem_grow(offset + 32);
        uint8_t buf[32];
        word_to_bytes_be(w, buf);
        std::copy(buf, buf + 32, memory_.begin() + static_cast<ptrdiff_t>(offset));
    }

    Word mem_load_word(size_t offset)
    {
        Word w = 0;
        for (size_t i = 0; i < 32; ++i) {
            w <<= 8;
            const size_t pos = offset + i;
            if (pos < memory_.size())
                w |= memory_[pos];
        }
        return w;
    }

    Word calldata_word(const Word& offset) const
    {
        Word w = 0;
        for (unsigned i = 0; i < 32; ++i) {
            w <<= 8;
            const Word pos = offset + i;
            if (pos < input_.calldata.size())
                w |= input_.calldata[static_cast<size_t>(pos)];
        }
        return w;
    }

    Word sload(const Word& slot)
    {
        auto it = storage_.find(slot);
        if (it != storage_.end())
            return it->second;
        const Word initial = input_.storage_init(slot);
        storage_.emplace(slot, initial);
        return initial;
    }

    bool jump_to(const Word& target)
    {
        if (target > Word{program_.code.size()} ||
            !program_.is_jumpdest(static_cast<size_t>(target)))
            return halt(ConcreteStatus::InvalidJump);
        pc_ = static_cast<size_t>(target);
        return true;
    }

    // Returns false when the run halted (normally or not).
    bool execute(const Instruction& ins)
    {
        const auto& op = ins.opcode;
        const auto id = static_cast<OpcodeId>(op.code);

        if (underflow(op.pops)) {
            result_.status = ConcreteStatus::StackUnderflow;
            return false;
        }

        bool advance = true;
        if (op.is_push()) {
            if (!push(*ins.immediate))
                return false;
        } else if (op.is_dup()) {
            if (!push(stack_[stack_.size() - (op.code - 0x7f)]))
                return false;
        } else if (op.is_swap()) {
            const unsigned n = op.code - 0x8f;
            std::swap(stack_.back(), stack_[stack_.size() - 1 - n]);
        } else if (op.is_log()) {
            for (unsigned i = 0; i < op.pops; ++i)
                pop();
        } else {
            switch (id) {
            case OpcodeId::STOP:
                return halt(ConcreteStatus::Stop);
            case OpcodeId::ADD: {
                const Word a = pop(), b = pop();
                push(a + b);
                break;
            }
            case OpcodeId::MUL: {
                const Word a = pop(), b = pop();
                push(a * b);
                break;
            }
            case OpcodeId::SUB: {
                const Word a = pop(), b = pop();
                push(a - b);
                break;
            }
            case OpcodeId::DIV: {
                const Word a = pop(), b = pop();
                push(b == 0 ? Word{0} : a / b);
                break;
            }
            case OpcodeId::MOD: {
                const Word a = pop(), b = pop();
                push(b == 0 ? Word{0} : a % b);
                break;
            }
            case OpcodeId::EXP: {
                Word base = pop(), exponent = pop();
                Word r = 1;
                while (exponent != 0) {
                    if ((exponent & 1) != 0)
                        r *= base;
                    base *= base;
                    exponent >>= 1;
                }
                push(r);
                break;
            }
            case OpcodeId::LT: {
                const Word a = pop(), b = pop();
                push(a < b ? Word{1} : Word{0});
                break;
            }
            case OpcodeId::GT: {
                const Word a = pop(), b = pop();
                push(a > b ? Word{1} : Word{0});
                break;
            }
            case OpcodeId::EQ: {
                const Word a = pop(), b = pop();
                push(a == b ? Word{1} : Word{0});
                break;
            }
            case OpcodeId::ISZERO:
                push(pop() == 0 ? Word{1} : Word{0});
                break;
            case OpcodeId::AND: {
                const Word a = pop(), b = pop();
                push(a & b);
                break;
            }
            case OpcodeId::OR: {
                const Word a = pop(), b = pop();
                push(a | b);
                break;
            }
            case OpcodeId::XOR: {
                const Word a = pop(), b = pop();
                push(a ^ b);
                break;
            }
            case OpcodeId::NOT:
                push(~pop());
                break;
            case OpcodeId::SHL: {
                const Word shift = pop(), value = pop();
                push(shift >= 256 ? Word{0}
                                  : value << static_cast<unsigned>(shift));
                break;
            }
            case OpcodeId::SHR: {
                const Word shift = pop(), value = pop();
                push(shift >= 256 ? Word{0}
                                  : value >> static_cast<unsigned>(shift));
                break;
            }
            case OpcodeId::SHA3:
                throw std::logic_error{
                    "SHA3 is outside the reference interpreter's scope"};
            case OpcodeId::ADDRESS:
                push(input_.self_address);
                break;
            case OpcodeId::BALANCE:
                pop();
                push(0);
                break;
            case OpcodeId::CALLER:
                push(input_.caller);
                break;
            case OpcodeId::CALLVALUE:
                push(input_.callvalue);
                break;
            case OpcodeId::CALLDATALOAD:
                push(calldata_word(pop()));
                break;
            case OpcodeId::CALLDATASIZE:
                push(Word{input_.calldata.size()});
                break;
            case OpcodeId::RETURNDATASIZE:
                push(0);
                break;
            case OpcodeId::RETURNDATACOPY:
                pop();
                pop();
                pop();
                break;
            case OpcodeId::POP:
                pop();
                break;
            case OpcodeId::MLOAD: {
                const Word offset = pop();
                push(mem_load_word(static_cast<size_t>(offset)));
                break;
            }
            case OpcodeId::MSTORE: {
                const Word offset = pop();
                const Word value = pop();
                mem_store_word(static_cast<size_t>(offset), value);
                break;
            }
            case OpcodeId::SLOAD:
                push(sload(pop()));
                break;
            case OpcodeId::SSTORE: {
                const Word slot = pop();
                const Word value = pop();
                storage_[slot] = value;
                break;
            }
            case OpcodeId::JUMP:
                if (!jump_to(pop()))
                    return false;
                advance = false;
                break;
            case OpcodeId::JUMPI: {
                const Word target = pop();
                const Word cond = pop();
                if (cond != 0) {
                    if (!jump_to(target))
                        return false;
                    advance = false;
                }
                break;
            }
            case OpcodeId::PC:
                push(Word{ins.offset});
                break;
            case OpcodeId::JUMPDEST:
                break;
            case OpcodeId::CALL:
            case OpcodeId::DELEGATECALL:
            case OpcodeId::STATICCALL: {
                const bool with_value = id == OpcodeId::CALL;
                pop();  // gas
                const Word callee = pop();
                const Word value = with_value ? pop() : Word{0};
                pop();  // args offset
                pop();  // args length
                const Word ret_offset = pop();
                const Word ret_len = pop();

                const Word ret =
                    input_.call_returns[result_.calls.size() %
                                        input_.call_returns.size()];
                result_.calls.push_back(
                    ConcreteCallEvent{ins.offset, callee, value});
                if (ret_len != 0)
                    mem_store_word(static_cast<size_t>(ret_offset), ret);
                push(ret);
                break;
            }
            case OpcodeId::RETURN:
                pop();
                pop();
                return halt(ConcreteStatus::Return);
            case OpcodeId::REVERT:
                pop();
                pop();
                return halt(ConcreteStatus::Revert);
            default:
                throw std::logic_error{"unhandled opcode in interpreter"};
            }
        }

        if (halted_)
            return false;
        if (advance)
            pc_ = ins.next_offset();
        return true;
    }

    const evm::Program& program_;
    const ConcreteInput& input_;
    bool halted_ = false;
    size_t pc_ = 0;
    std::vector<Word> stack_;
    std::vector<uint8_t> memory_;
    std::map<Word, Word> storage_;
    ConcreteResult result_;
};

}  // namespace

ConcreteResult run_concrete(const evm::Program& program,
                            const ConcreteInput& input, size_t max_steps)
{
    Machine m{program, input};
    return m.run(max_steps);
}

}  // namespace blockeye::testsupport
