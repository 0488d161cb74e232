// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/sym/engine.hpp>

#include <cassert>
#include <stdexcept>

namespace blockeye::sym {

namespace {

using evm::Instruction;
using evm::OpcodeId;
using evm::Program;

constexpr Word kWordSize{32};
// Regions larger than this are treated as unresolvable rather than
// materialized word by word.
constexpr Word kMaxRegionBytes{2048};

bool aligned(const Word& offset)
{
    return offset % kWordSize == 0;
}

std::optional<SymOp> binary_op_for(uint8_t code)
{
    switch (static_cast<OpcodeId>(code)) {
    case OpcodeId::ADD: return SymOp::Add;
    case OpcodeId::MUL: return SymOp::Mul;
    case OpcodeId::SUB: return SymOp::Sub;
    case OpcodeId::DIV: return SymOp::Div;
    case OpcodeId::MOD: return SymOp::Mod;
    case OpcodeId::EXP: return SymOp::Exp;
    case OpcodeId::LT: return SymOp::Lt;
    case OpcodeId::GT: return SymOp::Gt;
    case OpcodeId::EQ: return SymOp::Eq;
    case OpcodeId::AND: return SymOp::And;
    case OpcodeId::OR: return SymOp::Or;
    case OpcodeId::XOR: return SymOp::Xor;
    case OpcodeId::SHL: return SymOp::Shl;
    case OpcodeId::SHR: return SymOp::Shr;
    default: return std::nullopt;
    }
}

struct Executor {
    MachineState st;
    const Program& program;
    const CalleeClassifier& hooks;
    const Instruction& ins;
    std::vector<MachineState> out;
    bool halt_advance = false;  // pc already set or path terminal

    Executor(MachineState state, const Program& p, const CalleeClassifier& h,
             const Instruction& i)
        : st{std::move(state)}, program{p}, hooks{h}, ins{i}
    {}

    void fault(ErrorKind kind)
    {
        st.terminal = TerminalKind::ErrorTerminal;
        st.error = kind;
        halt_advance = true;
    }

    void finish(TerminalKind kind)
    {
        st.terminal = kind;
        halt_advance = true;
    }

    bool pop_many(size_t n, std::vector<SymValue>& vals)
    {
        if (st.stack.size() < n) {
            fault(ErrorKind::StackUnderflow);
            return false;
        }
        vals.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            vals.push_back(std::move(st.stack.back()));
            st.stack.pop_back();
        }
        return true;
    }

    // In control-taint mode every value entering the stack inherits the
    // taints of the branch conditions guarding it.
    SymValue with_control(SymValue v) const
    {
        if (!st.control_taint_enabled || st.control_taints.empty())
            return v;
        bool covered = true;
        for (const auto id : st.control_taints.ids()) {
            if (!v->taint.contains(id)) {
                covered = false;
                break;
            }
        }
        if (covered)
            return v;
        auto node = std::make_shared<SymNode>(*v);
        node->taint.merge(st.control_taints);
        return node;
    }

    bool push(SymValue v)
    {
        if (st.stack.size() >= kMaxStack) {
            fault(ErrorKind::StackOverflow);
            return false;
        }
        st.stack.push_back(with_control(std::move(v)));
        return true;
    }

    SymbolPool& pool() { return *st.pool; }

    Word occurrence() const { return Word{st.trace.size()}; }

    // ---- memory helpers -------------------------------------------------

    void note_mem_store_taint(const SymValue& v)
    {
        st.memory_taint_union.merge(v->taint);
    }

    void havoc_memory(const TaintSet& extra)
    {
        st.havoc_memory = true;
        st.memory_taint_union.merge(extra);
        st.memory.clear();
    }

    SymValue load_mem_word(const Word& word_offset)
    {
        auto it = st.memory.find(word_offset);
        if (it != st.memory.end())
            return it->second;
        if (st.havoc_memory)
            return pool().fresh_symbol(OriginKind::MemHavoc, occurrence(),
                                       st.memory_taint_union);
        return make_concrete(0);
    }

    // Words covering [offset, offset+len); empty when the region cannot be
    // resolved exactly.
    std::optional<std::vector<SymValue>> resolve_region(const SymValue& offset,
                                                        const SymValue& len)
    {
        if (!offset->is_concrete() || !len->is_concrete())
            return std::nullopt;
        if (!aligned(offset->value) || len->value > kMaxRegionBytes)
            return std::nullopt;
        std::vector<SymValue> words;
        const Word n = (len->value + kWordSize - 1) / kWordSize;
        for (Word k = 0; k < n; ++k) {
            const Word wo = offset->value + k * kWordSize;
            auto it = st.memory.find(wo);
            if (it != st.memory.end()) {
                words.push_back(it->second);
            } else if (st.havoc_memory) {
                return std::nullopt;  // unknown bytes inside the region
            } else {
                words.push_back(make_concrete(0));
            }
        }
        return words;
    }

    // ---- instruction handlers -------------------------------------------

    void do_push()
    {
        push(make_concrete(*ins.immediate));
    }

    void do_dup(unsigned n)
    {
        if (st.stack.size() < n) {
            fault(ErrorKind::StackUnderflow);
            return;
        }
        push(st.stack[st.stack.size() - n]);
    }

    void do_swap(unsigned n)
    {
        if (st.stack.size() < n + 1) {
            fault(ErrorKind::StackUnderflow);
            return;
        }
        std::swap(st.stack.back(), st.stack[st.stack.size() - 1 - n]);
    }

    void do_binary(SymOp op)
    {
        std::vector<SymValue> args;
        if (!pop_many(2, args))
            return;
        push(make_expr(op, std::move(args)));
    }

    void do_unary(SymOp op)
    {
        std::vector<SymValue> args;
        if (!pop_many(1, args))
            return;
        push(make_expr(op, std::move(args)));
    }

    void do_sha3()
    {
        std::vector<SymValue> args;
        if (!pop_many(2, args))
            return;
        const SymValue& offset = args[0];
        const SymValue& len = args[1];
        auto region = resolve_region(offset, len);
        if (region) {
            // Deterministic in the region's identity: same offset, length
            // and word values hash to the same symbol within a path.
            std::string key = "o:" + word_to_hex(offset->value) +
                              ",l:" + word_to_hex(len->value);
            TaintSet taint;
            for (const auto& w : *region) {
                key += ',';
                key += render(w);
                taint.merge(w->taint);
            }
            auto it = st.sha3_regions.find(key);
            if (it != st.sha3_regions.end()) {
                push(it->second);
                return;
            }
            auto sym = pool().fresh_symbol(OriginKind::Sha3, len->value,
                                           std::move(taint), *region);
            st.sha3_regions.emplace(std::move(key), sym);
            push(std::move(sym));
            return;
        }
        TaintSet taint = st.memory_taint_union;
        taint.merge(offset->taint);
        taint.merge(len->taint);
        push(pool().fresh_symbol(OriginKind::Sha3, occurrence(),
                                 std::move(taint)));
    }

    void do_calldataload()
    {
        std::vector<SymValue> args;
        if (!pop_many(1, args))
            return;
        const SymValue& offset = args[0];
        if (offset->is_concrete()) {
            if (st.env.calldata) {
                Word w = 0;
                const Bytes& cd = *st.env.calldata;
                for (unsigned i = 0; i < kWordBytes; ++i) {
                    w <<= 8;
                    const Word pos = offset->value + i;
                    if (pos < cd.size())
                        w |= cd[static_cast<size_t>(pos)];
                }
                push(make_concrete(w, offset->taint));
                return;
            }
            auto it = st.calldata_words.find(offset->value);
            if (it != st.calldata_words.end()) {
                push(it->second);
                return;
            }
            auto sym = pool().fresh_symbol(OriginKind::Calldata, offset->value);
            st.calldata_words.emplace(offset->value, sym);
            push(std::move(sym));
            return;
        }
        push(pool().fresh_symbol(OriginKind::Calldata, occurrence(),
                                 offset->taint));
    }

    SymValue memo_env(std::optional<SymValue>& slot, std::optional<Word> conc,
                      OriginKind origin)
    {
        if (!slot) {
            slot = conc ? make_concrete(*conc)
                        : pool().fresh_symbol(origin);
        }
        return *slot;
    }

    void do_mload()
    {
        std::vector<SymValue> args;
        if (!pop_many(1, args))
            return;
        const SymValue& offset = args[0];
        if (offset->is_concrete() && aligned(offset->value)) {
            push(load_mem_word(offset->value));
            return;
        }
        TaintSet taint = st.memory_taint_union;
        taint.merge(offset->taint);
        push(pool().fresh_symbol(OriginKind::MemHavoc, occurrence(),
                                 std::move(taint)));
    }

    void do_mstore()
    {
        std::vector<SymValue> args;
        if (!pop_many(2, args))
            return;
        const SymValue& offset = args[0];
        SymValue& value = args[1];
        note_mem_store_taint(value);
        if (offset->is_concrete() && aligned(offset->value)) {
            st.memory[offset->value] = std::move(value);
            return;
        }
        havoc_memory(offset->taint);
    }

    void do_sload()
    {
        std::vector<SymValue> args;
        if (!pop_many(1, args))
            return;
        const SymValue& slot = args[0];
        if (slot->is_concrete()) {
            auto it = st.storage.find(slot->value);
            if (it != st.storage.end()) {
                push(it->second);
                return;
            }
            SymValue v = st.havoc_storage
                             ? pool().fresh_symbol(OriginKind::StorageHavoc,
                                                   occurrence(),
                                                   st.storage_taint_union)
                             : pool().fresh_symbol(OriginKind::StorageInit,
                                                   slot->value);
            st.storage.emplace(slot->value, v);
            push(std::move(v));
            return;
        }
        // Reading through an unknown slot leaves the region unknown from
        // here on.
        st.havoc_storage = true;
        TaintSet taint = st.storage_taint_union;
        taint.merge(slot->taint);
        push(pool().fresh_symbol(OriginKind::StorageHavoc, occurrence(),
                                 std::move(taint)));
    }

    void do_sstore()
    {
        std::vector<SymValue> args;
        if (!pop_many(2, args))
            return;
        SymValue& slot = args[0];
        SymValue& value = args[1];
        st.storage_writes.push_back(StorageWriteRecord{
            ins.offset, st.trace.size() - 1, slot, value});
        st.storage_taint_union.merge(value->taint);
        if (slot->is_concrete()) {
            st.storage[slot->value] = std::move(value);
            return;
        }
        st.havoc_storage = true;
        st.storage_taint_union.merge(slot->taint);
        st.storage.clear();
    }

    bool jump_to(const SymValue& target)
    {
        if (!target->is_concrete()) {
            fault(ErrorKind::SymbolicJumpTarget);
            return false;
        }
        if (target->value > Word{program.code.size()} ||
            !program.is_jumpdest(static_cast<size_t>(target->value))) {
            fault(ErrorKind::InvalidJumpTarget);
            return false;
        }
        st.pc = static_cast<size_t>(target->value);
        return true;
    }

    void do_jump()
    {
        std::vector<SymValue> args;
        if (!pop_many(1, args))
            return;
        if (jump_to(args[0]))
            halt_advance = true;
    }

    void do_jumpi()
    {
        std::vector<SymValue> args;
        if (!pop_many(2, args))
            return;
        const SymValue& target = args[0];
        const SymValue& cond = args[1];

        if (cond->is_concrete()) {
            if (cond->value != 0) {
                if (jump_to(target))
                    halt_advance = true;
            }
            // Falsy concrete condition: fall through, no constraint.
            return;
        }

        // Symbolic condition: fork into (false, true) successors.
        MachineState false_branch = st;
        false_branch.constraints.push_back(Constraint{cond, false});
        false_branch.pc = ins.next_offset();

        MachineState true_branch = std::move(st);
        true_branch.constraints.push_back(Constraint{cond, true});
        if (true_branch.control_taint_enabled) {
            false_branch.control_taints.merge(cond->taint);
            true_branch.control_taints.merge(cond->taint);
        }
        out.push_back(std::move(false_branch));

        if (!target->is_concrete()) {
            true_branch.terminal = TerminalKind::ErrorTerminal;
            true_branch.error = ErrorKind::SymbolicJumpTarget;
        } else if (target->value > Word{program.code.size()} ||
                   !program.is_jumpdest(static_cast<size_t>(target->value))) {
            true_branch.terminal = TerminalKind::ErrorTerminal;
            true_branch.error = ErrorKind::InvalidJumpTarget;
        } else {
            true_branch.pc = static_cast<size_t>(target->value);
        }
        out.push_back(std::move(true_branch));
    }

    void write_return_data(const SymValue& ret_offset, const SymValue& ret_len,
                           const SymValue& returned)
    {
        if (ret_len->is_concrete() && ret_len->value == 0)
            return;
        if (ret_len->is_concrete() && ret_offset->is_concrete() &&
            aligned(ret_offset->value) && ret_len->value <= kMaxRegionBytes) {
            const Word n = (ret_len->value + kWordSize - 1) / kWordSize;
            note_mem_store_taint(returned);
            st.memory[ret_offset->value] = returned;
            for (Word k = 1; k < n; ++k) {
                st.memory[ret_offset->value + k * kWordSize] =
                    pool().fresh_symbol(OriginKind::ReturndataWord,
                                        occurrence(), returned->taint);
            }
            return;
        }
        havoc_memory(returned->taint);
    }

    void do_call(CallKind kind)
    {
        const size_t pops = kind == CallKind::Call ? 7 : 6;
        std::vector<SymValue> args;
        if (!pop_many(pops, args))
            return;

        size_t i = 1;  // args[0] = gas, ignored
        const SymValue callee = args[i++];
        const SymValue value =
            kind == CallKind::Call ? args[i++] : make_concrete(0);
        const SymValue args_offset = args[i++];
        const SymValue args_len = args[i++];
        const SymValue ret_offset = args[i++];
        const SymValue ret_len = args[i++];

        ExternalCallRecord rec;
        rec.site = ins.offset;
        rec.trace_index = st.trace.size() - 1;
        rec.kind = kind;
        rec.callee = callee;
        rec.value = value;
        rec.classified = hooks.classify(callee);

        if (args_len->is_concrete() && args_len->value == 0) {
            // no calldata
        } else if (auto words = resolve_region(args_offset, args_len)) {
            rec.args = std::move(*words);
        } else {
            TaintSet taint = st.memory_taint_union;
            taint.merge(args_offset->taint);
            taint.merge(args_len->taint);
            rec.args.push_back(pool().fresh_symbol(
                OriginKind::MemHavoc, occurrence(), std::move(taint)));
        }
        for (const auto& w : rec.args)
            rec.args_tainted = rec.args_tainted || !w->taint.empty();

        const Word call_index{st.call_log.size()};
        TaintSet ret_taint;
        if (rec.classified == CalleeClass::Oracle) {
            rec.origin = pool().fresh_origin();
            ret_taint.add(*rec.origin);
        }
        rec.returned = pool().fresh_symbol(OriginKind::CallReturn, call_index,
                                           std::move(ret_taint));

        write_return_data(ret_offset, ret_len, rec.returned);
        st.last_call_return = rec.returned;
        SymValue pushed = rec.returned;
        st.call_log.push_back(std::move(rec));
        push(std::move(pushed));
    }

    void do_returndatacopy()
    {
        std::vector<SymValue> args;
        if (!pop_many(3, args))
            return;
        const SymValue& dest = args[0];
        const SymValue& len = args[2];
        TaintSet source_taint;
        if (st.last_call_return)
            source_taint = (*st.last_call_return)->taint;

        if (len->is_concrete() && len->value == 0)
            return;
        if (dest->is_concrete() && aligned(dest->value) &&
            len->is_concrete() && len->value <= kMaxRegionBytes) {
            const Word n = (len->value + kWordSize - 1) / kWordSize;
            st.memory_taint_union.merge(source_taint);
            for (Word k = 0; k < n; ++k) {
                st.memory[dest->value + k * kWordSize] = pool().fresh_symbol(
                    OriginKind::ReturndataWord, occurrence(), source_taint);
            }
            return;
        }
        havoc_memory(source_taint);
    }

    // Executes `ins`; fills `out` with successors.
    void run()
    {
        const uint8_t code = ins.opcode.code;
        const auto id = static_cast<OpcodeId>(code);

        if (ins.opcode.is_push()) {
            do_push();
        } else if (ins.opcode.is_dup()) {
            do_dup(code - 0x7f);
        } else if (ins.opcode.is_swap()) {
            do_swap(code - 0x8f);
        } else if (ins.opcode.is_log()) {
            std::vector<SymValue> args;
            pop_many(ins.opcode.pops, args);
        } else if (auto op = binary_op_for(code)) {
            do_binary(*op);
        } else {
            switch (id) {
            case OpcodeId::STOP:
                finish(TerminalKind::Stop);
                break;
            case OpcodeId::ISZERO:
                do_unary(SymOp::IsZero);
                break;
            case OpcodeId::NOT:
                do_unary(SymOp::Not);
                break;
            case OpcodeId::SHA3:
                do_sha3();
                break;
            case OpcodeId::ADDRESS:
                push(memo_env(st.self_sym, st.env.self_address,
                              OriginKind::SelfAddress));
                break;
            case OpcodeId::BALANCE: {
                std::vector<SymValue> args;
                if (pop_many(1, args))
                    push(pool().fresh_symbol(OriginKind::Balance, occurrence(),
                                             args[0]->taint));
                break;
            }
            case OpcodeId::CALLER:
                push(memo_env(st.caller_sym, st.env.caller, OriginKind::Caller));
                break;
            case OpcodeId::CALLVALUE:
                push(memo_env(st.callvalue_sym, st.env.callvalue,
                              OriginKind::Callvalue));
                break;
            case OpcodeId::CALLDATALOAD:
                do_calldataload();
                break;
            case OpcodeId::CALLDATASIZE:
                push(memo_env(st.calldatasize_sym,
                              st.env.calldata
                                  ? std::optional<Word>{st.env.calldata->size()}
                                  : std::nullopt,
                              OriginKind::Calldatasize));
                break;
            case OpcodeId::RETURNDATASIZE:
                push(pool().fresh_symbol(OriginKind::ReturndataSize,
                                         occurrence()));
                break;
            case OpcodeId::RETURNDATACOPY:
                do_returndatacopy();
                break;
            case OpcodeId::POP: {
                std::vector<SymValue> args;
                pop_many(1, args);
                break;
            }
            case OpcodeId::MLOAD:
                do_mload();
                break;
            case OpcodeId::MSTORE:
                do_mstore();
                break;
            case OpcodeId::SLOAD:
                do_sload();
                break;
            case OpcodeId::SSTORE:
                do_sstore();
                break;
            case OpcodeId::JUMP:
                do_jump();
                break;
            case OpcodeId::JUMPI:
                do_jumpi();
                break;
            case OpcodeId::PC:
                push(make_concrete(Word{ins.offset}));
                break;
            case OpcodeId::JUMPDEST:
                ++st.jumpdest_visits[ins.offset];
                break;
            case OpcodeId::CALL:
                do_call(CallKind::Call);
                break;
            case OpcodeId::DELEGATECALL:
                do_call(CallKind::DelegateCall);
                break;
            case OpcodeId::STATICCALL:
                do_call(CallKind::StaticCall);
                break;
            case OpcodeId::RETURN: {
                std::vector<SymValue> args;
                if (pop_many(2, args))
                    finish(TerminalKind::Return);
                break;
            }
            case OpcodeId::REVERT: {
                std::vector<SymValue> args;
                if (pop_many(2, args))
                    finish(TerminalKind::Revert);
                break;
            }
            default:
                // Decoding guarantees table membership.
                assert(false && "unhandled opcode");
                finish(TerminalKind::Stop);
            }
        }

        if (!out.empty())
            return;  // fork handled its own successors
        if (!halt_advance)
            st.pc = ins.next_offset();
        out.push_back(std::move(st));
    }
};

}  // namespace

std::string_view name(CalleeClass c)
{
    switch (c) {
    case CalleeClass::Oracle: return "oracle";
    case CalleeClass::Token: return "token";
    case CalleeClass::Unknown: return "unknown";
    }
    return "?";
}

std::string_view name(TerminalKind k)
{
    switch (k) {
    case TerminalKind::Running: return "running";
    case TerminalKind::Stop: return "stop";
    case TerminalKind::Return: return "return";
    case TerminalKind::Revert: return "revert";
    case TerminalKind::ErrorTerminal: return "error";
    case TerminalKind::BoundCut: return "bound_cut";
    }
    return "?";
}

std::string_view name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::None: return "none";
    case ErrorKind::StackUnderflow: return "stack_underflow";
    case ErrorKind::StackOverflow: return "stack_overflow";
    case ErrorKind::SymbolicJumpTarget: return "symbolic_jump_target";
    case ErrorKind::InvalidJumpTarget: return "invalid_jump_target";
    }
    return "?";
}

std::string_view name(CutKind k)
{
    switch (k) {
    case CutKind::None: return "none";
    case CutKind::MaxDepth: return "max_depth";
    case CutKind::LoopBound: return "loop_bound";
    case CutKind::Infeasible: return "infeasible";
    }
    return "?";
}

size_t ExploreResult::cut_count() const
{
    size_t cuts = frontier_abandoned;
    for (const auto& t : terminals) {
        if (t.terminal == TerminalKind::BoundCut && t.cut != CutKind::Infeasible)
            ++cuts;
    }
    return cuts;
}

MachineState init_state(const evm::Program& program, CallEnv env)
{
    (void)program;
    MachineState st;
    st.pc = 0;
    st.env = std::move(env);
    st.pool = std::make_shared<SymbolPool>();
    return st;
}

std::vector<MachineState> step(const MachineState& state,
                               const evm::Program& program,
                               const CalleeClassifier& hooks)
{
    if (state.is_terminal())
        throw std::logic_error{"step on a terminal state"};

    const Instruction* ins = state.pc < program.code.size()
                                 ? program.instruction_at(state.pc)
                                 : nullptr;
    if (ins == nullptr) {
        // Fell off the end of code: implicit STOP.
        MachineState done = state;
        done.terminal = TerminalKind::Stop;
        return {std::move(done)};
    }

    MachineState next = state;
    next.trace.push_back(ins->offset);
    Executor exec{std::move(next), program, hooks, *ins};
    exec.run();
    return std::move(exec.out);
}

ExploreResult explore(const evm::Program& program, const ExploreConfig& config,
                      const CalleeClassifier& hooks, CallEnv env)
{
    if (config.max_depth < 1 || config.max_paths < 1 || config.loop_bound < 1)
        throw std::invalid_argument{"exploration bounds must be >= 1"};

    const auto backend = make_backend(config.feasibility);
    ExploreResult result;
    std::vector<MachineState> work;
    work.push_back(init_state(program, std::move(env)));
    work.back().control_taint_enabled = config.control_taint;

    // Cuts before the visit that would exceed the bound, so recorded visit
    // counts never pass loop_bound.
    auto would_exceed_loop_bound = [&](const MachineState& s) {
        if (!program.is_jumpdest(s.pc))
            return false;
        auto it = s.jumpdest_visits.find(s.pc);
        return it != s.jumpdest_visits.end() && it->second >= config.loop_bound;
    };

    while (!work.empty()) {
        MachineState current = std::move(work.back());
        work.pop_back();

        while (true) {
            if (current.is_terminal()) {
                result.terminals.push_back(std::move(current));
                break;
            }
            if (current.trace.size() >= config.max_depth) {
                current.terminal = TerminalKind::BoundCut;
                current.cut = CutKind::MaxDepth;
                result.terminals.push_back(std::move(current));
                break;
            }
            if (would_exceed_loop_bound(current)) {
                current.terminal = TerminalKind::BoundCut;
                current.cut = CutKind::LoopBound;
                result.terminals.push_back(std::move(current));
                break;
            }

            auto succs = step(current, program, hooks);
            if (succs.size() == 2) {
                // Fork: prune provably contradictory branches, explore the
                // false branch first.
                for (auto& s : succs) {
                    if (!s.is_terminal() &&
                        backend->check(s.constraints) == Feasibility::Infeasible) {
                        s.terminal = TerminalKind::BoundCut;
                        s.cut = CutKind::Infeasible;
                    }
                }
                work.push_back(std::move(succs[1]));
                current = std::move(succs[0]);
            } else {
                current = std::move(succs[0]);
            }
        }

        if (result.terminals.size() >= config.max_paths) {
            result.frontier_abandoned = work.size();
            break;
        }
    }
    return result;
}

}  // namespace blockeye::sym
