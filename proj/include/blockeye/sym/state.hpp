// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/core/address.hpp>
#include <blockeye/core/hex.hpp>
#include <blockeye/sym/value.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace blockeye::sym {

inline constexpr size_t kMaxStack = 1024;

/// One path-constraint entry: `value` was branched on and asserted to be
/// truthy (non-zero) or falsy (zero).
struct Constraint {
    SymValue value;
    bool asserted_true = true;
};

enum class CalleeClass : uint8_t { Oracle, Token, Unknown };

std::string_view name(CalleeClass c);

/// Classification hook consulted for every CALL/STATICCALL/DELEGATECALL.
class CalleeClassifier {
public:
    virtual ~CalleeClassifier() = default;
    virtual CalleeClass classify(const SymValue& callee) const = 0;
};

enum class CallKind : uint8_t { Call, StaticCall, DelegateCall };

struct ExternalCallRecord {
    size_t site = 0;          // instruction offset of the call
    size_t trace_index = 0;   // position of `site` in the path trace
    CallKind kind = CallKind::Call;
    SymValue callee;
    SymValue value;           // Concrete(0) for STATICCALL/DELEGATECALL
    std::vector<SymValue> args;  // calldata words when resolvable
    bool args_tainted = false;
    CalleeClass classified = CalleeClass::Unknown;
    SymValue returned;
    std::optional<OracleOriginId> origin;  // set iff classified Oracle
};

struct StorageWriteRecord {
    size_t site = 0;
    size_t trace_index = 0;
    SymValue slot;
    SymValue value;
};

enum class TerminalKind : uint8_t {
    Running,       // not terminal yet
    Stop,
    Return,
    Revert,
    ErrorTerminal,
    BoundCut,
};

enum class ErrorKind : uint8_t {
    None,
    StackUnderflow,
    StackOverflow,
    SymbolicJumpTarget,
    InvalidJumpTarget,
};

enum class CutKind : uint8_t { None, MaxDepth, LoopBound, Infeasible };

std::string_view name(TerminalKind k);
std::string_view name(ErrorKind k);
std::string_view name(CutKind k);

/// Concrete environment overrides. Absent fields become fresh symbols on
/// first use.
struct CallEnv {
    std::optional<Word> callvalue;
    std::optional<Word> caller;
    std::optional<Word> self_address;
    std::optional<Bytes> calldata;
};

/// Machine state of one execution path. Forked by value; a forked copy never
/// mutates its sibling. The shared SymbolPool is only advanced by the single
/// thread driving the exploration.
struct MachineState {
    size_t pc = 0;
    std::vector<SymValue> stack;

    // Word-granular memory keyed by concrete 32-byte-aligned byte offset.
    std::map<Word, SymValue> memory;
    bool havoc_memory = false;
    TaintSet memory_taint_union;  // taints of everything ever MSTOREd

    std::map<Word, SymValue> storage;
    bool havoc_storage = false;
    TaintSet storage_taint_union;

    std::vector<Constraint> constraints;
    std::vector<size_t> trace;  // executed instruction offsets
    std::vector<ExternalCallRecord> call_log;
    std::vector<StorageWriteRecord> storage_writes;
    std::map<size_t, uint32_t> jumpdest_visits;

    TerminalKind terminal = TerminalKind::Running;
    ErrorKind error = ErrorKind::None;
    CutKind cut = CutKind::None;

    CallEnv env;
    std::shared_ptr<SymbolPool> pool;

    // Control-dependence extension (engine option): taints of every symbolic
    // branch condition on this path, merged into computed values when the
    // mode is on.
    bool control_taint_enabled = false;
    TaintSet control_taints;

    // Per-path memoization so the same input reads back as the same symbol.
    std::map<Word, SymValue> calldata_words;
    std::map<std::string, SymValue> sha3_regions;
    std::optional<SymValue> callvalue_sym;
    std::optional<SymValue> caller_sym;
    std::optional<SymValue> self_sym;
    std::optional<SymValue> calldatasize_sym;
    std::optional<SymValue> last_call_return;

    bool is_terminal() const { return terminal != TerminalKind::Running; }
};

}  // namespace blockeye::sym
