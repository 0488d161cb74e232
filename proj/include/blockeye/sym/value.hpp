// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/core/word.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blockeye::sym {

/// Identifies one oracle call whose return value is being tracked. Assigned
/// densely (1, 2, ...) in exploration order.
using OracleOriginId = uint32_t;

/// Sorted, duplicate-free set of oracle origins.
class TaintSet {
public:
    TaintSet() = default;
    explicit TaintSet(std::vector<OracleOriginId> ids);

    bool empty() const { return ids_.empty(); }
    bool contains(OracleOriginId id) const;
    const std::vector<OracleOriginId>& ids() const { return ids_; }

    void add(OracleOriginId id);
    void merge(const TaintSet& other);

    bool operator==(const TaintSet&) const = default;

private:
    std::vector<OracleOriginId> ids_;
};

enum class SymOp : uint8_t {
    Add,
    Mul,
    Sub,
    Div,
    Mod,
    Exp,
    Lt,
    Gt,
    Eq,
    IsZero,
    And,
    Or,
    Xor,
    Not,
    Shl,
    Shr,
};

unsigned arity(SymOp op);
std::string_view name(SymOp op);

/// Where a symbol came from. Lets tests and diagnostics map symbols back to
/// concrete machine inputs (calldata word, call return, initial storage, ...).
enum class OriginKind : uint8_t {
    External,        // injected by tests / API users
    Calldata,        // aux = byte offset of the loaded word
    Calldatasize,
    Callvalue,
    Caller,
    SelfAddress,
    Balance,         // aux = occurrence index
    CallReturn,      // aux = call sequence index within the path
    ReturndataSize,  // aux = occurrence index
    ReturndataWord,  // aux = occurrence index
    Sha3,            // aux = occurrence index; region captures inputs
    StorageInit,     // aux = storage slot
    MemHavoc,        // aux = occurrence index
    StorageHavoc,    // aux = occurrence index
};

std::string_view name(OriginKind kind);

struct SymNode;
using SymValue = std::shared_ptr<const SymNode>;

struct SymbolInfo {
    uint32_t id = 0;  // unique within one exploration
    OriginKind origin = OriginKind::External;
    Word aux = 0;
    // For Sha3 symbols: the memory words hashed, so a concrete replay can
    // recompute the digest from operand values.
    std::vector<SymValue> region;
};

struct SymNode {
    enum class Kind : uint8_t { Concrete, Symbol, Expr };

    Kind kind = Kind::Concrete;
    Word value;            // Concrete
    SymbolInfo symbol;     // Symbol
    SymOp op = SymOp::Add; // Expr
    std::vector<SymValue> operands;
    TaintSet taint;

    bool is_concrete() const { return kind == Kind::Concrete; }
    bool is_symbol() const { return kind == Kind::Symbol; }
    bool is_expr() const { return kind == Kind::Expr; }
};

SymValue make_concrete(Word value, TaintSet taint = {});

/// Allocates fresh symbol/origin ids for one exploration. Single-threaded by
/// contract (one exploration = one owner); distinct explorations never share
/// a pool, which keeps explore() deterministic and thread-safe across runs.
class SymbolPool {
public:
    SymValue fresh_symbol(OriginKind origin, Word aux = 0, TaintSet taint = {},
                          std::vector<SymValue> region = {});
    OracleOriginId fresh_origin() { return ++next_origin_; }

    uint32_t symbols_allocated() const { return next_symbol_; }

private:
    uint32_t next_symbol_ = 0;
    OracleOriginId next_origin_ = 0;
};

/// Builds Expr(op, operands), constant-folding when all operands are
/// concrete. Taint of the result is the union of operand taints either way.
SymValue make_expr(SymOp op, std::vector<SymValue> operands);

/// EVM semantics for the folded operators (DIV/MOD by zero yield zero,
/// shifts >= 256 yield zero, EXP is mod 2^256).
Word apply_op(SymOp op, const std::vector<Word>& args);

/// Structural equality (same constant, same symbol id, or same operator over
/// structurally equal operands).
bool structurally_equal(const SymValue& a, const SymValue& b);

/// Stable textual rendering, usable as a structural key.
std::string render(const SymValue& v);

}  // namespace blockeye::sym
