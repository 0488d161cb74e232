// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/sym/value.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace blockeye::sym {

TaintSet::TaintSet(std::vector<OracleOriginId> ids) : ids_{std::move(ids)}
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool TaintSet::contains(OracleOriginId id) const
{
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

void TaintSet::add(OracleOriginId id)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        ids_.insert(it, id);
}

void TaintSet::merge(const TaintSet& other)
{
    if (other.ids_.empty())
        return;
    std::vector<OracleOriginId> merged;
    merged.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(merged));
    ids_ = std::move(merged);
}

unsigned arity(SymOp op)
{
    switch (op) {
    case SymOp::IsZero:
    case SymOp::Not:
        return 1;
    default:
        return 2;
    }
}

std::string_view name(SymOp op)
{
    switch (op) {
    case SymOp::Add: return "add";
    case SymOp::Mul: return "mul";
    case SymOp::Sub: return "sub";
    case SymOp::Div: return "div";
    case SymOp::Mod: return "mod";
    case SymOp::Exp: return "exp";
    case SymOp::Lt: return "lt";
    case SymOp::Gt: return "gt";
    case SymOp::Eq: return "eq";
    case SymOp::IsZero: return "iszero";
    case SymOp::And: return "and";
    case SymOp::Or: return "or";
    case SymOp::Xor: return "xor";
    case SymOp::Not: return "not";
    case SymOp::Shl: return "shl";
    case SymOp::Shr: return "shr";
    }
    return "?";
}

std::string_view name(OriginKind kind)
{
    switch (kind) {
    case OriginKind::External: return "ext";
    case OriginKind::Calldata: return "calldata";
    case OriginKind::Calldatasize: return "calldatasize";
    case OriginKind::Callvalue: return "callvalue";
    case OriginKind::Caller: return "caller";
    case OriginKind::SelfAddress: return "self";
    case OriginKind::Balance: return "balance";
    case OriginKind::CallReturn: return "callret";
    case OriginKind::ReturndataSize: return "retsize";
    case OriginKind::ReturndataWord: return "retword";
    case OriginKind::Sha3: return "sha3";
    case OriginKind::StorageInit: return "storage";
    case OriginKind::MemHavoc: return "memhavoc";
    case OriginKind::StorageHavoc: return "sthavoc";
    }
    return "?";
}

SymValue make_concrete(Word value, TaintSet taint)
{
    auto node = std::make_shared<SymNode>();
    node->kind = SymNode::Kind::Concrete;
    node->value = std::move(value);
    node->taint = std::move(taint);
    return node;
}

SymValue SymbolPool::fresh_symbol(OriginKind origin, Word aux, TaintSet taint,
                                  std::vector<SymValue> region)
{
    auto node = std::make_shared<SymNode>();
    node->kind = SymNode::Kind::Symbol;
    node->symbol.id = ++next_symbol_;
    node->symbol.origin = origin;
    node->symbol.aux = std::move(aux);
    node->symbol.region = std::move(region);
    node->taint = std::move(taint);
    return node;
}

Word apply_op(SymOp op, const std::vector<Word>& args)
{
    assert(args.size() == arity(op));
    const Word& a = args[0];
    switch (op) {
    case SymOp::Add: return a + args[1];
    case SymOp::Mul: return a * args[1];
    case SymOp::Sub: return a - args[1];
    case SymOp::Div: return args[1] == 0 ? Word{0} : a / args[1];
    case SymOp::Mod: return args[1] == 0 ? Word{0} : a % args[1];
    case SymOp::Exp: {
        Word base = a;
        Word exponent = args[1];
        Word result = 1;
        while (exponent != 0) {
            if ((exponent & 1) != 0)
                result *= base;
            base *= base;
            exponent >>= 1;
        }
        return result;
    }
    case SymOp::Lt: return a < args[1] ? 1 : 0;
    case SymOp::Gt: return a > args[1] ? 1 : 0;
    case SymOp::Eq: return a == args[1] ? 1 : 0;
    case SymOp::IsZero: return a == 0 ? 1 : 0;
    case SymOp::And: return a & args[1];
    case SymOp::Or: return a | args[1];
    case SymOp::Xor: return a ^ args[1];
    case SymOp::Not: return ~a;
    case SymOp::Shl: return args[0] >= 256 ? Word{0} : args[1] << static_cast<unsigned>(args[0]);
    case SymOp::Shr: return args[0] >= 256 ? Word{0} : args[1] >> static_cast<unsigned>(args[0]);
    }
    throw std::logic_error{"unreachable operator"};
}

SymValue make_expr(SymOp op, std::vector<SymValue> operands)
{
    if (operands.size() != arity(op))
        throw std::invalid_argument{"operand count does not match arity"};

    TaintSet taint;
    bool all_concrete = true;
    for (const auto& v : operands) {
        taint.merge(v->taint);
        all_concrete = all_concrete && v->is_concrete();
    }
    if (all_concrete) {
        std::vector<Word> args;
        args.reserve(operands.size());
        for (const auto& v : operands)
            args.push_back(v->value);
        return make_concrete(apply_op(op, args), std::move(taint));
    }

    auto node = std::make_shared<SymNode>();
    node->kind = SymNode::Kind::Expr;
    node->op = op;
    node->operands = std::move(operands);
    node->taint = std::move(taint);
    return node;
}

bool structurally_equal(const SymValue& a, const SymValue& b)
{
    if (a.get() == b.get())
        return true;
    if (a->kind != b->kind)
        return false;
    switch (a->kind) {
    case SymNode::Kind::Concrete:
        return a->value == b->value;
    case SymNode::Kind::Symbol:
        return a->symbol.id == b->symbol.id;
    case SymNode::Kind::Expr:
        if (a->op != b->op || a->operands.size() != b->operands.size())
            return false;
        for (size_t i = 0; i < a->operands.size(); ++i) {
            if (!structurally_equal(a->operands[i], b->operands[i]))
                return false;
        }
        return true;
    }
    return false;
}

std::string render(const SymValue& v)
{
    switch (v->kind) {
    case SymNode::Kind::Concrete:
        return "0x" + word_to_hex(v->value);
    case SymNode::Kind::Symbol: {
        std::ostringstream os;
        os << name(v->symbol.origin) << '#' << v->symbol.id;
        return os.str();
    }
    case SymNode::Kind::Expr: {
        std::string out{"("};
        out += name(v->op);
        for (const auto& operand : v->operands) {
            out += ' ';
            out += render(operand);
        }
        out += ')';
        return out;
    }
    }
    return "?";
}

}  // namespace blockeye::sym
