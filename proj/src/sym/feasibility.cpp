// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/sym/feasibility.hpp>

#include <map>
#include <set>
#include <string>

namespace blockeye::sym {

std::string_view name(Feasibility f)
{
    switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Unknown: return "unknown";
    }
    return "?";
}

namespace {

constexpr Word max_word()
{
    return ~Word{0};
}

struct Domain {
    Word lo = 0;
    Word hi = max_word();
    std::set<Word> excluded;

    bool empty() const
    {
        if (lo > hi)
            return true;
        // Only the cheap singleton case; wider exclusion counting would not
        // stay sound without care.
        return lo == hi && excluded.contains(lo);
    }
};

// Strips ISZERO wrappers, flipping the asserted truth each time.
Constraint normalize(Constraint c)
{
    while (c.value->is_expr() && c.value->op == SymOp::IsZero) {
        c = Constraint{c.value->operands[0], !c.asserted_true};
    }
    return c;
}

struct Analysis {
    std::map<uint32_t, Domain> domains;
    std::map<std::string, bool> asserted;  // structural key -> truth
    bool complete = true;  // every constraint understood
    bool contradiction = false;

    void fail() { contradiction = true; }

    void restrict_range(uint32_t sym, const Word& lo, const Word& hi)
    {
        auto& d = domains[sym];
        if (lo > d.lo)
            d.lo = lo;
        if (hi < d.hi)
            d.hi = hi;
        if (d.empty())
            fail();
    }

    void exclude(uint32_t sym, const Word& v)
    {
        auto& d = domains[sym];
        d.excluded.insert(v);
        if (d.empty())
            fail();
    }

    void note_structural(const SymValue& v, bool truth)
    {
        const std::string key = render(v);
        auto [it, inserted] = asserted.emplace(key, truth);
        if (!inserted && it->second != truth)
            fail();
    }

    // EQ / LT / GT between one symbol and one concrete word.
    void apply_comparison(SymOp op, const SymValue& a, const SymValue& b,
                          bool truth)
    {
        const bool a_sym = a->is_symbol();
        const bool b_sym = b->is_symbol();
        if (a_sym == b_sym || (!a->is_concrete() && !b->is_concrete())) {
            complete = false;
            return;
        }
        const uint32_t sym = a_sym ? a->symbol.id : b->symbol.id;
        const Word& c = a_sym ? b->value : a->value;
        // Rewrite so the symbol is on the left: c OP s flips LT<->GT.
        SymOp effective = op;
        if (!a_sym) {
            if (op == SymOp::Lt)
                effective = SymOp::Gt;
            else if (op == SymOp::Gt)
                effective = SymOp::Lt;
        }
        switch (effective) {
        case SymOp::Eq:
            if (truth)
                restrict_range(sym, c, c);
            else
                exclude(sym, c);
            break;
        case SymOp::Lt:  // s < c
            if (truth) {
                if (c == 0)
                    fail();
                else
                    restrict_range(sym, 0, c - 1);
            } else {
                restrict_range(sym, c, max_word());
            }
            break;
        case SymOp::Gt:  // s > c
            if (truth) {
                if (c == max_word())
                    fail();
                else
                    restrict_range(sym, c + 1, max_word());
            } else {
                restrict_range(sym, 0, c);
            }
            break;
        default:
            complete = false;
        }
    }

    void apply(const Constraint& raw)
    {
        const Constraint c = normalize(raw);
        const SymValue& v = c.value;

        if (v->is_concrete()) {
            if ((v->value != 0) != c.asserted_true)
                fail();
            return;
        }

        note_structural(v, c.asserted_true);
        if (contradiction)
            return;

        if (v->is_symbol()) {
            if (c.asserted_true)
                exclude(v->symbol.id, 0);
            else
                restrict_range(v->symbol.id, 0, 0);
            return;
        }

        switch (v->op) {
        case SymOp::Eq:
        case SymOp::Lt:
        case SymOp::Gt:
            apply_comparison(v->op, v->operands[0], v->operands[1],
                             c.asserted_true);
            break;
        default:
            complete = false;
        }
    }
};

}  // namespace

Feasibility IntervalBackend::check(const std::vector<Constraint>& constraints) const
{
    Analysis analysis;
    for (const auto& c : constraints) {
        analysis.apply(c);
        if (analysis.contradiction)
            return Feasibility::Infeasible;
    }
    return analysis.complete ? Feasibility::Feasible : Feasibility::Unknown;
}

std::unique_ptr<FeasibilityBackend> make_backend(FeasibilityChoice choice)
{
    switch (choice) {
    case FeasibilityChoice::AcceptAll:
        return std::make_unique<AcceptAllBackend>();
    case FeasibilityChoice::Interval:
        break;
    }
    return std::make_unique<IntervalBackend>();
}

Feasibility feasible(const std::vector<Constraint>& constraints)
{
    return IntervalBackend{}.check(constraints);
}

}  // namespace blockeye::sym
