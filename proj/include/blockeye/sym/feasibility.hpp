// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/sym/state.hpp>

#include <memory>
#include <vector>

namespace blockeye::sym {

enum class Feasibility : uint8_t { Feasible, Infeasible, Unknown };

std::string_view name(Feasibility f);

/// Decides whether a constraint set can be satisfied. Implementations must be
/// conservative: Infeasible only when provably contradictory. An SMT solver
/// can be attached by implementing this interface.
class FeasibilityBackend {
public:
    virtual ~FeasibilityBackend() = default;
    virtual Feasibility check(const std::vector<Constraint>& constraints) const = 0;
};

/// Built-in evaluator: constant truth checks, structural contradiction
/// (the same expression asserted both ways), and interval narrowing for
/// EQ/LT/GT/direct constraints over single symbols. Returns Unknown when a
/// constraint falls outside those patterns and no contradiction was found.
class IntervalBackend final : public FeasibilityBackend {
public:
    Feasibility check(const std::vector<Constraint>& constraints) const override;
};

/// Trusts everything (exploration without pruning).
class AcceptAllBackend final : public FeasibilityBackend {
public:
    Feasibility check(const std::vector<Constraint>&) const override
    {
        return Feasibility::Unknown;
    }
};

enum class FeasibilityChoice : uint8_t { Interval, AcceptAll };

std::unique_ptr<FeasibilityBackend> make_backend(FeasibilityChoice choice);

/// Convenience entry point over the built-in evaluator.
Feasibility feasible(const std::vector<Constraint>& constraints);

}  // namespace blockeye::sym
