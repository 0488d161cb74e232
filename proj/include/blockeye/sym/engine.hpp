// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/evm/program.hpp>
#include <blockeye/sym/feasibility.hpp>
#include <blockeye/sym/state.hpp>

#include <vector>

namespace blockeye::sym {

/// Exploration bounds. All bounds must be >= 1.
struct ExploreConfig {
    size_t max_depth = 4096;   // instructions per path
    size_t max_paths = 256;    // terminal-state cap
    uint32_t loop_bound = 2;   // max visits per JUMPDEST per path
    FeasibilityChoice feasibility = FeasibilityChoice::Interval;
    // Extension point, off by default: values computed under a branch whose
    // condition is tainted inherit that taint. Floods findings on real code;
    // data-flow-only tracking is the supported mode.
    bool control_taint = false;
};

struct ExploreResult {
    std::vector<MachineState> terminals;
    // Work abandoned because max_paths was reached; counts toward
    // incompleteness alongside depth/loop cuts.
    size_t frontier_abandoned = 0;

    /// Incompleteness cuts: depth/loop-bound terminals plus abandoned
    /// frontier. Feasibility prunes are sound eliminations and not counted.
    size_t cut_count() const;
};

/// Fresh state at pc 0 with empty stack, memory and storage. Environment
/// fields left unset materialize as fresh symbols on first access.
MachineState init_state(const evm::Program& program, CallEnv env = {});

/// Executes the single instruction at state.pc and returns the successor
/// states: one for straight-line code, two for a JUMPI on a symbolic
/// condition (false branch first, then true branch, with complementary
/// constraints). Execution faults (stack underflow, symbolic jump target,
/// invalid jump destination) yield a diagnostic terminal state, never a
/// crash. A pc past the end of code behaves as STOP.
std::vector<MachineState> step(const MachineState& state,
                               const evm::Program& program,
                               const CalleeClassifier& hooks);

/// Depth-first bounded exploration. Paths are cut (with a labeled BoundCut
/// terminal) when max_depth is exceeded, a JUMPDEST passes loop_bound visits,
/// or the feasibility backend proves the constraints contradictory. The
/// false branch of each fork is explored first; the result is a pure
/// function of (program, config, hooks, env).
ExploreResult explore(const evm::Program& program, const ExploreConfig& config,
                      const CalleeClassifier& hooks, CallEnv env = {});

/// Classifies every callee as Unknown; for programs analyzed without an
/// address book.
class NullClassifier final : public CalleeClassifier {
public:
    CalleeClass classify(const SymValue&) const override
    {
        return CalleeClass::Unknown;
    }
};

}  // namespace blockeye::sym
