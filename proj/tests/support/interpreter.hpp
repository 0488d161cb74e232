// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/evm/program.hpp>

#include <functional>
#include <map>
#include <vector>

namespace blockeye::testsupport {

/// Fully concrete machine inputs for one run.
struct ConcreteInput {
    Bytes calldata;
    Word callvalue;
    Word caller;
    Word self_address;
    /// Initial storage contents, total over all slots.
    std::function<Word(const Word& slot)> storage_init = [](const Word&) {
        return Word{0};
    };
    /// Return word of the i-th external call (wraps around when exhausted).
    std::vector<Word> call_returns{Word{1}};
};

struct ConcreteCallEvent {
    size_t site = 0;
    Word callee;
    Word value;
};

enum class ConcreteStatus : uint8_t {
    Stop,
    Return,
    Revert,
    StackUnderflow,
    StackOverflow,
    InvalidJump,
    OutOfSteps,
};

struct ConcreteResult {
    ConcreteStatus status = ConcreteStatus::Stop;
    std::map<Word, Word> storage;  // slots written or read
    std::vector<ConcreteCallEvent> calls;
    std::vector<size_t> trace;
    std::vector<Word> final_stack;  // top last
};

/// Reference interpreter for the supported opcode subset, written directly
/// from the instruction semantics (byte-addressed memory, 1024-deep stack).
/// External calls push the scripted return word and copy it to the return
/// area; SHA3 is not supported here (tests that need it stay symbolic).
ConcreteResult run_concrete(const evm::Program& program,
                            const ConcreteInput& input,
                            size_t max_steps = 1 << 20);

}  // namespace blockeye::testsupport
