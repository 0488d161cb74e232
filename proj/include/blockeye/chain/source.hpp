// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/tx/transaction.hpp>

#include <optional>
#include <vector>

namespace blockeye::chain {

using Cursor = std::pair<uint64_t, uint32_t>;  // (block, index) delivered

/// A resumable, ordered transaction feed. Implementations deliver each
/// (block, index) at most once, strictly after the cursor. One source is
/// owned by one consumer.
class StreamSource {
public:
    virtual ~StreamSource() = default;

    /// Next batch of transactions strictly after the cursor, ordered.
    /// An empty batch means end-of-input for file sources and "nothing new
    /// yet" for polling sources.
    virtual std::vector<tx::Transaction> next_batch() = 0;

    /// True once the source can never produce more data.
    virtual bool exhausted() const = 0;

    virtual std::optional<Cursor> cursor() const = 0;
};

}  // namespace blockeye::chain
