// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/chain/source.hpp>

#include <string>

namespace blockeye::chain {

/// JSONL fixture reader (gzip detected by magic bytes). Validates ordering
/// and uniqueness up front; resuming from a saved cursor yields exactly the
/// undelivered suffix.
class FileSource final : public StreamSource {
public:
    explicit FileSource(const std::string& path, size_t batch_size = 256,
                        std::optional<Cursor> resume_after = {});

    std::vector<tx::Transaction> next_batch() override;
    bool exhausted() const override { return position_ >= txs_.size(); }
    std::optional<Cursor> cursor() const override { return cursor_; }

private:
    std::vector<tx::Transaction> txs_;
    size_t position_ = 0;
    size_t batch_size_;
    std::optional<Cursor> cursor_;
};

}  // namespace blockeye::chain
