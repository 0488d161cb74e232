// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/chain/file_source.hpp>
#include <blockeye/tx/codec.hpp>

#include <algorithm>

namespace blockeye::chain {

FileSource::FileSource(const std::string& path, size_t batch_size,
                       std::optional<Cursor> resume_after)
    : batch_size_{batch_size == 0 ? 1 : batch_size}, cursor_{resume_after}
{
    txs_ = tx::parse_dataset(tx::read_fixture_file(path));
    if (resume_after) {
        position_ = static_cast<size_t>(
            std::distance(txs_.begin(),
                          std::upper_bound(txs_.begin(), txs_.end(),
                                           *resume_after,
                                           [](const Cursor& c,
                                              const tx::Transaction& t) {
                                               return c < t.position();
                                           })));
    }
}

std::vector<tx::Transaction> FileSource::next_batch()
{
    std::vector<tx::Transaction> batch;
    const size_t end = std::min(position_ + batch_size_, txs_.size());
    batch.reserve(end - position_);
    for (; position_ < end; ++position_)
        batch.push_back(txs_[position_]);
    if (!batch.empty())
        cursor_ = batch.back().position();
    return batch;
}

}  // namespace blockeye::chain
