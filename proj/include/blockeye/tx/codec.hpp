// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/tx/transaction.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace blockeye::tx {

/// Parses one JSONL fixture record into a fully validated Transaction.
/// Unknown fields are ignored; the first invariant violation raises
/// SchemaError naming the field.
Transaction parse_fixture(std::string_view line);

/// Inverse of parse_fixture; emits one canonical JSON line (no newline).
std::string serialize(const Transaction& tx);

/// Splits a JSONL document into transactions, enforcing strictly increasing
/// (block_number, tx_index). Duplicates raise DatasetError; order violations
/// raise OutOfOrderInputError. Blank lines are skipped.
std::vector<Transaction> parse_dataset(std::string_view text);

/// Reads a fixture file, transparently gunzipping when the gzip magic bytes
/// lead the file. Throws std::runtime_error on IO or decompression failure.
std::string read_fixture_file(const std::string& path);

}  // namespace blockeye::tx
