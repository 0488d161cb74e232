// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/oracle/address_book.hpp>
#include <blockeye/sym/engine.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace blockeye::oracle {

enum class SinkKind : uint8_t { StorageWrite, ValueTransfer, CallArgument };

std::string_view name(SinkKind k);

/// One oracle-to-sink dependency edge.
struct DataFlowFinding {
    size_t source_site = 0;  // offset of the oracle call
    sym::OracleOriginId origin = 0;
    size_t sink_site = 0;
    SinkKind sink_kind = SinkKind::StorageWrite;
    std::vector<size_t> witness_trace;  // source..sink slice of one path
    sym::CalleeClass callee_class_at_sink = sym::CalleeClass::Unknown;
    bool via_delegatecall = false;
};

enum class Verdict : uint8_t { Vulnerable, NotFound, Inconclusive };

std::string_view name(Verdict v);

struct ReportStats {
    size_t paths = 0;
    size_t cuts = 0;
};

struct OracleReport {
    std::string program_id;  // content hash of the bytecode, hex
    std::vector<DataFlowFinding> findings;
    // Tainted calldata to unclassified callees: surfaced but not
    // verdict-driving.
    std::vector<DataFlowFinding> info_findings;
    Verdict verdict = Verdict::NotFound;
    ReportStats stats;
};

/// Scans one explored terminal for oracle-dependent state updates: a tainted
/// SSTORE (slot or value), a CALL moving a tainted native amount, or a call
/// into a token contract whose calldata words carry taint. One finding per
/// (origin, sink occurrence), ordered by (sink_site, origin). Feasibility-
/// pruned terminals yield nothing.
std::vector<DataFlowFinding> detect_sinks(const sym::MachineState& terminal,
                                          const AddressBook& book);

/// Phase-1 entry point: disassemble, explore, collect + deduplicate
/// findings, set the verdict. Throws evm::UnknownOpcodeError when the
/// bytecode does not decode.
OracleReport analyze(const Bytes& bytecode, const AddressBook& book,
                     const sym::ExploreConfig& config);

enum class ReportFormat : uint8_t { Json, Text };

/// Optional sidecar decoration: bytecode offset -> source line. Lookups
/// take the nearest mapped offset at or before a site.
using SourceMap = std::map<size_t, uint32_t>;

/// Deterministic serialization; identical reports render byte-identically.
/// With a source map, findings additionally carry source_line/sink_line.
std::string render_report(const OracleReport& report, ReportFormat format,
                          const SourceMap* source_map = nullptr);

/// Parses a source-map JSON object {"<offset>": line, ...}.
SourceMap parse_source_map(std::string_view text);

/// SHA-256 of the raw bytecode, lower-case hex.
std::string program_id(const Bytes& bytecode);

}  // namespace blockeye::oracle
