// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/oracle/analyze.hpp>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace blockeye::oracle {

namespace {

using sym::CalleeClass;
using sym::MachineState;
using sym::OracleOriginId;

struct SinkScan {
    std::vector<DataFlowFinding> findings;
    std::vector<DataFlowFinding> info;
};

std::vector<size_t> witness_slice(const std::vector<size_t>& trace,
                                  size_t from_index, size_t to_index)
{
    return {trace.begin() + static_cast<ptrdiff_t>(from_index),
            trace.begin() + static_cast<ptrdiff_t>(to_index) + 1};
}

SinkScan scan_terminal(const MachineState& terminal)
{
    SinkScan out;
    if (terminal.cut == sym::CutKind::Infeasible)
        return out;  // proven unreachable; nothing real to report

    // Origin -> the oracle call that introduced it.
    std::map<OracleOriginId, const sym::ExternalCallRecord*> sources;
    for (const auto& rec : terminal.call_log) {
        if (rec.origin)
            sources.emplace(*rec.origin, &rec);
    }

    auto emit = [&](std::vector<DataFlowFinding>& list, OracleOriginId origin,
                    size_t sink_site, size_t sink_trace_index, SinkKind kind,
                    CalleeClass callee_class, bool via_delegate) {
        auto it = sources.find(origin);
        if (it == sources.end())
            return;  // origin from another exploration; ignore
        const auto* src = it->second;
        DataFlowFinding f;
        f.source_site = src->site;
        f.origin = origin;
        f.sink_site = sink_site;
        f.sink_kind = kind;
        f.witness_trace =
            witness_slice(terminal.trace, src->trace_index, sink_trace_index);
        f.callee_class_at_sink = callee_class;
        f.via_delegatecall = via_delegate;
        list.push_back(std::move(f));
    };

    for (const auto& w : terminal.storage_writes) {
        sym::TaintSet taints = w.slot->taint;
        taints.merge(w.value->taint);
        for (const auto origin : taints.ids())
            emit(out.findings, origin, w.site, w.trace_index,
                 SinkKind::StorageWrite, CalleeClass::Unknown, false);
    }

    for (const auto& rec : terminal.call_log) {
        const bool via_delegate = rec.kind == sym::CallKind::DelegateCall;
        for (const auto origin : rec.value->taint.ids())
            emit(out.findings, origin, rec.site, rec.trace_index,
                 SinkKind::ValueTransfer, rec.classified, via_delegate);

        if (!rec.args_tainted)
            continue;
        sym::TaintSet arg_taints;
        for (const auto& a : rec.args)
            arg_taints.merge(a->taint);
        auto& list = rec.classified == CalleeClass::Token ? out.findings
                                                          : out.info;
        for (const auto origin : arg_taints.ids())
            emit(list, origin, rec.site, rec.trace_index,
                 SinkKind::CallArgument, rec.classified, via_delegate);
    }

    auto by_site_origin = [](const DataFlowFinding& a, const DataFlowFinding& b) {
        return std::tie(a.sink_site, a.origin) < std::tie(b.sink_site, b.origin);
    };
    std::stable_sort(out.findings.begin(), out.findings.end(), by_site_origin);
    std::stable_sort(out.info.begin(), out.info.end(), by_site_origin);
    return out;
}

// Deduplicates on (source_site, sink_site, sink_kind), keeping the shortest
// witness, and imposes the report order.
std::vector<DataFlowFinding> dedupe(std::vector<DataFlowFinding> all)
{
    std::map<std::tuple<size_t, size_t, uint8_t>, DataFlowFinding> best;
    for (auto& f : all) {
        const auto key = std::make_tuple(f.source_site, f.sink_site,
                                         static_cast<uint8_t>(f.sink_kind));
        auto it = best.find(key);
        if (it == best.end())
            best.emplace(key, std::move(f));
        else if (f.witness_trace.size() < it->second.witness_trace.size())
            it->second = std::move(f);
    }
    std::vector<DataFlowFinding> out;
    out.reserve(best.size());
    for (auto& [key, f] : best)
        out.push_back(std::move(f));
    std::sort(out.begin(), out.end(),
              [](const DataFlowFinding& a, const DataFlowFinding& b) {
                  return std::tie(a.sink_site, a.source_site, a.sink_kind,
                                  a.origin) < std::tie(b.sink_site,
                                                       b.source_site,
                                                       b.sink_kind, b.origin);
              });
    return out;
}

std::optional<uint32_t> line_for(const SourceMap* map, size_t site)
{
    if (map == nullptr || map->empty())
        return std::nullopt;
    auto it = map->upper_bound(site);
    if (it == map->begin())
        return std::nullopt;
    return std::prev(it)->second;
}

nlohmann::ordered_json finding_to_json(const DataFlowFinding& f,
                                       const SourceMap* map)
{
    nlohmann::ordered_json j;
    j["source_site"] = f.source_site;
    j["sink_site"] = f.sink_site;
    j["sink_kind"] = std::string{name(f.sink_kind)};
    j["origin"] = f.origin;
    j["trace"] = f.witness_trace;
    if (const auto line = line_for(map, f.source_site))
        j["source_line"] = *line;
    if (const auto line = line_for(map, f.sink_site))
        j["sink_line"] = *line;
    if (f.via_delegatecall)
        j["note"] = "delegatecall";
    return j;
}

}  // namespace

std::string_view name(SinkKind k)
{
    switch (k) {
    case SinkKind::StorageWrite: return "storage_write";
    case SinkKind::ValueTransfer: return "value_transfer";
    case SinkKind::CallArgument: return "call_argument";
    }
    return "?";
}

std::string_view name(Verdict v)
{
    switch (v) {
    case Verdict::Vulnerable: return "vulnerable";
    case Verdict::NotFound: return "not_found";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<DataFlowFinding> detect_sinks(const sym::MachineState& terminal,
                                          const AddressBook& book)
{
    (void)book;  // classification happened during exploration
    return scan_terminal(terminal).findings;
}

OracleReport analyze(const Bytes& bytecode, const AddressBook& book,
                     const sym::ExploreConfig& config)
{
    book.validate();
    const evm::Program program = evm::disassemble(bytecode);
    const BookClassifier hooks{book};
    const sym::ExploreResult explored = sym::explore(program, config, hooks);

    std::vector<DataFlowFinding> findings;
    std::vector<DataFlowFinding> info;
    for (const auto& terminal : explored.terminals) {
        SinkScan scan = scan_terminal(terminal);
        std::move(scan.findings.begin(), scan.findings.end(),
                  std::back_inserter(findings));
        std::move(scan.info.begin(), scan.info.end(), std::back_inserter(info));
    }

    OracleReport report;
    report.program_id = program_id(bytecode);
    report.findings = dedupe(std::move(findings));
    report.info_findings = dedupe(std::move(info));
    report.stats.paths = explored.terminals.size();
    report.stats.cuts = explored.cut_count();
    if (!report.findings.empty())
        report.verdict = Verdict::Vulnerable;
    else if (report.stats.cuts > 0)
        report.verdict = Verdict::Inconclusive;
    else
        report.verdict = Verdict::NotFound;
    return report;
}

std::string render_report(const OracleReport& report, ReportFormat format,
                          const SourceMap* source_map)
{
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["program_id"] = report.program_id;
        j["verdict"] = std::string{name(report.verdict)};
        j["findings"] = nlohmann::ordered_json::array();
        for (const auto& f : report.findings)
            j["findings"].push_back(finding_to_json(f, source_map));
        j["info"] = nlohmann::ordered_json::array();
        for (const auto& f : report.info_findings)
            j["info"].push_back(finding_to_json(f, source_map));
        j["stats"] = {{"paths", report.stats.paths},
                      {"cuts", report.stats.cuts}};
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "program " << report.program_id << "\n"
       << "verdict " << name(report.verdict) << " (paths "
       << report.stats.paths << ", cuts " << report.stats.cuts << ")\n";
    auto site = [&](size_t offset) {
        std::string s = std::to_string(offset);
        if (const auto line = line_for(source_map, offset))
            s += " (line " + std::to_string(*line) + ")";
        return s;
    };
    auto print = [&](const DataFlowFinding& f, const char* label) {
        os << "  " << label << " " << name(f.sink_kind) << ": call@"
           << site(f.source_site) << " -> sink@" << site(f.sink_site)
           << " origin " << f.origin;
        if (f.via_delegatecall)
            os << " [delegatecall]";
        os << "\n    trace";
        for (const auto off : f.witness_trace)
            os << ' ' << off;
        os << "\n";
    };
    for (const auto& f : report.findings)
        print(f, "finding");
    for (const auto& f : report.info_findings)
        print(f, "info");
    return os.str();
}

SourceMap parse_source_map(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument{std::string{"source map: "} + e.what()};
    }
    if (!j.is_object())
        throw std::invalid_argument{"source map: expected an object"};
    SourceMap map;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_unsigned())
            throw std::invalid_argument{"source map: line for offset " + key +
                                        " must be an unsigned integer"};
        size_t pos = 0;
        const size_t offset = std::stoull(key, &pos);
        if (pos != key.size())
            throw std::invalid_argument{"source map: bad offset '" + key + "'"};
        map.emplace(offset, value.get<uint32_t>());
    }
    return map;
}

std::string program_id(const Bytes& bytecode)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytecode.data(), bytecode.size(), digest, &len, EVP_sha256(),
               nullptr);
    return hex_encode(digest, len);
}

}  // namespace blockeye::oracle
