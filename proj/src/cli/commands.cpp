// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/chain/file_source.hpp>
#include <blockeye/chain/rpc_source.hpp>
#include <blockeye/cli/commands.hpp>
#include <blockeye/evm/program.hpp>
#include <blockeye/oracle/analyze.hpp>
#include <blockeye/tx/codec.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace blockeye::cli {

namespace {

std::atomic<bool> g_stop{false};

std::string read_text_file(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw std::runtime_error{"cannot open " + path};
    return {std::istreambuf_iterator<char>{in},
            std::istreambuf_iterator<char>{}};
}

/// Writes to `path`, or stdout when path is empty.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_)
                throw std::runtime_error{"cannot write " + path};
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int verdict_exit_code(oracle::Verdict v)
{
    switch (v) {
    case oracle::Verdict::Vulnerable: return kExitVulnerable;
    case oracle::Verdict::Inconclusive: return kExitInconclusive;
    case oracle::Verdict::NotFound: break;
    }
    return kExitClean;
}

int run_monitor_loop(chain::StreamSource& source, const Config& cfg,
                     std::ostream& out,
                     std::optional<std::chrono::milliseconds> poll_interval)
{
    monitor::Monitor mon{cfg.monitor_config(), [&out](const monitor::Alert& a) {
                             out << monitor::alert_to_jsonl(a) << '\n';
                             out.flush();
                         }};
    while (!g_stop.load(std::memory_order_relaxed)) {
        const auto batch = source.next_batch();
        for (const auto& t : batch)
            mon.feed(t);
        if (source.exhausted())
            break;
        if (batch.empty()) {
            if (!poll_interval)
                break;  // finite source drained
            std::this_thread::sleep_for(*poll_interval);
        }
    }
    mon.finish();
    return kExitClean;
}

}  // namespace

void request_stop()
{
    g_stop.store(true, std::memory_order_relaxed);
}

void reset_stop_request()
{
    g_stop.store(false, std::memory_order_relaxed);
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& err)
{
    try {
        const Config cfg = load_config(args.config_path);
        const Bytes bytecode = hex_decode(read_text_file(args.bytecode_path));
        const oracle::OracleReport report =
            oracle::analyze(bytecode, cfg.address_book(), cfg.explore_config());

        oracle::SourceMap source_map;
        const bool mapped = !args.source_map_path.empty();
        if (mapped)
            source_map = oracle::parse_source_map(
                read_text_file(args.source_map_path));

        OutputTarget out{args.out_path};
        out.stream() << oracle::render_report(
            report,
            args.text_format ? oracle::ReportFormat::Text
                             : oracle::ReportFormat::Json,
            mapped ? &source_map : nullptr);
        out.stream().flush();
        return verdict_exit_code(report.verdict);
    } catch (const std::exception& e) {
        err << "analyze: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_monitor(const MonitorArgs& args, std::ostream& err)
{
    try {
        const Config cfg = load_config(args.config_path);
        OutputTarget out{args.out_path};

        if (args.fixtures_path) {
            chain::FileSource source{*args.fixtures_path};
            return run_monitor_loop(source, cfg, out.stream(), std::nullopt);
        }
        if (args.rpc_url) {
            chain::RpcConfig rc;
            rc.endpoint = *args.rpc_url;
            rc.confirmation_depth = cfg.confirmation_depth;
            chain::RpcSource source{rc};
            return run_monitor_loop(source, cfg, out.stream(),
                                    rc.poll_interval);
        }
        err << "monitor: either --fixtures or --rpc is required\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "monitor: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err)
{
    try {
        std::vector<monitor::AlertRecord> alerts;
        std::istringstream in{tx::read_fixture_file(args.alerts_path)};
        for (std::string line; std::getline(in, line);) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            alerts.push_back(monitor::parse_alert(line));
        }

        out << "latest alerts (" << std::min(args.latest, alerts.size())
            << " of " << alerts.size() << ")\n";
        const size_t shown = std::min(args.latest, alerts.size());
        for (size_t i = 0; i < shown; ++i) {
            // Newest first; input is ordered by target position.
            const auto& a = alerts[alerts.size() - 1 - i];
            out << "  " << a.rule << " sender " << a.sender.to_string()
                << " blocks [" << a.block_window.first << ","
                << a.block_window.second << "] profit " << a.profit_wei.str()
                << " wei (threshold " << a.threshold_wei.str() << ") txs "
                << a.txs.size() << '\n';
        }

        // Attacker ranking: alert count per sender, ties by address.
        std::map<Address, size_t> counts;
        for (const auto& a : alerts)
            ++counts[a.sender];
        std::vector<std::pair<Address, size_t>> ranked{counts.begin(),
                                                       counts.end()};
        std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
            if (x.second != y.second)
                return x.second > y.second;
            return x.first < y.first;
        });
        if (ranked.size() > args.top)
            ranked.resize(args.top);

        out << "top attackers (" << ranked.size() << ")\n";
        for (const auto& [addr, count] : ranked)
            out << "  " << addr.to_string() << "  " << count << '\n';
        return kExitClean;
    } catch (const std::exception& e) {
        err << "report: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_disasm(const std::string& bytecode_path, std::ostream& out,
               std::ostream& err)
{
    Bytes bytecode;
    try {
        bytecode = hex_decode(read_text_file(bytecode_path));
    } catch (const std::exception& e) {
        err << "disasm: " << e.what() << '\n';
        return kExitError;
    }

    // Print the valid prefix even when decoding fails mid-stream.
    size_t offset = 0;
    while (offset < bytecode.size()) {
        evm::Instruction ins;
        try {
            ins = evm::decode_instruction(bytecode, offset);
        } catch (const evm::UnknownOpcodeError& e) {
            err << "disasm: " << e.what() << '\n';
            return kExitError;
        }
        out << ins.offset << '\t' << ins.opcode.mnemonic;
        if (ins.immediate)
            out << " 0x" << word_to_hex(*ins.immediate);
        out << '\n';
        offset = ins.next_offset();
    }
    return kExitClean;
}

int cmd_fetch_code(const std::string& rpc_url, const std::string& address,
                   std::ostream& out, std::ostream& err)
{
    try {
        chain::RpcConfig rc;
        rc.endpoint = rpc_url;
        // one-shot command: fail fast instead of the monitor's endless retry
        rc.max_retries = 3;
        rc.backoff_initial = std::chrono::milliseconds{200};
        rc.backoff_cap = std::chrono::milliseconds{1000};
        chain::RpcSource source{rc};
        out << source.fetch_code(address) << '\n';
        return kExitClean;
    } catch (const std::exception& e) {
        err << "fetch-code: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace blockeye::cli
