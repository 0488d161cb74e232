// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/cli/commands.hpp>

#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <iostream>

namespace {

void handle_signal(int)
{
    blockeye::cli::request_stop();
}

std::string default_config()
{
    const char* env = std::getenv("BLOCKEYE_CONFIG");
    return env ? env : "";
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace blockeye::cli;

    CLI::App app{"Two-phase oracle-manipulation detector: static analysis of "
                 "deployed bytecode plus transaction-stream monitoring"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "Scan bytecode for oracle-dependent state updates");
    analyze->add_option("--bytecode", analyze_args.bytecode_path,
                        "Hex bytecode file (0x prefix optional)")
        ->required();
    analyze->add_option("--config", analyze_args.config_path,
                        "Config file (or $BLOCKEYE_CONFIG)");
    analyze->add_option("--out", analyze_args.out_path,
                        "Report path (default stdout)");
    analyze->add_option("--source-map", analyze_args.source_map_path,
                        "Offset-to-line JSON sidecar to decorate findings");
    analyze->add_flag("--text", analyze_args.text_format,
                      "Human-readable report instead of JSON");

    MonitorArgs monitor_args;
    std::string fixtures, rpc;
    auto* monitor = app.add_subcommand(
        "monitor", "Stream transactions and emit heuristic alerts (JSONL)");
    auto* fixtures_opt =
        monitor->add_option("--fixtures", fixtures, "JSONL fixture file (.gz ok)");
    auto* rpc_opt = monitor->add_option("--rpc", rpc, "JSON-RPC endpoint URL");
    fixtures_opt->excludes(rpc_opt);
    monitor->add_option("--config", monitor_args.config_path,
                        "Config file (or $BLOCKEYE_CONFIG)");
    monitor->add_option("--out", monitor_args.out_path,
                        "Alert output path (default stdout)");

    ReportArgs report_args;
    auto* report = app.add_subcommand(
        "report", "Summarize an alert file: latest alerts and top attackers");
    report->add_option("--alerts", report_args.alerts_path, "Alert JSONL file")
        ->required();
    report->add_option("--top", report_args.top, "Attacker rows to show");
    report->add_option("--latest", report_args.latest, "Latest alerts to show");

    std::string disasm_path;
    auto* disasm = app.add_subcommand("disasm", "Disassemble a bytecode file");
    disasm->add_option("path", disasm_path, "Hex bytecode file")->required();

    std::string fetch_rpc, fetch_address;
    auto* fetch = app.add_subcommand(
        "fetch-code", "Fetch deployed bytecode over JSON-RPC (eth_getCode)");
    fetch->add_option("--rpc", fetch_rpc, "JSON-RPC endpoint URL")->required();
    fetch->add_option("address", fetch_address, "Contract address")->required();

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        if (analyze_args.config_path.empty())
            analyze_args.config_path = default_config();
        if (analyze_args.config_path.empty()) {
            std::cerr << "analyze: --config or BLOCKEYE_CONFIG required\n";
            return kExitError;
        }
        return cmd_analyze(analyze_args, std::cerr);
    }
    if (monitor->parsed()) {
        if (!fixtures.empty())
            monitor_args.fixtures_path = fixtures;
        if (!rpc.empty())
            monitor_args.rpc_url = rpc;
        if (monitor_args.config_path.empty())
            monitor_args.config_path = default_config();
        if (monitor_args.config_path.empty()) {
            std::cerr << "monitor: --config or BLOCKEYE_CONFIG required\n";
            return kExitError;
        }
        std::signal(SIGINT, handle_signal);
        std::signal(SIGTERM, handle_signal);
        return cmd_monitor(monitor_args, std::cerr);
    }
    if (report->parsed())
        return cmd_report(report_args, std::cout, std::cerr);
    if (disasm->parsed())
        return cmd_disasm(disasm_path, std::cout, std::cerr);
    if (fetch->parsed())
        return cmd_fetch_code(fetch_rpc, fetch_address, std::cout, std::cerr);
    return kExitError;
}
