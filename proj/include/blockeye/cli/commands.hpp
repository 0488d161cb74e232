// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/cli/config.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace blockeye::cli {

// Exit codes shared by all commands.
inline constexpr int kExitClean = 0;         // analyze: nothing found
inline constexpr int kExitError = 1;
inline constexpr int kExitVulnerable = 2;    // analyze: findings present
inline constexpr int kExitInconclusive = 3;  // analyze: bound cuts, no findings

struct AnalyzeArgs {
    std::string bytecode_path;
    std::string config_path;
    std::string out_path;         // empty = stdout
    std::string source_map_path;  // optional offset->line decoration
    bool text_format = false;
};

struct MonitorArgs {
    std::optional<std::string> fixtures_path;
    std::optional<std::string> rpc_url;
    std::string config_path;
    std::string out_path;  // empty = stdout
};

struct ReportArgs {
    std::string alerts_path;
    size_t top = 10;
    size_t latest = 5;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& err);
int cmd_monitor(const MonitorArgs& args, std::ostream& err);
int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err);
int cmd_disasm(const std::string& bytecode_path, std::ostream& out,
               std::ostream& err);
int cmd_fetch_code(const std::string& rpc_url, const std::string& address,
                   std::ostream& out, std::ostream& err);

/// Cooperative shutdown flag for rpc-mode monitoring; a signal handler sets
/// it and the poll loop flushes and exits cleanly.
void request_stop();

/// Re-arms the loop after a stop (tests run several monitors per process).
void reset_stop_request();

}  // namespace blockeye::cli
