// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include "support/fixtures.hpp"
#include "support/mock_node.hpp"

#include <blockeye/cli/commands.hpp>
#include <blockeye/evm/assembler.hpp>
#include <blockeye/monitor/monitor.hpp>
#include <blockeye/tx/codec.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>
#include <zlib.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

using namespace blockeye;
using namespace blockeye::cli;
using namespace blockeye::testsupport;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    REQUIRE(in);
    return {std::istreambuf_iterator<char>{in},
            std::istreambuf_iterator<char>{}};
}

struct CliSandbox {
    std::string dir = make_temp_dir("cli");

    std::string path(const std::string& name) const { return dir + "/" + name; }

    std::string write(const std::string& name, const std::string& content) const
    {
        const std::string p = path(name);
        write_file(p, content);
        return p;
    }

    std::string write_config(const std::string& threshold = "10",
                             uint32_t min_burst = 6,
                             uint64_t window = 0) const
    {
        return write("config.json",
                     fixture_config_json(threshold, min_burst, window));
    }

    std::string write_bytecode(const std::string& asm_text) const
    {
        return write("code.hex", hex_encode(evm::assemble(asm_text)));
    }
};

}  // namespace

TEST_CASE("load_config: defaults and overrides")
{
    CliSandbox box;
    const Config cfg = load_config(box.write_config("123", 4, 2));
    CHECK(cfg.threshold_wei == 123);
    CHECK(cfg.min_burst == 4);
    CHECK(cfg.window_blocks == 2);
    CHECK(cfg.max_depth == 4096);
    CHECK(cfg.max_paths == 256);
    CHECK(cfg.loop_bound == 2);
    CHECK(!cfg.wildcard_oracle);
    CHECK(cfg.confirmation_depth == 6);
    CHECK(cfg.address_book().oracles.contains(fixture_oracle_address()));
    CHECK(cfg.valuation().rates.contains(fixture_token_address()));

    const Config bare = load_config(box.write("bare.json", "{}"));
    CHECK(bare.threshold_wei == 0);
    CHECK(bare.min_burst == 2);
}

TEST_CASE("load_config: errors")
{
    CliSandbox box;
    CHECK_THROWS_AS(load_config(box.path("missing.json")),
                    oracle::ConfigError);
    CHECK_THROWS_AS(load_config(box.write("junk.json", "not json")),
                    oracle::ConfigError);
    CHECK_THROWS_AS(
        load_config(box.write("neg.json", R"({"max_depth": 0})")),
        oracle::ConfigError);
    // oracle/token overlap
    const std::string overlap =
        R"({"oracles": ["0x1111111111111111111111111111111111111111"],
            "tokens": {"0x1111111111111111111111111111111111111111": {}}})";
    CHECK_THROWS_AS(load_config(box.write("overlap.json", overlap)),
                    oracle::ConfigError);
}

TEST_CASE("cmd_analyze: vulnerable fixture exits 2 with one finding")
{
    CliSandbox box;
    AnalyzeArgs args;
    args.bytecode_path = box.write_bytecode(emn_asm());
    args.config_path = box.write_config();
    args.out_path = box.path("report.json");
    std::ostringstream err;
    CHECK(cmd_analyze(args, err) == kExitVulnerable);
    const auto report = nlohmann::json::parse(slurp(args.out_path));
    CHECK(report["verdict"] == "vulnerable");
    CHECK(report["findings"].size() == 1);
    CHECK(err.str().empty());
}

TEST_CASE("cmd_analyze: empty bytecode exits clean with not_found")
{
    CliSandbox box;
    AnalyzeArgs args;
    args.bytecode_path = box.write("empty.hex", "");
    args.config_path = box.write_config();
    args.out_path = box.path("report.json");
    std::ostringstream err;
    CHECK(cmd_analyze(args, err) == kExitClean);
    const auto report = nlohmann::json::parse(slurp(args.out_path));
    CHECK(report["verdict"] == "not_found");
}

TEST_CASE("cmd_analyze: malformed hex exits 1")
{
    CliSandbox box;
    AnalyzeArgs args;
    args.bytecode_path = box.write("bad.hex", "0xzz");
    args.config_path = box.write_config();
    args.out_path = box.path("report.json");
    std::ostringstream err;
    CHECK(cmd_analyze(args, err) == kExitError);
    CHECK(!err.str().empty());
}

TEST_CASE("cmd_analyze: unsupported opcode byte exits 1 with a diagnostic")
{
    CliSandbox box;
    AnalyzeArgs args;
    args.bytecode_path = box.write("inv.hex", "600101fe");  // 0xfe INVALID
    args.config_path = box.write_config();
    args.out_path = box.path("report.json");
    std::ostringstream err;
    CHECK(cmd_analyze(args, err) == kExitError);
    CHECK(err.str().find("0xfe") != std::string::npos);
    CHECK(err.str().find("offset 3") != std::string::npos);
}

TEST_CASE("cmd_analyze: inconclusive loop exits 3")
{
    CliSandbox box;
    AnalyzeArgs args;
    args.bytecode_path = box.write_bytecode(loop_asm());
    args.config_path = box.write_config();
    args.out_path = box.path("report.json");
    std::ostringstream err;
    CHECK(cmd_analyze(args, err) == kExitInconclusive);
}

TEST_CASE("cmd_analyze: byte-identical across runs")
{
    CliSandbox box;
    AnalyzeArgs args;
    args.bytecode_path = box.write_bytecode(emn_asm());
    args.config_path = box.write_config();
    std::ostringstream err;
    args.out_path = box.path("a.json");
    CHECK(cmd_analyze(args, err) == kExitVulnerable);
    args.out_path = box.path("b.json");
    CHECK(cmd_analyze(args, err) == kExitVulnerable);
    CHECK(slurp(box.path("a.json")) == slurp(box.path("b.json")));
}

TEST_CASE("cmd_monitor: attack fixture writes exactly one alert line")
{
    CliSandbox box;
    MonitorArgs args;
    args.fixtures_path = box.write("attack.jsonl", jsonl_of(attack1_stream()));
    args.config_path = box.write_config();
    args.out_path = box.path("alerts.jsonl");
    std::ostringstream err;
    CHECK(cmd_monitor(args, err) == kExitClean);

    const std::string alerts = slurp(args.out_path);
    CHECK(std::count(alerts.begin(), alerts.end(), '\n') == 1);
    const auto rec = monitor::parse_alert(alerts);
    CHECK(rec.rule == "profit_threshold");
    CHECK(rec.txs.size() == 5);

    // report over the produced alert: one attacker row with count 1
    ReportArgs rargs;
    rargs.alerts_path = args.out_path;
    rargs.top = 1;
    std::ostringstream out;
    CHECK(cmd_report(rargs, out, err) == kExitClean);
    CHECK(out.str().find("top attackers (1)") != std::string::npos);
    CHECK(out.str().find(attacker_address().to_string() + "  1") !=
          std::string::npos);
}

TEST_CASE("cmd_monitor: benign fixture writes nothing")
{
    CliSandbox box;
    MonitorArgs args;
    args.fixtures_path = box.write("benign.jsonl", jsonl_of(conserve_stream()));
    args.config_path = box.write_config("1000000", 100);
    args.out_path = box.path("alerts.jsonl");
    std::ostringstream err;
    CHECK(cmd_monitor(args, err) == kExitClean);
    CHECK(slurp(args.out_path).empty());
}

TEST_CASE("cmd_monitor: unreadable fixture exits 1")
{
    CliSandbox box;
    MonitorArgs args;
    args.fixtures_path = box.path("nope.jsonl");
    args.config_path = box.write_config();
    std::ostringstream err;
    CHECK(cmd_monitor(args, err) == kExitError);
    CHECK(!err.str().empty());
}

TEST_CASE("cmd_monitor: gzip-compressed fixtures stream identically to plain")
{
    CliSandbox box;
    const std::string payload = jsonl_of(attack1_stream());
    MonitorArgs args;
    args.fixtures_path = box.write("attack.jsonl", payload);
    args.config_path = box.write_config();
    args.out_path = box.path("a.jsonl");
    std::ostringstream err;
    CHECK(cmd_monitor(args, err) == kExitClean);

    const std::string gz_path = box.path("attack.jsonl.gz");
    gzFile gz = gzopen(gz_path.c_str(), "wb");
    REQUIRE(gz != nullptr);
    REQUIRE(gzwrite(gz, payload.data(), static_cast<unsigned>(payload.size())) ==
            static_cast<int>(payload.size()));
    gzclose(gz);
    args.fixtures_path = gz_path;
    args.out_path = box.path("b.jsonl");
    CHECK(cmd_monitor(args, err) == kExitClean);
    CHECK(slurp(box.path("a.jsonl")) == slurp(box.path("b.jsonl")));
}

TEST_CASE("cmd_monitor: rpc mode streams until a stop is requested")
{
    MockNode node;
    CliSandbox box;
    MonitorArgs args;
    args.rpc_url = node.endpoint();
    args.config_path = box.write_config("0", 3);  // bursts of 3 alert
    args.out_path = box.path("alerts.jsonl");

    reset_stop_request();
    std::thread stopper{[] {
        std::this_thread::sleep_for(std::chrono::milliseconds{300});
        request_stop();
    }};
    std::ostringstream err;
    const int rc = cmd_monitor(args, err);
    stopper.join();
    reset_stop_request();

    CHECK(rc == kExitClean);
    // every mock block carries a 3-tx burst from one sender
    const std::string alerts = slurp(args.out_path);
    CHECK(std::count(alerts.begin(), alerts.end(), '\n') >= 1);
    CHECK(alerts.find("\"rule\":\"burst\"") != std::string::npos);
}

TEST_CASE("cmd_fetch_code: returns deployed bytecode over rpc")
{
    MockNode node;
    std::ostringstream out, err;
    CHECK(cmd_fetch_code(node.endpoint(),
                         "0xaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa", out,
                         err) == kExitClean);
    CHECK(out.str() == "0x6001600101\n");
}

TEST_CASE("cmd_fetch_code: dead endpoint fails fast instead of retrying forever")
{
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    CHECK(cmd_fetch_code("http://127.0.0.1:1",
                         "0xaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa", out,
                         err) == kExitError);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds{10});
    CHECK(!err.str().empty());
}

TEST_CASE("cmd_report: empty alerts file prints empty tables")
{
    CliSandbox box;
    ReportArgs args;
    args.alerts_path = box.write("alerts.jsonl", "");
    std::ostringstream out, err;
    CHECK(cmd_report(args, out, err) == kExitClean);
    CHECK(out.str().find("latest alerts (0 of 0)") != std::string::npos);
    CHECK(out.str().find("top attackers (0)") != std::string::npos);
}

TEST_CASE("cmd_report: seven alerts show five latest by default")
{
    CliSandbox box;
    // Build 7 alerts from 7 bursts by distinct senders in distinct blocks.
    std::vector<tx::Transaction> txs;
    for (uint32_t i = 0; i < 7; ++i) {
        const Address sender = make_address(static_cast<uint8_t>(0x30 + i));
        txs.push_back(make_tx(static_cast<uint8_t>(2 * i + 1), 100 + i, 0,
                              sender, 1, 1, {}));
        txs.push_back(make_tx(static_cast<uint8_t>(2 * i + 2), 100 + i, 1,
                              sender, 1, 1, {}));
    }
    monitor::MonitorConfig mc;
    mc.rules.threshold_wei = 1000000;
    mc.rules.min_burst = 2;  // every pair bursts
    mc.valuation = fixture_valuation();
    const auto alerts = monitor::run_monitor(txs, mc);
    REQUIRE(alerts.size() == 7);
    std::string lines;
    for (const auto& a : alerts)
        lines += monitor::alert_to_jsonl(a) + "\n";

    ReportArgs args;
    args.alerts_path = box.write("alerts.jsonl", lines);
    std::ostringstream out, err;
    CHECK(cmd_report(args, out, err) == kExitClean);
    const std::string text = out.str();
    CHECK(text.find("latest alerts (5 of 7)") != std::string::npos);
    // newest first: the block-106 sender leads
    const auto first_row = text.find("burst sender 0x36");
    CHECK(first_row != std::string::npos);
    // the two oldest senders fell off the latest list
    CHECK(text.find("burst sender 0x3030") == std::string::npos);
    CHECK(text.find("top attackers (7)") != std::string::npos);

    ReportArgs top1 = args;
    top1.top = 1;
    std::ostringstream out1;
    CHECK(cmd_report(top1, out1, err) == kExitClean);
    CHECK(out1.str().find("top attackers (1)") != std::string::npos);
}

TEST_CASE("cmd_report: malformed alert line exits 1")
{
    CliSandbox box;
    ReportArgs args;
    args.alerts_path = box.write("alerts.jsonl", "{broken\n");
    std::ostringstream out, err;
    CHECK(cmd_report(args, out, err) == kExitError);
}

TEST_CASE("cmd_disasm: prints offset, mnemonic, immediate")
{
    CliSandbox box;
    std::ostringstream out, err;
    CHECK(cmd_disasm(box.write("c.hex", "6001600101"), out, err) == kExitClean);
    CHECK(out.str() ==
          "0\tPUSH1 0x1\n2\tPUSH1 0x1\n4\tADD\n");
}

TEST_CASE("cmd_disasm: empty file prints nothing, exits 0")
{
    CliSandbox box;
    std::ostringstream out, err;
    CHECK(cmd_disasm(box.write("e.hex", ""), out, err) == kExitClean);
    CHECK(out.str().empty());
}

TEST_CASE("cmd_disasm: invalid byte mid-stream prints the valid prefix")
{
    CliSandbox box;
    std::ostringstream out, err;
    CHECK(cmd_disasm(box.write("p.hex", "600101fe00"), out, err) == kExitError);
    CHECK(out.str() == "0\tPUSH1 0x1\n2\tADD\n");
    CHECK(err.str().find("0xfe") != std::string::npos);
}
