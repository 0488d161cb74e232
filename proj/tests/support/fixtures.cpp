// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <blockeye/evm/assembler.hpp>
#include <blockeye/tx/codec.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace blockeye::testsupport {

namespace {

std::string push20(const Address& a)
{
    return "PUSH20 " + a.to_string();
}

// Shared preamble: STATICCALL to the oracle with empty calldata, result on
// the stack. Ends at offset 33.
std::string oracle_call_prefix()
{
    std::ostringstream os;
    os << "PUSH1 0x00\n"   // 0: retLen
       << "PUSH1 0x00\n"   // 2: retOff
       << "PUSH1 0x00\n"   // 4: argsLen
       << "PUSH1 0x00\n"   // 6: argsOff
       << push20(fixture_oracle_address()) << "\n"  // 8
       << "PUSH2 0xffff\n" // 29: gas
       << "STATICCALL\n";  // 32
    return os.str();
}

}  // namespace

Address fixture_oracle_address()
{
    return make_address(0x11);
}

Address fixture_token_address()
{
    return make_address(0x22);
}

oracle::AddressBook fixture_book()
{
    oracle::AddressBook book;
    book.oracles.insert(fixture_oracle_address());
    book.tokens.insert(fixture_token_address());
    return book;
}

std::string emn_asm()
{
    std::ostringstream os;
    os << oracle_call_prefix()
       << "PUSH1 0x02\n"   // 33
       << "MUL\n"          // 35: amount = 2 * oracle price
       << "PUSH1 0x20\n"   // 36
       << "MSTORE\n"       // 38: mem[0x20] = amount
       << "PUSH1 0x00\n"   // 39: retLen
       << "PUSH1 0x00\n"   // 41: retOff
       << "PUSH1 0x20\n"   // 43: argsLen
       << "PUSH1 0x20\n"   // 45: argsOff
       << "PUSH1 0x00\n"   // 47: value
       << push20(fixture_token_address()) << "\n"  // 49
       << "PUSH2 0xffff\n" // 70: gas
       << "CALL\n"         // 73: transfer(amount)
       << "POP\n"          // 74
       << "STOP\n";        // 75
    return os.str();
}

std::vector<size_t> emn_witness()
{
    return {32, 33, 35, 36, 38, 39, 41, 43, 45, 47, 49, 70, 73};
}

std::string pop_asm()
{
    return oracle_call_prefix() + "POP\nSTOP\n";
}

std::string store_asm()
{
    std::ostringstream os;
    os << oracle_call_prefix()
       << "PUSH1 0x00\n"  // 33: slot
       << "SSTORE\n"      // 35: storage[0] = oracle price
       << "STOP\n";       // 36
    return os.str();
}

std::string indep_asm()
{
    std::ostringstream os;
    os << oracle_call_prefix()
       << "POP\n"         // 33: discard oracle result
       << "PUSH1 0x05\n"  // 34: constant value
       << "PUSH1 0x00\n"  // 36: slot
       << "SSTORE\n"      // 38
       << "STOP\n";       // 39
    return os.str();
}

std::string branch_asm()
{
    std::ostringstream os;
    os << oracle_call_prefix()
       << "PUSH1 0x00\n"      // 33
       << "CALLDATALOAD\n"    // 35: symbolic condition
       << "PUSH2 @sink\n"     // 36
       << "JUMPI\n"           // 39
       << "POP\n"             // 40: fall-through discards the oracle value
       << "STOP\n"            // 41
       << "@sink: JUMPDEST\n" // 42
       << "PUSH1 0x00\n"      // 43: slot
       << "SSTORE\n"          // 45: tainted store on the taken branch only
       << "STOP\n";           // 46
    return os.str();
}

std::string loop_asm()
{
    std::ostringstream os;
    os << "PUSH1 0x00\n"      // 0: counter = 0
       << "@loop: JUMPDEST\n" // 2
       << "PUSH1 0x01\n"      // 3
       << "ADD\n"             // 5: counter + 1
       << "DUP1\n"            // 6
       << "PUSH1 0x00\n"      // 7
       << "CALLDATALOAD\n"    // 9: symbolic bound
       << "GT\n"              // 10: bound > counter
       << "PUSH2 @loop\n"     // 11
       << "JUMPI\n"           // 14
       << "POP\n"             // 15
       << "STOP\n";           // 16
    return os.str();
}

Bytes assemble_fixture(const std::string& text)
{
    return evm::assemble(text);
}

Address attacker_address()
{
    return make_address(0xaa);
}

tx::Valuation fixture_valuation()
{
    tx::Valuation v;
    v.rates.emplace(fixture_token_address(), tx::Valuation::Rate{2, 1});
    return v;
}

std::vector<tx::Transaction> attack1_stream()
{
    const Address x = attacker_address();
    const Address lender = make_address(0xbb);
    const Address pool = make_address(0xcc);
    const Address victim = make_address(0xdd);
    const Address token = fixture_token_address();

    std::vector<tx::Transaction> txs;
    // borrow: flash-loan principal in
    txs.push_back(make_tx(0x01, 100, 0, x, 1, 1,
                          {native_edge(lender, x, 1000)}));
    // swap: principal out, tokens in (515 units = 1030 wei)
    txs.push_back(make_tx(0x02, 100, 1, x, 1, 1,
                          {native_edge(x, pool, 1000),
                           token_edge(token, pool, x, 515)}));
    // dump: 500 tokens (1000 wei) out, 995 wei in
    txs.push_back(make_tx(0x03, 100, 2, x, 1, 1,
                          {token_edge(token, x, victim, 500),
                           native_edge(victim, x, 995)}));
    // repay principal + fee
    txs.push_back(make_tx(0x04, 100, 3, x, 1, 1,
                          {native_edge(x, lender, 1005)}));
    // skim the leftovers
    txs.push_back(make_tx(0x05, 100, 4, x, 1, 1,
                          {native_edge(victim, x, 5)}));
    // unrelated next-block transaction from the same sender
    txs.push_back(make_tx(0x06, 101, 0, x, 1, 1, {}));
    return txs;
}

std::vector<Address> conserve_addresses()
{
    return {make_address(0xa1), make_address(0xb2), make_address(0xc3),
            make_address(0xfe)};
}

std::vector<tx::Transaction> conserve_stream()
{
    const auto addrs = conserve_addresses();
    const Address a = addrs[0], b = addrs[1], c = addrs[2], coinbase = addrs[3];
    const Address token = fixture_token_address();

    std::vector<tx::Transaction> txs;
    txs.push_back(make_tx(0x11, 50, 0, a, 7, 0,
                          {native_edge(a, b, 100), token_edge(token, a, c, 3),
                           native_edge(a, coinbase, 7)}));
    txs.push_back(make_tx(0x12, 50, 1, b, 5, 0,
                          {native_edge(b, c, 50), native_edge(b, coinbase, 5)}));
    txs.push_back(make_tx(0x13, 50, 2, c, 3, 0,
                          {token_edge(token, c, a, 2),
                           native_edge(c, coinbase, 3)}));
    return txs;
}

std::vector<tx::Transaction> conserve_stream_gas_variant()
{
    const auto addrs = conserve_addresses();
    const Address a = addrs[0], b = addrs[1], c = addrs[2];
    const Address token = fixture_token_address();

    std::vector<tx::Transaction> txs;
    txs.push_back(make_tx(0x11, 50, 0, a, 7, 1,
                          {native_edge(a, b, 100), token_edge(token, a, c, 3)}));
    txs.push_back(make_tx(0x12, 50, 1, b, 5, 1, {native_edge(b, c, 50)}));
    txs.push_back(make_tx(0x13, 50, 2, c, 3, 1, {token_edge(token, c, a, 2)}));
    return txs;
}

Address make_address(uint8_t fill)
{
    Address a;
    a.bytes.fill(fill);
    return a;
}

Hash32 make_hash(uint8_t tag)
{
    Hash32 h;
    h.bytes.fill(0);
    h.bytes.back() = tag;
    return h;
}

tx::Transaction make_tx(uint8_t hash_tag, uint64_t block, uint32_t index,
                        const Address& sender, uint64_t gas_used,
                        const Word& gas_price,
                        std::vector<tx::Transfer> transfers,
                        tx::TxStatus status)
{
    tx::Transaction t;
    t.hash = make_hash(hash_tag);
    t.block_number = block;
    t.tx_index = index;
    t.sender = sender;
    t.to = make_address(0xee);  // a counterparty contract
    t.value = 0;
    t.gas_used = gas_used;
    t.gas_price = gas_price;
    t.status = status;
    t.transfers = std::move(transfers);
    return t;
}

tx::Transfer native_edge(const Address& from, const Address& to,
                         const Word& amount)
{
    return tx::Transfer{tx::Native{}, from, to, amount};
}

tx::Transfer token_edge(const Address& token, const Address& from,
                        const Address& to, const Word& amount)
{
    return tx::Transfer{tx::Token{token}, from, to, amount};
}

std::string make_temp_dir(const std::string& prefix)
{
    static std::atomic<uint64_t> counter{0};
    const auto dir = std::filesystem::temp_directory_path() /
                     (prefix + std::to_string(::getpid()) + "_" +
                      std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir);
    return dir.string();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    out << content;
    if (!out)
        throw std::runtime_error{"cannot write " + path};
}

std::string jsonl_of(const std::vector<tx::Transaction>& txs)
{
    std::string out;
    for (const auto& t : txs) {
        out += tx::serialize(t);
        out += '\n';
    }
    return out;
}

std::string fixture_config_json(const std::string& threshold_wei,
                                uint32_t min_burst, uint64_t window_blocks)
{
    std::ostringstream os;
    os << "{\n"
       << "  \"oracles\": [\"" << fixture_oracle_address().to_string()
       << "\"],\n"
       << "  \"tokens\": {\"" << fixture_token_address().to_string()
       << "\": {\"symbol\": \"TKN\", \"rate_num\": \"2\", \"rate_den\": \"1\"}},\n"
       << "  \"threshold_wei\": \"" << threshold_wei << "\",\n"
       << "  \"window_blocks\": " << window_blocks << ",\n"
       << "  \"min_burst\": " << min_burst << ",\n"
       << "  \"max_depth\": 4096,\n"
       << "  \"max_paths\": 256,\n"
       << "  \"loop_bound\": 2\n"
       << "}\n";
    return os.str();
}

}  // namespace blockeye::testsupport
