// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/oracle/address_book.hpp>
#include <blockeye/tx/transaction.hpp>
#include <blockeye/tx/valuation.hpp>

#include <string>
#include <vector>

namespace blockeye::testsupport {

// ---- bytecode fixtures ----------------------------------------------------
//
// All are built via the assembler; expected offsets below are hand-computed
// from the instruction widths and frozen.

Address fixture_oracle_address();  // 0x1111...11
Address fixture_token_address();   // 0x2222...22

oracle::AddressBook fixture_book();

/// Oracle read -> arithmetic -> token call whose amount word is tainted.
/// One call_argument flow from the STATICCALL at 32 to the CALL at 73.
std::string emn_asm();
inline constexpr size_t kEmnSourceSite = 32;
inline constexpr size_t kEmnSinkSite = 73;
std::vector<size_t> emn_witness();  // {32,33,35,36,38,39,41,43,45,47,49,70,73}

/// Oracle read whose result is immediately discarded. No findings.
std::string pop_asm();

/// Oracle read stored to slot 0: one storage_write flow 32 -> 35.
std::string store_asm();
inline constexpr size_t kStoreSinkSite = 35;

/// Oracle read discarded; an unrelated constant is stored. No findings.
std::string indep_asm();

/// Oracle result reaches an SSTORE only on the taken branch of a symbolic
/// JUMPI at 39 (branch target 42, sink 45).
std::string branch_asm();
inline constexpr size_t kBranchJumpiSite = 39;
inline constexpr size_t kBranchSinkSite = 45;

/// Counter loop bounded by a symbolic calldata word; with loop_bound=2 the
/// all-iterations path is cut.
std::string loop_asm();

Bytes assemble_fixture(const std::string& text);

// ---- transaction fixtures ---------------------------------------------------

Address attacker_address();  // 0xaaaa...aa

/// Five same-block (100) transactions from one sender performing a
/// borrow/swap/dump/repay/skim round trip, plus one same-sender transaction
/// in block 101. With the token priced 2 wei per unit, the block-100 ledger
/// is: benefit 3030, cost 3010 (3005 outflow + 5 gas), profit 20.
std::vector<tx::Transaction> attack1_stream();
inline constexpr int64_t kAttack1Profit = 20;
inline constexpr size_t kAttack1ClusterSize = 5;

tx::Valuation fixture_valuation();  // token 0x2222..22 at rate 2/1

/// Closed block: every transfer endpoint is one of four tracked addresses
/// and the gas payment travels as explicit fee edges to a coinbase address
/// (gas_price 0). Per-address profits: A -109, B +45, C +49, coinbase +15.
std::vector<tx::Transaction> conserve_stream();
std::vector<Address> conserve_addresses();  // A, B, C, coinbase

/// Same block without fee edges, gas_price 1: the senders' profits now sum
/// to -(total gas) = -15.
std::vector<tx::Transaction> conserve_stream_gas_variant();
inline constexpr int64_t kConserveTotalGas = 15;

// ---- small helpers ----------------------------------------------------------

Address make_address(uint8_t fill);
Hash32 make_hash(uint8_t tag);

tx::Transaction make_tx(uint8_t hash_tag, uint64_t block, uint32_t index,
                        const Address& sender, uint64_t gas_used,
                        const Word& gas_price,
                        std::vector<tx::Transfer> transfers,
                        tx::TxStatus status = tx::TxStatus::Success);

tx::Transfer native_edge(const Address& from, const Address& to, const Word& amount);
tx::Transfer token_edge(const Address& token, const Address& from,
                        const Address& to, const Word& amount);

/// Creates a fresh directory under the system temp path.
std::string make_temp_dir(const std::string& prefix);

void write_file(const std::string& path, const std::string& content);

std::string jsonl_of(const std::vector<tx::Transaction>& txs);

/// Config-file JSON matching fixture_book()/fixture_valuation().
std::string fixture_config_json(const std::string& threshold_wei,
                                uint32_t min_burst, uint64_t window_blocks);

}  // namespace blockeye::testsupport
