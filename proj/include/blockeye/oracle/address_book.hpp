// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <blockeye/core/address.hpp>
#include <blockeye/sym/state.hpp>

#include <set>
#include <stdexcept>

namespace blockeye::oracle {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The analyst-supplied callee universe: which addresses are price oracles
/// and which are asset-token contracts. With wildcard_oracle set, calls to
/// unresolvable (symbolic) callees are treated as oracle reads too.
struct AddressBook {
    std::set<Address> oracles;
    std::set<Address> tokens;
    bool wildcard_oracle = false;

    /// Throws ConfigError when the oracle and token sets overlap.
    void validate() const;
};

sym::CalleeClass classify_callee(const sym::SymValue& callee,
                                 const AddressBook& book);

/// CalleeClassifier adapter over an AddressBook.
class BookClassifier final : public sym::CalleeClassifier {
public:
    explicit BookClassifier(AddressBook book);

    sym::CalleeClass classify(const sym::SymValue& callee) const override;

    const AddressBook& book() const { return book_; }

private:
    AddressBook book_;
};

}  // namespace blockeye::oracle
