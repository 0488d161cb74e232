// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/oracle/address_book.hpp>

#include <algorithm>

namespace blockeye::oracle {

void AddressBook::validate() const
{
    std::vector<Address> overlap;
    std::set_intersection(oracles.begin(), oracles.end(), tokens.begin(),
                          tokens.end(), std::back_inserter(overlap));
    if (!overlap.empty())
        throw ConfigError{"address " + overlap.front().to_string() +
                          " is listed as both oracle and token"};
}

sym::CalleeClass classify_callee(const sym::SymValue& callee,
                                 const AddressBook& book)
{
    if (!callee->is_concrete())
        return book.wildcard_oracle ? sym::CalleeClass::Oracle
                                    : sym::CalleeClass::Unknown;
    // Addresses live in the low 160 bits of the stack word.
    const Word mask = (Word{1} << 160) - 1;
    const Address addr = Address::from_word(callee->value & mask);
    if (book.oracles.contains(addr))
        return sym::CalleeClass::Oracle;
    if (book.tokens.contains(addr))
        return sym::CalleeClass::Token;
    return sym::CalleeClass::Unknown;
}

BookClassifier::BookClassifier(AddressBook book) : book_{std::move(book)}
{
    book_.validate();
}

sym::CalleeClass BookClassifier::classify(const sym::SymValue& callee) const
{
    return classify_callee(callee, book_);
}

}  // namespace blockeye::oracle
