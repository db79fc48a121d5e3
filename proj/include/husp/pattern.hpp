#pragma once

#include <string>
#include <vector>

#include "husp/database.hpp"

namespace husp {

// A sequence of itemsets without quantities. Each itemset is strictly
// increasing by item id; the whole pattern has a unique canonical rendering.
struct Pattern {
    std::vector<std::vector<ItemId>> itemsets;

    std::int32_t length() const;
    bool empty() const { return itemsets.empty(); }
    ItemId last_item() const { return itemsets.back().back(); }

    bool operator==(const Pattern&) const = default;
};

// Canonical order: itemset count, then itemset-wise lexicographic ids.
bool pattern_less(const Pattern& a, const Pattern& b);

// "1 3 -1 2 -2" (ids space separated, -1 between itemsets, -2 terminator).
std::string pattern_to_string(const Pattern& p);

// Accepts the canonical rendering with or without the trailing -2.
Pattern pattern_from_string(const std::string& text);

// 1-based global positions of one embedding of a pattern in a q-sequence,
// grouped by pattern itemset. Flattened positions are strictly increasing.
struct MatchVector {
    std::vector<std::vector<Pos>> groups;
};

// Every distinct match of `t` in `s`; empty iff t is not contained in s.
std::vector<MatchVector> find_matches(const Pattern& t, const QSequence& s);

Money match_utility(const ProfitTable& profits, const QSequence& s, const MatchVector& m);

// Definitional utility: sum over containing transactions of the maximum
// utility over all matches. The slow reference every fast path must equal.
Money naive_pattern_utility(const Pattern& t, const QSeqDatabase& db);
Money naive_pattern_utility_in(const Pattern& t, const QSequence& s, const ProfitTable& profits);

}  // namespace husp
