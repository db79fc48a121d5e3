#pragma once

#include <optional>
#include <string>
#include <vector>

#include "husp/database.hpp"

namespace husp {

struct ULElement {
    ItemId item = 0;
    Money utility = 0;           // q * pr at this position
    Money remainingUtility = 0;  // sum of utilities strictly after this position
    std::optional<Pos> nextPos;  // next occurrence of the same item
};

struct ULHeaderEntry {
    ItemId item = 0;
    Pos firstPos = 0;
};

// Per-transaction utility-linked list: the flattened sequence with cached
// utility, remaining utility and same-item links, plus a first-occurrence
// header. Built once per run and shared read-only.
struct ULList {
    int sid = 0;
    std::vector<ULElement> elements;       // element i holds position i+1
    std::vector<std::int32_t> itemsetOf;   // 0-based itemset index per position
    std::vector<ULHeaderEntry> header;     // ascending item id
    Money totalUtility = 0;

    std::int32_t flat_length() const { return static_cast<std::int32_t>(elements.size()); }
    const ULElement& at(Pos p) const { return elements[static_cast<std::size_t>(p - 1)]; }
    std::int32_t itemset_of(Pos p) const { return itemsetOf[static_cast<std::size_t>(p - 1)]; }
    std::optional<Pos> first_pos(ItemId item) const;

    // remaining utility after position p, O(1); throws on out-of-range p
    Money rest_utility(Pos p) const;
};

ULList build_ul_list(const QSequence& s, const ProfitTable& profits);
std::vector<ULList> build_ul_lists(const QSeqDatabase& db);

// Two-row layout used by the `inspect` subcommand:
//   SID: 1
//   UP: <[(1,10,84,3) (3,12,72,5)], ...>
//   Header: (1,1) (2,4) (3,2) (4,8) (5,9)
std::string format_ul_list(const ULList& ul);

}  // namespace husp
