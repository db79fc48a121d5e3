#include "husp/ul_list.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace husp {

std::optional<Pos> ULList::first_pos(ItemId item) const {
    const auto it = std::lower_bound(header.begin(), header.end(), item,
                                     [](const ULHeaderEntry& e, ItemId id) { return e.item < id; });
    if (it == header.end() || it->item != item) return std::nullopt;
    return it->firstPos;
}

Money ULList::rest_utility(Pos p) const {
    if (p < 1 || p > flat_length())
        throw std::out_of_range("position " + std::to_string(p) + " out of range for sid " + std::to_string(sid));
    return at(p).remainingUtility;
}

ULList build_ul_list(const QSequence& s, const ProfitTable& profits) {
    ULList ul;
    ul.sid = s.sid;
    ul.elements.reserve(static_cast<std::size_t>(s.flatLength));
    ul.itemsetOf.reserve(static_cast<std::size_t>(s.flatLength));
    for (std::size_t j = 0; j < s.itemsets.size(); ++j) {
        for (const auto& qi : s.itemsets[j].items) {
            ULElement e;
            e.item = qi.item;
            e.utility = item_utility(profits, qi);
            ul.elements.push_back(e);
            ul.itemsetOf.push_back(static_cast<std::int32_t>(j));
        }
    }

    Money suffix = 0;
    std::map<ItemId, Pos> nextSeen;
    for (auto p = static_cast<Pos>(ul.elements.size()); p >= 1; --p) {
        auto& e = ul.elements[static_cast<std::size_t>(p - 1)];
        e.remainingUtility = suffix;
        suffix += e.utility;
        const auto it = nextSeen.find(e.item);
        if (it != nextSeen.end()) e.nextPos = it->second;
        nextSeen[e.item] = p;
    }
    ul.totalUtility = suffix;

    for (const auto& [item, firstPos] : nextSeen) ul.header.push_back(ULHeaderEntry{item, firstPos});
    return ul;
}

std::vector<ULList> build_ul_lists(const QSeqDatabase& db) {
    std::vector<ULList> lists;
    lists.reserve(db.sequences.size());
    for (const auto& s : db.sequences) lists.push_back(build_ul_list(s, db.profits));
    return lists;
}

std::string format_ul_list(const ULList& ul) {
    std::ostringstream out;
    out << "SID: " << ul.sid << '\n';
    out << "UP: <";
    std::int32_t itemset = -1;
    for (Pos p = 1; p <= ul.flat_length(); ++p) {
        const auto& e = ul.at(p);
        if (ul.itemset_of(p) != itemset) {
            if (itemset >= 0) out << "], ";
            out << '[';
            itemset = ul.itemset_of(p);
        } else {
            out << ' ';
        }
        out << '(' << e.item << ',' << money_to_string(e.utility) << ','
            << money_to_string(e.remainingUtility) << ',';
        if (e.nextPos)
            out << *e.nextPos;
        else
            out << '-';
        out << ')';
    }
    if (itemset >= 0) out << ']';
    out << ">\n";
    out << "Header:";
    for (const auto& h : ul.header) out << " (" << h.item << ',' << h.firstPos << ')';
    out << '\n';
    return out.str();
}

}  // namespace husp
