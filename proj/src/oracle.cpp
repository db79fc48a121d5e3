#include "husp/oracle.hpp"

#include <algorithm>

namespace husp {

namespace {

bool contained_somewhere(const Pattern& t, const QSeqDatabase& db) {
    for (const auto& s : db.sequences)
        if (!find_matches(t, s).empty()) return true;
    return false;
}

struct Enumerator {
    const QSeqDatabase& db;
    std::vector<ItemId> items;  // distinct ids, ascending
    std::int32_t maxLen;
    std::int64_t nodeCap;
    std::int64_t nodes = 0;
    std::vector<Pattern> out;

    void grow(const Pattern& t) {
        if (++nodes > nodeCap)
            throw BudgetError("pattern enumeration exceeded the node cap of " + std::to_string(nodeCap));
        out.push_back(t);
        if (t.length() >= maxLen) return;
        // I-extensions keep canonical itemsets: only larger ids qualify.
        for (const ItemId id : items) {
            if (id <= t.last_item()) continue;
            Pattern child = t;
            child.itemsets.back().push_back(id);
            if (contained_somewhere(child, db)) grow(child);
        }
        for (const ItemId id : items) {
            Pattern child = t;
            child.itemsets.push_back({id});
            if (contained_somewhere(child, db)) grow(child);
        }
    }
};

}  // namespace

std::vector<Pattern> enumerate_patterns(const QSeqDatabase& db, std::int32_t maxLen,
                                        std::int64_t nodeCap) {
    Enumerator en{db, {}, maxLen, nodeCap};
    for (const auto& [item, sids] : db.itemIndex) en.items.push_back(item);
    for (const ItemId id : en.items) {
        Pattern root;
        root.itemsets.push_back({id});
        en.grow(root);  // 1-sequences of present items are always contained
    }
    std::sort(en.out.begin(), en.out.end(), pattern_less);
    return en.out;
}

std::vector<OracleHUSP> oracle_mine(const QSeqDatabase& db, Money minUtil, std::int32_t maxLen,
                                    std::int64_t nodeCap) {
    if (maxLen <= 0)
        for (const auto& s : db.sequences) maxLen = std::max(maxLen, s.flatLength);
    std::vector<OracleHUSP> results;
    for (const auto& t : enumerate_patterns(db, maxLen, nodeCap)) {
        const Money u = naive_pattern_utility(t, db);
        if (u >= minUtil) results.push_back(OracleHUSP{t, u});
    }
    return results;  // enumeration is already canonical
}

}  // namespace husp
