#include "husp/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace husp {

std::int32_t Pattern::length() const {
    std::int32_t n = 0;
    for (const auto& w : itemsets) n += static_cast<std::int32_t>(w.size());
    return n;
}

bool pattern_less(const Pattern& a, const Pattern& b) {
    if (a.itemsets.size() != b.itemsets.size()) return a.itemsets.size() < b.itemsets.size();
    return a.itemsets < b.itemsets;
}

std::string pattern_to_string(const Pattern& p) {
    std::ostringstream out;
    for (std::size_t k = 0; k < p.itemsets.size(); ++k) {
        if (k > 0) out << "-1 ";
        for (const ItemId id : p.itemsets[k]) out << id << ' ';
    }
    out << "-2";
    return out.str();
}

Pattern pattern_from_string(const std::string& text) {
    Pattern p;
    std::istringstream ss(text);
    std::string tok;
    std::vector<ItemId> current;
    bool terminated = false;
    while (ss >> tok) {
        if (terminated) throw ParseError("pattern tokens after -2");
        if (tok == "-2") {
            terminated = true;
            continue;
        }
        if (tok == "-1") {
            if (current.empty()) throw ParseError("empty itemset in pattern");
            p.itemsets.push_back(std::move(current));
            current.clear();
            continue;
        }
        long v = 0;
        try {
            std::size_t used = 0;
            v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad pattern token '" + tok + "'");
        }
        if (v <= 0) throw ParseError("bad pattern token '" + tok + "'");
        if (!current.empty() && current.back() >= v)
            throw ParseError("pattern itemset not strictly increasing at '" + tok + "'");
        current.push_back(static_cast<ItemId>(v));
    }
    if (!current.empty()) p.itemsets.push_back(std::move(current));
    if (p.itemsets.empty()) throw ParseError("empty pattern");
    return p;
}

namespace {

// Positions (1-based) a pattern itemset occupies inside transaction itemset
// `j`, or empty if not a subset. Ids within an itemset are unique, so the
// embedding is unique when it exists.
std::vector<Pos> embed_itemset(const std::vector<ItemId>& want, const QItemset& have, Pos base) {
    std::vector<Pos> positions;
    positions.reserve(want.size());
    std::size_t h = 0;
    for (const ItemId id : want) {
        while (h < have.items.size() && have.items[h].item < id) ++h;
        if (h == have.items.size() || have.items[h].item != id) return {};
        positions.push_back(base + static_cast<Pos>(h));
        ++h;
    }
    return positions;
}

void collect_matches(const Pattern& t, const QSequence& s, const std::vector<Pos>& bases,
                     std::size_t patIdx, std::size_t fromItemset, MatchVector& partial,
                     std::vector<MatchVector>& out) {
    if (patIdx == t.itemsets.size()) {
        out.push_back(partial);
        return;
    }
    for (std::size_t j = fromItemset; j < s.itemsets.size(); ++j) {
        auto positions = embed_itemset(t.itemsets[patIdx], s.itemsets[j], bases[j]);
        if (positions.empty()) continue;
        partial.groups.push_back(std::move(positions));
        collect_matches(t, s, bases, patIdx + 1, j + 1, partial, out);
        partial.groups.pop_back();
    }
}

}  // namespace

std::vector<MatchVector> find_matches(const Pattern& t, const QSequence& s) {
    std::vector<MatchVector> out;
    if (t.itemsets.empty()) return out;
    std::vector<Pos> bases(s.itemsets.size());
    Pos base = 1;
    for (std::size_t j = 0; j < s.itemsets.size(); ++j) {
        bases[j] = base;
        base += static_cast<Pos>(s.itemsets[j].items.size());
    }
    MatchVector partial;
    collect_matches(t, s, bases, 0, 0, partial, out);
    return out;
}

Money match_utility(const ProfitTable& profits, const QSequence& s, const MatchVector& m) {
    // Flatten once; matches are sparse but sequences are short.
    std::vector<const QItem*> flat;
    flat.reserve(static_cast<std::size_t>(s.flatLength));
    for (const auto& v : s.itemsets)
        for (const auto& qi : v.items) flat.push_back(&qi);
    Money u = 0;
    for (const auto& group : m.groups)
        for (const Pos p : group) u += item_utility(profits, *flat[static_cast<std::size_t>(p - 1)]);
    return u;
}

Money naive_pattern_utility_in(const Pattern& t, const QSequence& s, const ProfitTable& profits) {
    Money best = 0;
    for (const auto& m : find_matches(t, s)) best = std::max(best, match_utility(profits, s, m));
    return best;
}

Money naive_pattern_utility(const Pattern& t, const QSeqDatabase& db) {
    Money total = 0;
    for (const auto& s : db.sequences) total += naive_pattern_utility_in(t, s, db.profits);
    return total;
}

}  // namespace husp
