#include "husp/database.hpp"

#include <sstream>

namespace husp {

namespace {

[[noreturn]] void fail(int lineNo, const std::string& what) {
    throw ParseError("line " + std::to_string(lineNo) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

ItemId parse_item_id(const std::string& tok, int lineNo) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size() || v <= 0 || v > INT32_MAX) fail(lineNo, "bad item id '" + tok + "'");
        return static_cast<ItemId>(v);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(lineNo, "bad item id '" + tok + "'");
    }
}

}  // namespace

Money ProfitTable::profit_of(ItemId item) const {
    const auto it = entries.find(item);
    if (it == entries.end())
        throw ParseError("unknown item id " + std::to_string(item));
    return it->second;
}

Money item_utility(const ProfitTable& profits, const QItem& qi) {
    return qi.quantity * profits.profit_of(qi.item);
}

Money itemset_utility(const ProfitTable& profits, const QItemset& v) {
    Money u = 0;
    for (const auto& qi : v.items) u += item_utility(profits, qi);
    return u;
}

ProfitTable parse_profit_table(std::istream& in) {
    ProfitTable table;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) fail(lineNo, "expected `<item-id> <profit>`");
        const ItemId id = parse_item_id(tokens[0], lineNo);
        Money profit = 0;
        try {
            profit = money_from_string(tokens[1]);
        } catch (const std::exception& e) {
            fail(lineNo, e.what());
        }
        if (profit <= 0) fail(lineNo, "profit must be positive for item " + std::to_string(id));
        if (!table.entries.emplace(id, profit).second)
            fail(lineNo, "duplicate item id " + std::to_string(id));
    }
    return table;
}

ProfitTable parse_profit_table(const std::string& text) {
    std::istringstream ss(text);
    return parse_profit_table(ss);
}

QSeqDatabase parse_database(std::istream& in, ProfitTable profits) {
    QSeqDatabase db;
    db.profits = std::move(profits);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        QSequence seq;
        seq.sid = static_cast<int>(db.sequences.size()) + 1;
        QItemset current;
        bool terminated = false;
        for (std::size_t k = 0; k < tokens.size(); ++k) {
            const std::string& tok = tokens[k];
            if (terminated) fail(lineNo, "tokens after -2");
            if (tok == "-2") {
                if (current.items.empty()) fail(lineNo, "empty itemset before -2");
                seq.itemsets.push_back(std::move(current));
                current = {};
                terminated = true;
                continue;
            }
            if (tok == "-1") {
                if (current.items.empty()) fail(lineNo, "empty itemset before -1");
                seq.itemsets.push_back(std::move(current));
                current = {};
                continue;
            }
            const auto colon = tok.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.size())
                fail(lineNo, "expected `<id>:<qty>`, got '" + tok + "'");
            const ItemId id = parse_item_id(tok.substr(0, colon), lineNo);
            std::int64_t qty = 0;
            try {
                std::size_t used = 0;
                qty = std::stoll(tok.substr(colon + 1), &used);
                if (used != tok.size() - colon - 1) fail(lineNo, "bad quantity in '" + tok + "'");
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                fail(lineNo, "bad quantity in '" + tok + "'");
            }
            if (qty < 1) fail(lineNo, "quantity must be >= 1 in '" + tok + "'");
            if (!db.profits.contains(id)) fail(lineNo, "unknown item id " + std::to_string(id));
            if (!current.items.empty() && current.items.back().item >= id)
                fail(lineNo, "itemset not strictly increasing at '" + tok + "'");
            current.items.push_back(QItem{id, qty});
        }
        if (!terminated) fail(lineNo, "missing -2 terminator");

        for (const auto& v : seq.itemsets) {
            seq.totalUtility += itemset_utility(db.profits, v);
            seq.flatLength += static_cast<std::int32_t>(v.items.size());
            for (const auto& qi : v.items) {
                auto& sids = db.itemIndex[qi.item];
                if (sids.empty() || sids.back() != seq.sid) sids.push_back(seq.sid);
            }
        }
        db.totalUtility += seq.totalUtility;
        db.sequences.push_back(std::move(seq));
    }
    return db;
}

QSeqDatabase parse_database(const std::string& text, ProfitTable profits) {
    std::istringstream ss(text);
    return parse_database(ss, std::move(profits));
}

}  // namespace husp
