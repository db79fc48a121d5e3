#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "husp/money.hpp"

namespace husp {

using ItemId = std::int32_t;
using Pos = std::int32_t;  // 1-based position in a flattened sequence

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unit profit per item, fixed-point. Every item in a database must have an
// entry and every profit is strictly positive.
struct ProfitTable {
    std::map<ItemId, Money> entries;

    Money profit_of(ItemId item) const;
    bool contains(ItemId item) const { return entries.count(item) != 0; }
};

struct QItem {
    ItemId item = 0;
    std::int64_t quantity = 0;
};

// Items strictly increasing by id; non-empty.
struct QItemset {
    std::vector<QItem> items;
};

struct QSequence {
    int sid = 0;
    std::vector<QItemset> itemsets;
    Money totalUtility = 0;
    std::int32_t flatLength = 0;
};

struct QSeqDatabase {
    std::vector<QSequence> sequences;
    ProfitTable profits;
    Money totalUtility = 0;
    std::map<ItemId, std::vector<int>> itemIndex;  // item -> ascending sids
};

// One line per entry: `<item-id> <decimal-profit>`. Duplicate ids,
// non-positive profits and malformed lines are errors.
ProfitTable parse_profit_table(std::istream& in);
ProfitTable parse_profit_table(const std::string& text);

// One line per q-sequence: `<id>:<qty>` tokens, `-1` between itemsets,
// `-2` terminates the line. Sids are assigned 1..n in file order.
QSeqDatabase parse_database(std::istream& in, ProfitTable profits);
QSeqDatabase parse_database(const std::string& text, ProfitTable profits);

Money item_utility(const ProfitTable& profits, const QItem& qi);
Money itemset_utility(const ProfitTable& profits, const QItemset& v);

}  // namespace husp
