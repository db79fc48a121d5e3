#pragma once

#include <cstdint>
#include <vector>

#include "husp/pattern.hpp"

namespace husp {

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultOracleNodeCap = 10'000'000;

struct OracleHUSP {
    Pattern pattern;
    Money utility = 0;

    bool operator==(const OracleHUSP&) const = default;
};

// Every pattern of length <= maxLen contained in at least one transaction,
// each exactly once, in canonical order. Containment is checked with the
// definitional match relation, independent of the projection machinery.
// Throws BudgetError once more than nodeCap patterns have been expanded.
std::vector<Pattern> enumerate_patterns(const QSeqDatabase& db, std::int32_t maxLen,
                                        std::int64_t nodeCap = kDefaultOracleNodeCap);

// Exact HUSP set by exhaustive enumeration and naive utility evaluation;
// maxLen defaults to the longest transaction. Results in canonical order.
std::vector<OracleHUSP> oracle_mine(const QSeqDatabase& db, Money minUtil,
                                    std::int32_t maxLen = 0,
                                    std::int64_t nodeCap = kDefaultOracleNodeCap);

}  // namespace husp
