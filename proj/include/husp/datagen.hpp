#pragma once

#include <cstdint>
#include <string>

#include "husp/money.hpp"

namespace husp {

// Synthetic database parameters. Itemset counts and sizes are drawn from
// shifted Poisson distributions so their means land on C and T; quantities
// are uniform integers; profits are log-normal, clipped to the profit range.
struct GenParams {
    std::int64_t numSequences = 1000;    // D
    std::int32_t numItems = 100;         // N
    double avgItemsetsPerSeq = 8.0;      // C
    double avgItemsPerItemset = 4.0;     // T
    std::int32_t maxLen = 40;            // cap on items per sequence
    std::int64_t quantityLow = 1;
    std::int64_t quantityHigh = 5;
    Money profitLow = 100;               // 0.01
    Money profitHigh = 100'000;          // 10.00
    double logNormalMu = 0.0;
    double logNormalSigma = 1.0;
    std::uint64_t rngSeed = 1;
};

struct GeneratedData {
    std::string databaseText;
    std::string profitText;
};

// Deterministic for a fixed parameter set and seed. Throws
// std::invalid_argument on impossible parameter combinations.
GeneratedData generate(const GenParams& params);

}  // namespace husp
