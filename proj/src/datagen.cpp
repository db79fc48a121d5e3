#include "husp/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "husp/rng.hpp"

namespace husp {

namespace {

void validate(const GenParams& p) {
    if (p.numSequences < 0) throw std::invalid_argument("numSequences must be >= 0");
    if (p.numItems < 1) throw std::invalid_argument("numItems must be >= 1");
    if (p.avgItemsetsPerSeq < 1 || p.avgItemsPerItemset < 1)
        throw std::invalid_argument("C and T must be >= 1");
    if (p.avgItemsPerItemset > p.numItems)
        throw std::invalid_argument("T cannot exceed the number of distinct items");
    if (p.maxLen < 1) throw std::invalid_argument("maxLen must be >= 1");
    if (p.quantityLow < 1 || p.quantityLow > p.quantityHigh)
        throw std::invalid_argument("need 1 <= quantityLow <= quantityHigh");
    if (p.profitLow <= 0 || p.profitLow > p.profitHigh)
        throw std::invalid_argument("need 0 < profitLow <= profitHigh");
}

// Knuth's product-of-uniforms sampler; fine for the small means used here.
std::int64_t poisson(SplitMix64& rng, double mean) {
    if (mean <= 0) return 0;
    const double limit = std::exp(-mean);
    double prod = 1.0;
    std::int64_t k = -1;
    do {
        ++k;
        prod *= rng.next_double();
    } while (prod > limit);
    return k;
}

double standard_normal(SplitMix64& rng) {
    // Box-Muller; u is bumped away from zero to keep the log finite.
    const double u = std::max(rng.next_double(), 0x1.0p-60);
    const double v = rng.next_double();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

// k distinct items out of 1..n, ascending: a partial Fisher-Yates draw.
std::vector<std::int32_t> sample_items(SplitMix64& rng, std::int32_t n, std::int32_t k,
                                       std::vector<std::int32_t>& pool) {
    std::vector<std::int32_t> picked;
    picked.reserve(static_cast<std::size_t>(k));
    for (std::int32_t j = 0; j < k; ++j) {
        const auto idx = j + static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n - j)));
        std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(idx)]);
        picked.push_back(pool[static_cast<std::size_t>(j)]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace

GeneratedData generate(const GenParams& p) {
    validate(p);
    SplitMix64 rng(p.rngSeed);

    std::ostringstream profits;
    for (std::int32_t item = 1; item <= p.numItems; ++item) {
        const double draw = std::exp(p.logNormalMu + p.logNormalSigma * standard_normal(rng));
        Money profit = static_cast<Money>(std::llround(draw * static_cast<double>(kMoneyScale)));
        profit = std::clamp(profit, p.profitLow, p.profitHigh);
        profits << item << ' ' << money_to_string(profit) << '\n';
    }

    std::vector<std::int32_t> pool(static_cast<std::size_t>(p.numItems));
    for (std::int32_t i = 0; i < p.numItems; ++i) pool[static_cast<std::size_t>(i)] = i + 1;

    std::ostringstream dbText;
    for (std::int64_t s = 0; s < p.numSequences; ++s) {
        const std::int64_t itemsetTarget = 1 + poisson(rng, p.avgItemsetsPerSeq - 1.0);
        std::int32_t itemsLeft = p.maxLen;
        bool first = true;
        for (std::int64_t v = 0; v < itemsetTarget && itemsLeft > 0; ++v) {
            auto size = static_cast<std::int32_t>(1 + poisson(rng, p.avgItemsPerItemset - 1.0));
            size = std::min({size, p.numItems, itemsLeft});
            const auto items = sample_items(rng, p.numItems, size, pool);
            if (!first) dbText << "-1 ";
            for (const auto item : items)
                dbText << item << ':' << rng.range(p.quantityLow, p.quantityHigh) << ' ';
            first = false;
            itemsLeft -= size;
        }
        dbText << "-2\n";
    }
    return GeneratedData{dbText.str(), profits.str()};
}

}  // namespace husp
