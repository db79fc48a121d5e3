#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace husp {

// All utilities are exact fixed-point amounts: 1 currency unit == 10^4 ticks.
// Integer ticks keep every comparison against the threshold exact.
using Money = std::int64_t;

inline constexpr Money kMoneyScale = 10'000;

constexpr Money money_from_units(std::int64_t units) { return units * kMoneyScale; }

// Parses a non-negative decimal with at most four fractional digits
// ("5" -> 50000, "0.01" -> 100). Throws std::invalid_argument otherwise.
Money money_from_string(std::string_view text);

// Renders with trailing fractional zeros trimmed: 1600000 -> "160",
// 441000 -> "44.1", 100 -> "0.01".
std::string money_to_string(Money value);

// An exact decimal ratio, e.g. "0.05" -> 5/100.
struct DecimalRatio {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

// Parses a positive decimal ratio with at most nine fractional digits.
DecimalRatio ratio_from_string(std::string_view text);

// Smallest tick count >= value * num / den. A pattern utility (an integer
// tick count) clears the real threshold iff it clears this ceiling.
Money money_ratio_ceil(Money value, const DecimalRatio& ratio);

}  // namespace husp
