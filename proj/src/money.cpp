#include "husp/money.hpp"

#include <cctype>
#include <stdexcept>

namespace husp {

namespace {

// Splits "12.34" into integer and fraction digit runs; rejects anything else.
void split_decimal(std::string_view text, std::string_view& intPart, std::string_view& fracPart) {
    if (text.empty()) throw std::invalid_argument("empty decimal");
    const auto dot = text.find('.');
    intPart = dot == std::string_view::npos ? text : text.substr(0, dot);
    fracPart = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (intPart.empty() && fracPart.empty()) throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    for (const auto part : {intPart, fracPart})
        for (const char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
}

std::int64_t digits_to_int(std::string_view digits) {
    std::int64_t v = 0;
    for (const char c : digits) {
        if (v > (INT64_MAX - 9) / 10) throw std::invalid_argument("decimal out of range");
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Money money_from_string(std::string_view text) {
    std::string_view intPart, fracPart;
    split_decimal(text, intPart, fracPart);
    if (fracPart.size() > 4)
        throw std::invalid_argument("more than four fractional digits: '" + std::string(text) + "'");
    const std::int64_t whole = digits_to_int(intPart);
    std::int64_t frac = digits_to_int(fracPart);
    for (std::size_t i = fracPart.size(); i < 4; ++i) frac *= 10;
    if (whole > INT64_MAX / kMoneyScale - 1) throw std::invalid_argument("decimal out of range");
    return whole * kMoneyScale + frac;
}

std::string money_to_string(Money value) {
    std::string sign;
    if (value < 0) {
        sign = "-";
        value = -value;
    }
    std::string out = sign + std::to_string(value / kMoneyScale);
    Money frac = value % kMoneyScale;
    if (frac != 0) {
        std::string digits = std::to_string(frac);
        digits.insert(0, 4 - digits.size(), '0');
        while (digits.back() == '0') digits.pop_back();
        out += '.';
        out += digits;
    }
    return out;
}

DecimalRatio ratio_from_string(std::string_view text) {
    std::string_view intPart, fracPart;
    split_decimal(text, intPart, fracPart);
    if (fracPart.size() > 9)
        throw std::invalid_argument("more than nine fractional digits: '" + std::string(text) + "'");
    DecimalRatio r;
    r.den = 1;
    for (std::size_t i = 0; i < fracPart.size(); ++i) r.den *= 10;
    r.num = digits_to_int(intPart) * r.den + digits_to_int(fracPart);
    if (r.num <= 0) throw std::invalid_argument("ratio must be positive: '" + std::string(text) + "'");
    return r;
}

Money money_ratio_ceil(Money value, const DecimalRatio& ratio) {
    using Wide = __int128;
    const Wide prod = static_cast<Wide>(value) * ratio.num;
    Wide q = prod / ratio.den;
    if (prod % ratio.den != 0 && prod > 0) ++q;
    return static_cast<Money>(q);
}

}  // namespace husp
