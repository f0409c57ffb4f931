#pragma once

#include <algorithm>
#include <iterator>
#include <span>

#include "parstem/detail/unicode_tables.hpp"

namespace parstem::uni {

namespace detail {

inline bool in_ranges(std::span<const parstem::detail::CodepointRange> ranges, char32_t cp) {
    auto it = std::upper_bound(ranges.begin(), ranges.end(), cp,
                               [](char32_t v, const parstem::detail::CodepointRange& r) { return v < r.lo; });
    return it != ranges.begin() && cp <= std::prev(it)->hi;
}

}  // namespace detail

inline bool is_space(char32_t cp) {
    return detail::in_ranges(parstem::detail::kWhiteSpaceRanges, cp);
}

// Unicode categories P and S, the tokenizer's non-space separators.
inline bool is_punct_or_symbol(char32_t cp) {
    return detail::in_ranges(parstem::detail::kPunctOrSymbolRanges, cp);
}

// Unicode category Nd.
inline bool is_decimal_digit(char32_t cp) {
    return detail::in_ranges(parstem::detail::kDecimalDigitRanges, cp);
}

// Canonical base+mark compositions of the Arabic block. The normalizer only
// needs composition to be deterministic over Perso-Arabic text; scripts
// outside this block pass through untouched.
inline char32_t compose(char32_t base, char32_t mark) {
    switch (mark) {
        case U'ٓ':
            return base == U'ا' ? U'آ' : 0;
        case U'ٔ':
            switch (base) {
                case U'ا': return U'أ';
                case U'و': return U'ؤ';
                case U'ي': return U'ئ';
                case U'ە': return U'ۀ';
                case U'ہ': return U'ۂ';
                case U'ے': return U'ۃ';
                default: return 0;
            }
        case U'ٕ':
            return base == U'ا' ? U'إ' : 0;
        default:
            return 0;
    }
}

}  // namespace parstem::uni
