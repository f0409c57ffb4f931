#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "parstem/error.hpp"
#include "parstem/unicode.hpp"
#include "parstem/utf8.hpp"

namespace parstem {

inline constexpr char32_t kZwnj = U'‌';
inline constexpr char32_t kTatweel = U'ـ';
inline constexpr char32_t kFathatan = U'ً';

namespace detail {

inline bool is_deleted_mark(char32_t cp) {
    return cp == kTatweel || (cp >= U'ٌ' && cp <= U'ْ');
}

inline char32_t map_letter(char32_t cp) {
    switch (cp) {
        case U'ي':  // Arabic yeh
        case U'ى':  // alef maksura
            return U'ی';
        case U'ك':  // Arabic kaf
            return U'ک';
        default:
            return cp;
    }
}

// One composition pass followed by one map/delete pass. Deleting a mark can
// expose a new composable pair, so the caller loops to a fixpoint; the loop
// terminates because every extra pass strictly shrinks the string.
inline bool normalize_pass(std::u32string& s) {
    std::u32string composed;
    composed.reserve(s.size());
    for (char32_t cp : s) {
        if (!composed.empty()) {
            if (char32_t merged = uni::compose(composed.back(), cp)) {
                composed.back() = merged;
                continue;
            }
        }
        composed.push_back(cp);
    }
    std::u32string out;
    out.reserve(composed.size());
    for (std::size_t i = 0; i < composed.size(); ++i) {
        const char32_t cp = composed[i];
        if (is_deleted_mark(cp)) continue;
        if (cp == kFathatan && i + 1 != composed.size()) continue;
        out.push_back(map_letter(cp));
    }
    const bool changed = out != s;
    s = std::move(out);
    return changed;
}

inline std::u32string normalize_scalars(std::u32string s) {
    while (normalize_pass(s)) {
    }
    return s;
}

}  // namespace detail

// A word in canonical orthography: Farsi yeh/keheh only, no tatweel, no
// short-vowel marks except a word-final fathatan, no whitespace, ZWNJ only
// word-internally. Instances come out of normalize_word (or loaders built on
// it), so holding one is proof the invariants hold.
class NormalizedWord {
public:
    const std::string& str() const noexcept { return text_; }
    std::string_view view() const noexcept { return text_; }
    std::size_t scalar_count() const noexcept { return utf8::scalar_count(text_); }

    friend bool operator==(const NormalizedWord&, const NormalizedWord&) = default;
    friend auto operator<=>(const NormalizedWord&, const NormalizedWord&) = default;

    friend std::optional<NormalizedWord> try_normalize_word(std::string_view raw);

private:
    explicit NormalizedWord(std::string text) : text_(std::move(text)) {}
    std::string text_;
};

// Applies the character mapping to every non-whitespace run of `text`,
// leaving the whitespace structure untouched. Total: unknown characters pass
// through, malformed UTF-8 becomes U+FFFD.
inline std::string normalize_text(std::string_view text) {
    const std::u32string scalars = utf8::decode(text);
    std::string out;
    out.reserve(text.size());
    std::u32string segment;
    auto flush = [&] {
        if (segment.empty()) return;
        out += utf8::encode(detail::normalize_scalars(std::move(segment)));
        segment.clear();
    };
    for (char32_t cp : scalars) {
        if (uni::is_space(cp)) {
            flush();
            utf8::append(out, cp);
        } else {
            segment.push_back(cp);
        }
    }
    flush();
    return out;
}

// Canonicalizes one token. Surrounding whitespace is trimmed; leading and
// trailing ZWNJ are dropped so the joiner is word-internal only. Returns
// nullopt when nothing remains (empty input, whitespace-only input, a token
// of nothing but deleted marks) or when the token has internal whitespace,
// which the token contract forbids.
inline std::optional<NormalizedWord> try_normalize_word(std::string_view raw) {
    std::u32string scalars = utf8::decode(raw);
    std::size_t b = 0, e = scalars.size();
    while (b < e && uni::is_space(scalars[b])) ++b;
    while (e > b && uni::is_space(scalars[e - 1])) --e;
    if (b == e) return std::nullopt;
    for (std::size_t i = b; i < e; ++i) {
        if (uni::is_space(scalars[i])) return std::nullopt;
    }
    std::u32string word = detail::normalize_scalars(scalars.substr(b, e - b));
    std::size_t wb = 0, we = word.size();
    while (wb < we && word[wb] == kZwnj) ++wb;
    while (we > wb && word[we - 1] == kZwnj) --we;
    if (wb == we) return std::nullopt;
    return NormalizedWord(utf8::encode(std::u32string_view(word).substr(wb, we - wb)));
}

// Throwing form of try_normalize_word for callers that require a token.
inline NormalizedWord normalize_word(std::string_view raw) {
    if (auto word = try_normalize_word(raw)) return *std::move(word);
    const std::u32string scalars = utf8::decode(raw);
    std::size_t b = 0, e = scalars.size();
    while (b < e && uni::is_space(scalars[b])) ++b;
    while (e > b && uni::is_space(scalars[e - 1])) --e;
    if (b == e) throw EmptyTokenError("empty or whitespace-only token");
    for (std::size_t i = b; i < e; ++i) {
        if (uni::is_space(scalars[i])) throw EmptyTokenError("token contains internal whitespace");
    }
    throw EmptyTokenError("token normalizes to nothing");
}

}  // namespace parstem

template <>
struct std::hash<parstem::NormalizedWord> {
    std::size_t operator()(const parstem::NormalizedWord& w) const noexcept {
        return std::hash<std::string>{}(w.str());
    }
};
