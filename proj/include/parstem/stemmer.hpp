#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parstem/lexicon.hpp"
#include "parstem/normalize.hpp"

namespace parstem {

// The five plural endings that gate the published flow chart.
enum class PluralEnding { Un, In, At, An, Ha };

inline std::string_view to_string(PluralEnding ending) {
    switch (ending) {
        case PluralEnding::Un: return "ون";          // ون
        case PluralEnding::In: return "ین";          // ین
        case PluralEnding::At: return "ات";          // ات
        case PluralEnding::An: return "ان";          // ان
        case PluralEnding::Ha: return "ها";          // ها
    }
    return {};
}

// The 13 strippable suffixes, longest first; equal lengths keep the order
// of the published inventory so matching is deterministic.
class SuffixTable {
public:
    static const SuffixTable& standard() {
        static const SuffixTable table{{
            U"ترین",  // ترین
            U"ها",              // ها
            U"یی",              // یی
            U"تر",              // تر
            U"ان",              // ان
            U"ات",              // ات
            U"ون",              // ون
            U"ین",              // ین
            U"ی",                    // ی
            U"ش",                    // ش
            U"ت",                    // ت
            U"م",                    // م
            U"ً",                    // ً
        }};
        return table;
    }

    struct Entry {
        NormalizedWord word;
        std::u32string scalars;
    };

    std::span<const Entry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    explicit SuffixTable(std::initializer_list<std::u32string_view> ordered) {
        for (auto s : ordered) {
            NormalizedWord word = normalize_word(utf8::encode(s));
            if (word.str() != utf8::encode(s)) throw std::logic_error("suffix table entry not canonical");
            entries_.push_back({std::move(word), std::u32string(s)});
        }
    }
    std::vector<Entry> entries_;
};

struct StemConfig {
    std::size_t min_stem_len = 2;  // scalar values, not bytes
    bool iterate = false;
    std::size_t max_iterations = 3;
};

enum class StemMethod { Intervening, Mokassar, Stripped, Unchanged };

inline std::string_view to_string(StemMethod method) {
    switch (method) {
        case StemMethod::Intervening: return "intervening";
        case StemMethod::Mokassar: return "mokassar";
        case StemMethod::Stripped: return "stripped";
        case StemMethod::Unchanged: return "unchanged";
    }
    return {};
}

struct StemResult {
    NormalizedWord input;  // the normalized form the verdict applies to
    NormalizedWord stem;
    StemMethod method = StemMethod::Unchanged;
    // Removed suffixes, outermost first; nonempty exactly when method is
    // Stripped, and a single element unless iteration is enabled.
    std::vector<NormalizedWord> suffixes;
};

namespace detail {

inline void check_config(const StemConfig& config) {
    if (config.min_stem_len < 1) throw std::invalid_argument("min_stem_len must be >= 1");
    if (config.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
}

inline bool ends_with(std::u32string_view word, std::u32string_view suffix) {
    return word.size() >= suffix.size() && word.substr(word.size() - suffix.size()) == suffix;
}

// One longest-match removal. Returns the scalar count of the new end, or
// nullopt when nothing may be removed.
inline std::optional<std::pair<std::size_t, const SuffixTable::Entry*>> strip_once(
    std::u32string_view word, const SuffixTable& table, std::size_t min_stem_len) {
    for (const auto& entry : table.entries()) {
        if (!ends_with(word, entry.scalars)) continue;
        std::size_t end = word.size() - entry.scalars.size();
        if (end > 0 && word[end - 1] == kZwnj) --end;  // joiner goes with the suffix
        if (end < min_stem_len) return std::nullopt;   // floor: the longest match is final
        if (word[end - 1] == kZwnj) return std::nullopt;
        return std::make_pair(end, &entry);
    }
    return std::nullopt;
}

}  // namespace detail

// The ending check of the published flow: which of the five plural endings
// closes the word. A ZWNJ directly before the ending is ignored; the ending
// must be proper (something has to remain before it).
inline std::optional<PluralEnding> plural_ending(const NormalizedWord& word) {
    static constexpr std::array<std::pair<PluralEnding, std::u32string_view>, 5> kEndings{{
        {PluralEnding::Un, U"ون"},
        {PluralEnding::In, U"ین"},
        {PluralEnding::At, U"ات"},
        {PluralEnding::An, U"ان"},
        {PluralEnding::Ha, U"ها"},
    }};
    const std::u32string scalars = utf8::decode(word.str());
    for (const auto& [ending, suffix] : kEndings) {
        if (!detail::ends_with(scalars, suffix)) continue;
        std::size_t end = scalars.size() - suffix.size();
        if (end > 0 && scalars[end - 1] == kZwnj) --end;
        if (end == 0) return std::nullopt;  // the word is nothing but the ending
        return ending;
    }
    return std::nullopt;
}

// Rule-based affix removal: drop the longest matching suffix (plus a ZWNJ
// joiner sitting in front of it), refusing any removal that would leave the
// stem under config.min_stem_len scalars. With config.iterate the removal
// repeats, at most config.max_iterations times.
inline StemResult strip_suffix(const NormalizedWord& word, const SuffixTable& table, const StemConfig& config) {
    detail::check_config(config);
    std::u32string scalars = utf8::decode(word.str());
    std::vector<NormalizedWord> removed;
    const std::size_t rounds = config.iterate ? config.max_iterations : 1;
    for (std::size_t i = 0; i < rounds; ++i) {
        auto hit = detail::strip_once(scalars, table, config.min_stem_len);
        if (!hit) break;
        scalars.resize(hit->first);
        removed.push_back(hit->second->word);
    }
    if (removed.empty()) return {word, word, StemMethod::Unchanged, {}};
    NormalizedWord stem = normalize_word(utf8::encode(scalars));
    return {word, std::move(stem), StemMethod::Stripped, std::move(removed)};
}

// The full pipeline for one raw token: normalize, consult the dictionaries
// (Intervening outranks Mokassar), and only on a miss fall through to affix
// removal. Lookup runs for every word, not just the five-ending ones; a
// dictionary hit can only be deliberate.
inline StemResult stem(std::string_view raw, const LexiconPair& lexicons, const SuffixTable& table,
                       const StemConfig& config) {
    detail::check_config(config);
    NormalizedWord word = normalize_word(raw);
    LookupOutcome hit = lookup(lexicons, word);
    switch (hit.kind) {
        case LookupKind::Intervening:
            return {word, word, StemMethod::Intervening, {}};
        case LookupKind::Mokassar:
            return {std::move(word), *std::move(hit.stem), StemMethod::Mokassar, {}};
        case LookupKind::NotFound:
            break;
    }
    return strip_suffix(word, table, config);
}

}  // namespace parstem
