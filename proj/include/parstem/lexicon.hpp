#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "parstem/error.hpp"
#include "parstem/normalize.hpp"

namespace parstem {

namespace detail {

// Shared line reader for the lexicon and gold formats: strips a trailing
// CR, skips blank lines and "#" comments, tracks 1-based line numbers.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        bool blank = true;
        for (char32_t cp : utf8::decode(line)) {
            if (!uni::is_space(cp)) {
                blank = false;
                break;
            }
        }
        if (blank) continue;
        fn(line, lineno);
    }
}

inline NormalizedWord parse_field(std::string_view field, std::size_t lineno) {
    std::u32string scalars = utf8::decode(field);
    std::size_t b = 0, e = scalars.size();
    while (b < e && uni::is_space(scalars[b])) ++b;
    while (e > b && uni::is_space(scalars[e - 1])) --e;
    if (b == e) throw ParseError(ParseError::Kind::EmptyField, lineno, "empty field");
    for (std::size_t i = b; i < e; ++i) {
        if (uni::is_space(scalars[i]))
            throw ParseError(ParseError::Kind::MalformedLine, lineno, "whitespace inside a word");
    }
    if (auto word = try_normalize_word(field)) return *std::move(word);
    throw ParseError(ParseError::Kind::EmptyField, lineno, "word normalizes to nothing");
}

}  // namespace detail

// The irregular-plural lookup table: plural form -> singular stem. Both
// columns are normalized at load so queries never miss on spelling variants.
class MokassarLexicon {
public:
    MokassarLexicon() = default;

    // TSV "PLURAL<TAB>SINGULAR". Duplicate agreeing entries collapse;
    // contradicting ones are an error.
    static MokassarLexicon load(std::istream& in) {
        MokassarLexicon lex;
        detail::for_each_data_line(in, [&](const std::string& line, std::size_t lineno) {
            const auto tab = line.find('\t');
            if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
                throw ParseError(ParseError::Kind::MalformedLine, lineno, "expected PLURAL<TAB>SINGULAR");
            NormalizedWord plural = detail::parse_field(std::string_view(line).substr(0, tab), lineno);
            NormalizedWord singular = detail::parse_field(std::string_view(line).substr(tab + 1), lineno);
            if (plural == singular)
                throw ParseError(ParseError::Kind::MalformedLine, lineno, "plural equals singular: " + plural.str());
            auto [it, inserted] = lex.entries_.try_emplace(std::move(plural), singular);
            if (!inserted && it->second != singular)
                throw ParseError(ParseError::Kind::DuplicateKey, lineno,
                                 "conflicting stems for " + it->first.str());
        });
        return lex;
    }

    static MokassarLexicon from_text(std::string_view text) {
        std::istringstream in{std::string(text)};
        return load(in);
    }

    std::optional<NormalizedWord> find(const NormalizedWord& plural) const {
        auto it = entries_.find(plural);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void save(std::ostream& out) const {
        for (const auto& [plural, singular] : entries_) out << plural.str() << '\t' << singular.str() << '\n';
    }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::map<NormalizedWord, NormalizedWord>& entries() const noexcept { return entries_; }

    friend bool operator==(const MokassarLexicon&, const MokassarLexicon&) = default;

private:
    std::map<NormalizedWord, NormalizedWord> entries_;
};

// The exemption set: words whose plural-looking ending is part of the word
// itself. Membership means "leave this word alone".
class InterveningLexicon {
public:
    InterveningLexicon() = default;

    // One word per line; duplicates collapse.
    static InterveningLexicon load(std::istream& in) {
        InterveningLexicon lex;
        detail::for_each_data_line(in, [&](const std::string& line, std::size_t lineno) {
            lex.words_.insert(detail::parse_field(line, lineno));
        });
        return lex;
    }

    static InterveningLexicon from_text(std::string_view text) {
        std::istringstream in{std::string(text)};
        return load(in);
    }

    bool contains(const NormalizedWord& word) const { return words_.count(word) != 0; }

    void save(std::ostream& out) const {
        for (const auto& word : words_) out << word.str() << '\n';
    }

    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::set<NormalizedWord>& words() const noexcept { return words_; }

    friend bool operator==(const InterveningLexicon&, const InterveningLexicon&) = default;

private:
    std::set<NormalizedWord> words_;
};

struct LexiconPair {
    MokassarLexicon mokassar;
    InterveningLexicon intervening;
};

enum class LookupKind { Intervening, Mokassar, NotFound };

struct LookupOutcome {
    LookupKind kind = LookupKind::NotFound;
    std::optional<NormalizedWord> stem;  // set for Mokassar hits
};

// Exact-match dictionary query; the Intervening verdict wins when a word is
// in both tables.
inline LookupOutcome lookup(const LexiconPair& lexicons, const NormalizedWord& word) {
    if (lexicons.intervening.contains(word)) return {LookupKind::Intervening, std::nullopt};
    if (auto stem = lexicons.mokassar.find(word)) return {LookupKind::Mokassar, std::move(stem)};
    return {LookupKind::NotFound, std::nullopt};
}

// Words claimed by both tables; the CLI reports these at load time.
inline std::vector<NormalizedWord> lexicon_overlap(const LexiconPair& lexicons) {
    std::vector<NormalizedWord> out;
    for (const auto& [plural, singular] : lexicons.mokassar.entries()) {
        if (lexicons.intervening.contains(plural)) out.push_back(plural);
    }
    return out;
}

}  // namespace parstem
