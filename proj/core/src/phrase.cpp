#include "obi/phrase.hpp"

#include <algorithm>
#include <vector>

#include "json_util.hpp"
#include "obi/error.hpp"

namespace obi {
namespace {

bool is_word_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

// Odometer step with the last position varying fastest; false once every
// combination has been produced.
bool advance(std::vector<std::size_t>& odometer, const std::vector<std::vector<std::string>>& alternatives) {
    for (std::size_t k = odometer.size(); k-- > 0;) {
        if (++odometer[k] < alternatives[k].size())
            return true;
        odometer[k] = 0;
    }
    return false;
}

} // namespace

const StopwordSet& default_stopwords() {
    // Keep in sync with data/stopwords.txt.
    static const StopwordSet words = {
        "a",     "about", "above", "after", "all",   "also",  "am",    "an",    "and",   "any",   "are",
        "as",    "at",    "available",      "be",    "been",  "before", "being", "between", "both", "but",
        "by",    "can",   "could", "did",   "do",    "does",  "doing", "during", "each",  "few",   "for",
        "from",  "further", "had", "has",   "have",  "having", "he",   "her",   "here",  "hers",  "him",
        "his",   "how",   "i",     "if",    "in",    "into",  "is",    "it",    "its",   "itself", "just",
        "me",    "more",  "most",  "my",    "no",    "nor",   "not",   "now",   "of",    "off",   "on",
        "once",  "only",  "or",    "other", "our",   "ours",  "out",   "over",  "own",   "same",  "she",
        "should", "so",   "some",  "such",  "than",  "that",  "the",   "their", "theirs", "them", "then",
        "there", "these", "they",  "this",  "those", "through", "to",  "too",   "under", "until", "up",
        "very",  "was",   "we",    "were",  "what",  "when",  "where", "which", "while", "who",   "whom",
        "why",   "will",  "with",  "would", "you",   "your",  "yours",
    };
    return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
    StopwordSet words;
    const auto content = detail::read_file(path);
    for (auto line : detail::split_lines(content)) {
        auto w = detail::trim(line);
        if (w.empty() || w.front() == '#')
            continue;
        words.insert(detail::to_lower(w));
    }
    return words;
}

std::string normalize_token(std::string_view word) {
    auto t = detail::to_lower(word);
    if (t.size() >= 4 && t.back() == 's' && t[t.size() - 2] != 's')
        t.pop_back();
    return t;
}

TokenList tokenize(std::string_view text, const StopwordSet& stopwords) {
    TokenList tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && !is_word_byte(static_cast<unsigned char>(text[i])))
            ++i;
        const auto start = i;
        while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start)
            break;
        const auto raw = text.substr(start, i - start);
        if (stopwords.contains(detail::to_lower(raw)))
            continue;
        auto token = normalize_token(raw);
        if (stopwords.contains(token))
            continue;
        tokens.push_back(std::move(token));
    }
    return tokens;
}

PhraseSet generate_phrases(const TokenList& tokens, const Lexicon& lexicon, const RelationSet& relations,
                           std::size_t depth, std::size_t cap) {
    if (cap < 1)
        throw DomainError("phrase cap must be at least 1");
    std::vector<std::vector<std::string>> alternatives;
    alternatives.reserve(tokens.size());
    for (const auto& t : tokens) {
        auto alts = expand(lexicon, t, relations, depth);
        // expand lowercases; keep the token as given so the origin is exact.
        alts.erase(detail::to_lower(t));
        std::vector<std::string> ordered(alts.begin(), alts.end());
        ordered.insert(std::lower_bound(ordered.begin(), ordered.end(), t), t);
        alternatives.push_back(std::move(ordered));
    }

    PhraseSet out{tokens, {tokens}};
    std::vector<std::size_t> odometer(tokens.size(), 0);
    while (out.phrases.size() < cap) {
        TokenList phrase;
        phrase.reserve(tokens.size());
        for (std::size_t k = 0; k < tokens.size(); ++k)
            phrase.push_back(alternatives[k][odometer[k]]);
        if (phrase != tokens)
            out.phrases.push_back(std::move(phrase));

        if (!advance(odometer, alternatives))
            break;
    }
    return out;
}

} // namespace obi
