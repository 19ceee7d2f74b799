#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "obi/lexicon.hpp"

namespace obi {

using TokenList = std::vector<std::string>;
using StopwordSet = std::set<std::string, std::less<>>;

/// Generated phrase variants. `phrases.front()` is always the origin.
struct PhraseSet {
    TokenList origin;
    std::vector<TokenList> phrases;
};

/// The stopword list shipped with the project (identical to
/// data/stopwords.txt).
const StopwordSet& default_stopwords();

/// One lowercase word per line, `#` comments and blank lines ignored.
StopwordSet load_stopwords(const std::filesystem::path& path);

/// Lowercases and strips a single trailing 's' from words of length >= 4
/// unless the word ends in "ss".
std::string normalize_token(std::string_view word);

/// Splits on runs of non-alphanumeric ASCII (bytes >= 0x80 are kept as word
/// characters), normalizes each word and drops stopwords. Order and
/// duplicates are preserved.
TokenList tokenize(std::string_view text, const StopwordSet& stopwords = default_stopwords());

/// Cartesian product of per-token lexical alternatives, truncated at `cap`.
/// The origin comes first; the remaining variants follow in odometer order
/// (first token most significant, alternatives ascending). Throws
/// DomainError when cap or depth is 0.
PhraseSet generate_phrases(const TokenList& tokens, const Lexicon& lexicon, const RelationSet& relations,
                           std::size_t depth, std::size_t cap);

} // namespace obi
