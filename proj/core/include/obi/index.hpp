#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "obi/corpus.hpp"
#include "obi/lexicon.hpp"
#include "obi/ontology.hpp"
#include "obi/phrase.hpp"

namespace obi {

/// doc id -> term frequency
using PostingList = std::map<std::string, std::uint32_t, std::less<>>;

/// First indexing layer: term -> postings.
class InvertedIndex {
public:
    InvertedIndex() = default;
    InvertedIndex(std::map<std::string, PostingList, std::less<>> postings, std::size_t doc_count);

    std::size_t doc_count() const noexcept { return doc_count_; }
    const std::map<std::string, PostingList, std::less<>>& postings() const noexcept { return postings_; }

    /// Empty list for an unseen term.
    const PostingList& postings(std::string_view term) const;
    std::size_t df(std::string_view term) const { return postings(term).size(); }
    std::uint32_t tf(std::string_view term, std::string_view doc_id) const;

    friend bool operator==(const InvertedIndex&, const InvertedIndex&) = default;

private:
    std::map<std::string, PostingList, std::less<>> postings_;
    std::size_t doc_count_ = 0;
};

/// Second indexing layer: index terms contextualized onto ontology concepts.
struct OntologyTreeIndex {
    /// Every ontology concept has an entry, possibly empty.
    std::map<std::string, std::set<std::string>, std::less<>> concept_postings;
    std::map<std::string, std::set<std::string>, std::less<>> term_to_concepts;
    /// Defined for every term of the source inverted index.
    std::map<std::string, double, std::less<>> hub;
    /// Postings of the terms that map to at least one concept.
    std::map<std::string, PostingList, std::less<>> term_postings;

    friend bool operator==(const OntologyTreeIndex&, const OntologyTreeIndex&) = default;
};

struct ScoredDoc {
    std::string doc_id;
    double score = 0.0;
};

enum class QueryMode { all_terms, any_term };

InvertedIndex build_inverted_index(const Corpus& corpus, const StopwordSet& stopwords = default_stopwords());

/// A term maps to concept c when it equals c's name or c's name is within
/// one SYNONYM/HYPERNYM hop in the lexicon.
OntologyTreeIndex build_concept_index(const InvertedIndex& inv, const Ontology& ontology, const Lexicon& lexicon);

/// df(t) / N; 0 for an empty index or an unseen term.
double hub_weight(const InvertedIndex& inv, std::string_view term);

/// 1 - hub_weight: how representative a term is for individual documents.
inline double representative_weight(const InvertedIndex& inv, std::string_view term) {
    return 1.0 - hub_weight(inv, term);
}

/// Boolean keyword retrieval ranked by sum of tf * ln(N / max(df, 1)).
/// Results sorted by score descending, then id ascending.
std::vector<ScoredDoc> query_keyword(const InvertedIndex& inv, const TokenList& terms, QueryMode mode);

/// Documents reachable through the concept (and optionally its descendants),
/// scored by sum of tf * (1 - hub) * r over contributing terms. Throws
/// LookupError for an unknown concept.
std::vector<ScoredDoc> query_concept(const OntologyTreeIndex& oti, const Ontology& ontology, std::string_view concept_name,
                                     bool include_descendants);

// Persistence. Output uses sorted keys and is byte-stable.
std::string inverted_index_to_json(const InvertedIndex& inv);
InvertedIndex inverted_index_from_json(std::string_view text);
std::string concept_index_to_json(const OntologyTreeIndex& oti);
OntologyTreeIndex concept_index_from_json(std::string_view text);

void save_inverted_index(const InvertedIndex& inv, const std::filesystem::path& path);
InvertedIndex load_inverted_index(const std::filesystem::path& path);
void save_concept_index(const OntologyTreeIndex& oti, const std::filesystem::path& path);
OntologyTreeIndex load_concept_index(const std::filesystem::path& path);

} // namespace obi
