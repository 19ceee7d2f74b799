#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obi/corpus.hpp"
#include "obi/lexicon.hpp"
#include "obi/ontology.hpp"
#include "obi/phrase.hpp"

namespace obi {

class InvertedIndex;

/// Input terms (I_1..I_m) with their weights (t_1..t_m).
struct WeightedInput {
    std::vector<std::string> terms;
    std::vector<double> weights;
};

/// (R_1..R_m), aligned with the input terms.
using ResultVector = std::vector<double>;

enum class WeightRule { uniform, idf };

/// Per-position match detail: the result value and which concept produced it.
struct TermMatch {
    double value = 0.0;
    std::optional<std::size_t> concept_index;
};

/// UNIFORM: all t_i = 1. IDF: t_i = min(1, ln(N / df) / ln N) with df floored
/// at 1; collections with N <= 1 give t_i = 1. Throws ConfigError for IDF
/// without an index.
WeightedInput input_weights(const TokenList& phrase, WeightRule rule = WeightRule::uniform,
                            const InvertedIndex* index = nullptr);

/// R_i = t_i * max{ r_j : I_i = C_j }, or 0 when no concept matches. With a
/// lexicon, equality widens to "synonym sets intersect".
ResultVector match_vector(const WeightedInput& input, const ConceptWeights& concepts,
                          const Lexicon* synonyms = nullptr);
ResultVector match_vector(const WeightedInput& input, const Ontology& ontology, const Lexicon* synonyms = nullptr);

/// Same as match_vector, also reporting the first concept attaining the max.
std::vector<TermMatch> match_terms(const WeightedInput& input, const ConceptWeights& concepts,
                                   const Lexicon* synonyms = nullptr);

/// Mean of R; 0 for an empty vector.
double score(const ResultVector& result);

struct RankOptions {
    WeightRule rule = WeightRule::uniform;
    const InvertedIndex* index = nullptr;
    const Lexicon* synonyms = nullptr;
    const StopwordSet* stopwords = nullptr;
};

struct RankedMatch {
    std::string doc_id;
    TokenList phrase;
    double score = 0.0;
    /// (concept, R_i) for phrase terms that matched a concept and occur in
    /// the document.
    std::vector<std::pair<std::string, double>> concepts;
};

/// Scores each document against every phrase variant: the match vector is
/// scaled by the fraction of phrase terms present in the document and the
/// best variant is kept. Sorted by score descending, id ascending; only
/// positive scores, at most `top_k`.
std::vector<RankedMatch> rank_documents(const PhraseSet& phrases, const Corpus& corpus, const Ontology& ontology,
                                        std::size_t top_k, const RankOptions& options = {});

} // namespace obi
