#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "obi/corpus.hpp"
#include "obi/index.hpp"
#include "obi/lexicon.hpp"
#include "obi/ontology.hpp"
#include "obi/phrase.hpp"

namespace obi {

/// One query's keyword-versus-concept comparison.
struct BenchRow {
    std::string query;
    std::size_t keyword_count = 0;
    double keyword_seconds = 0.0;
    std::size_t concept_count = 0;
    double concept_seconds = 0.0;
    std::vector<std::string> keyword_docs;
    std::vector<std::string> concept_docs;
    /// Result count of an OR query over the lexically expanded query terms.
    std::size_t expanded_keyword_count = 0;
    /// True when every term mapped by the queried concepts lies in the
    /// expanded keyword set, i.e. the containment check applies.
    bool containment_applies = false;
    /// concept_count <= expanded_keyword_count whenever it applies.
    bool containment_holds = true;
};

struct BenchInputs {
    const Corpus& corpus;
    const Ontology& ontology;
    const Lexicon& lexicon;
    const StopwordSet& stopwords;
};

/// Runs keyword-OR retrieval and concept retrieval (descendants included)
/// for one query. Query tokens that name a concept, or map to one through
/// the concept index, select the concepts.
BenchRow bench_query(const std::string& query, const InvertedIndex& inv, const OntologyTreeIndex& oti,
                     const BenchInputs& in);

std::vector<BenchRow> run_bench(const std::vector<std::string>& queries, const BenchInputs& in);

/// Four-column table: S.No. | Query | Results (keyword / concept) |
/// Duration in seconds (keyword / concept).
std::string render_bench_table(const std::vector<BenchRow>& rows);

/// Precision over the first k results (divided by k even when fewer are
/// returned) and recall over the first k.
double precision_at(const std::vector<std::string>& ranked, const std::vector<std::string>& relevant, std::size_t k);
double recall_at(const std::vector<std::string>& ranked, const std::vector<std::string>& relevant, std::size_t k);

} // namespace obi
