#include "obi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "obi/error.hpp"

namespace obi {
namespace {

template <typename F>
auto timed(double& seconds, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<std::string> ids(const std::vector<ScoredDoc>& docs) {
    std::vector<std::string> out;
    out.reserve(docs.size());
    for (const auto& d : docs)
        out.push_back(d.doc_id);
    return out;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

} // namespace

BenchRow bench_query(const std::string& query, const InvertedIndex& inv, const OntologyTreeIndex& oti,
                     const BenchInputs& in) {
    BenchRow row;
    row.query = query;
    const auto tokens = tokenize(query, in.stopwords);

    row.keyword_docs = ids(timed(row.keyword_seconds, [&] { return query_keyword(inv, tokens, QueryMode::any_term); }));
    row.keyword_count = row.keyword_docs.size();

    std::set<std::string> concepts;
    for (const auto& t : tokens) {
        if (in.ontology.find(t))
            concepts.insert(t);
        else if (auto it = oti.term_to_concepts.find(t); it != oti.term_to_concepts.end())
            concepts.insert(it->second.begin(), it->second.end());
    }

    std::vector<ScoredDoc> concept_hits;
    timed(row.concept_seconds, [&] {
        std::map<std::string, double> merged;
        for (const auto& c : concepts)
            for (const auto& d : query_concept(oti, in.ontology, c, true))
                merged[d.doc_id] += d.score;
        for (const auto& [doc, s] : merged)
            concept_hits.push_back({doc, s});
        std::sort(concept_hits.begin(), concept_hits.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
            return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
        });
        return 0;
    });
    row.concept_docs = ids(concept_hits);
    row.concept_count = row.concept_docs.size();

    // Containment: the concept side may only retrieve what an OR query over
    // the expanded keyword set would, whenever every mapped term is in it.
    const RelationSet relations{LexRelation::synonym, LexRelation::hypernym, LexRelation::hyponym};
    std::set<std::string> expanded;
    for (const auto& t : tokens) {
        auto e = expand(in.lexicon, t, relations, 1);
        expanded.insert(e.begin(), e.end());
    }
    for (const auto& c : concepts)
        for (const auto& d : descendants(in.ontology, c))
            expanded.insert(d);
    row.expanded_keyword_count =
        query_keyword(inv, TokenList(expanded.begin(), expanded.end()), QueryMode::any_term).size();

    std::set<std::string> candidate_concepts;
    for (const auto& c : concepts)
        for (const auto& d : descendants(in.ontology, c))
            candidate_concepts.insert(d);
    bool subset = true;
    for (const auto& [term, mapped] : oti.term_to_concepts) {
        const bool contributes = std::any_of(mapped.begin(), mapped.end(),
                                             [&](const auto& c) { return candidate_concepts.contains(c); });
        if (contributes && !expanded.contains(term))
            subset = false;
    }
    row.containment_applies = subset;
    row.containment_holds = !subset || row.concept_count <= row.expanded_keyword_count;
    return row;
}

std::vector<BenchRow> run_bench(const std::vector<std::string>& queries, const BenchInputs& in) {
    const auto inv = build_inverted_index(in.corpus, in.stopwords);
    const auto oti = build_concept_index(inv, in.ontology, in.lexicon);
    std::vector<BenchRow> rows;
    rows.reserve(queries.size());
    for (const auto& q : queries)
        rows.push_back(bench_query(q, inv, oti, in));
    return rows;
}

std::string render_bench_table(const std::vector<BenchRow>& rows) {
    const std::vector<std::string> header = {"S.No.", "Query searching", "Results (inverted index / ontology tree index)",
                                             "Duration (Seconds)"};
    std::vector<std::vector<std::string>> cells{header};
    char buf[64];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        std::snprintf(buf, sizeof buf, "%.6f / %.6f", r.keyword_seconds, r.concept_seconds);
        cells.push_back({std::to_string(i + 1), r.query,
                         std::to_string(r.keyword_count) + " / " + std::to_string(r.concept_count), buf});
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out << " | ";
            out << (c + 1 == row.size() ? row[c] : pad(row[c], width[c]));
        }
        out << "\n";
    }
    return out.str();
}

double precision_at(const std::vector<std::string>& ranked, const std::vector<std::string>& relevant, std::size_t k) {
    if (k == 0)
        throw DomainError("precision cutoff must be positive");
    const std::set<std::string> rel(relevant.begin(), relevant.end());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ranked.size() && i < k; ++i)
        hits += rel.contains(ranked[i]);
    return static_cast<double>(hits) / static_cast<double>(k);
}

double recall_at(const std::vector<std::string>& ranked, const std::vector<std::string>& relevant, std::size_t k) {
    const std::set<std::string> rel(relevant.begin(), relevant.end());
    if (rel.empty())
        return 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ranked.size() && i < k; ++i)
        hits += rel.contains(ranked[i]);
    return static_cast<double>(hits) / static_cast<double>(rel.size());
}

} // namespace obi
