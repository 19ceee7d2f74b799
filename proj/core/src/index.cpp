#include "obi/index.hpp"

#include <algorithm>
#include <cmath>

#include "json_util.hpp"
#include "obi/error.hpp"

namespace obi {
namespace {

void sort_scored(std::vector<ScoredDoc>& docs) {
    std::sort(docs.begin(), docs.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
        return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
    });
}

detail::json postings_json(const std::map<std::string, PostingList, std::less<>>& postings) {
    auto j = detail::json::object();
    for (const auto& [term, list] : postings) {
        auto pl = detail::json::object();
        for (const auto& [doc, tf] : list)
            pl[doc] = tf;
        j[term] = std::move(pl);
    }
    return j;
}

std::map<std::string, PostingList, std::less<>> postings_from_json(const detail::json& j) {
    std::map<std::string, PostingList, std::less<>> out;
    for (const auto& [term, list] : j.items()) {
        auto& pl = out[term];
        for (const auto& [doc, tf] : list.items()) {
            const auto n = tf.get<std::uint32_t>();
            if (n == 0)
                throw ParseError("zero term frequency for \"" + term + "\" in \"" + doc + "\"");
            pl.emplace(doc, n);
        }
    }
    return out;
}

detail::json string_sets_json(const std::map<std::string, std::set<std::string>, std::less<>>& m) {
    auto j = detail::json::object();
    for (const auto& [k, v] : m)
        j[k] = detail::json(std::vector<std::string>(v.begin(), v.end()));
    return j;
}

std::map<std::string, std::set<std::string>, std::less<>> string_sets_from_json(const detail::json& j) {
    std::map<std::string, std::set<std::string>, std::less<>> out;
    for (const auto& [k, v] : j.items()) {
        auto& s = out[k];
        for (const auto& x : v)
            s.insert(x.get<std::string>());
    }
    return out;
}

detail::json parse_json(std::string_view text, const char* what) {
    try {
        return detail::json::parse(text);
    } catch (const detail::json::parse_error& e) {
        throw ParseError(std::string("invalid ") + what + " JSON: " + e.what());
    }
}

} // namespace

InvertedIndex::InvertedIndex(std::map<std::string, PostingList, std::less<>> postings, std::size_t doc_count)
    : postings_(std::move(postings)), doc_count_(doc_count) {}

const PostingList& InvertedIndex::postings(std::string_view term) const {
    static const PostingList none;
    auto it = postings_.find(term);
    return it == postings_.end() ? none : it->second;
}

std::uint32_t InvertedIndex::tf(std::string_view term, std::string_view doc_id) const {
    const auto& pl = postings(term);
    auto it = pl.find(doc_id);
    return it == pl.end() ? 0 : it->second;
}

InvertedIndex build_inverted_index(const Corpus& corpus, const StopwordSet& stopwords) {
    std::map<std::string, PostingList, std::less<>> postings;
    for (const auto& doc : corpus.documents())
        for (auto& term : tokenize(doc.text(), stopwords))
            ++postings[std::move(term)][doc.id];
    return InvertedIndex(std::move(postings), corpus.size());
}

double hub_weight(const InvertedIndex& inv, std::string_view term) {
    if (inv.doc_count() == 0)
        return 0.0;
    return static_cast<double>(inv.df(term)) / static_cast<double>(inv.doc_count());
}

OntologyTreeIndex build_concept_index(const InvertedIndex& inv, const Ontology& ontology, const Lexicon& lexicon) {
    const RelationSet relations{LexRelation::synonym, LexRelation::hypernym};
    OntologyTreeIndex oti;
    for (const auto& c : ontology.concepts())
        oti.concept_postings[c.name];

    for (const auto& [term, postings] : inv.postings()) {
        oti.hub[term] = hub_weight(inv, term);
        for (const auto& candidate : expand(lexicon, term, relations, 1)) {
            if (!ontology.find(candidate))
                continue;
            oti.term_to_concepts[term].insert(candidate);
            auto& docs = oti.concept_postings[candidate];
            for (const auto& [doc, tf] : postings)
                docs.insert(doc);
        }
        if (oti.term_to_concepts.contains(term))
            oti.term_postings[term] = postings;
    }
    return oti;
}

std::vector<ScoredDoc> query_keyword(const InvertedIndex& inv, const TokenList& terms, QueryMode mode) {
    const std::set<std::string> unique(terms.begin(), terms.end());
    if (unique.empty())
        return {};

    std::map<std::string, std::size_t> hits;
    std::map<std::string, double> scores;
    const auto n = static_cast<double>(inv.doc_count());
    for (const auto& term : unique) {
        const auto& pl = inv.postings(term);
        const auto idf = pl.empty() ? 0.0 : std::log(n / static_cast<double>(pl.size()));
        for (const auto& [doc, tf] : pl) {
            ++hits[doc];
            scores[doc] += tf * idf;
        }
    }

    std::vector<ScoredDoc> out;
    for (const auto& [doc, count] : hits)
        if (mode == QueryMode::any_term || count == unique.size())
            out.push_back({doc, scores[doc]});
    sort_scored(out);
    return out;
}

std::vector<ScoredDoc> query_concept(const OntologyTreeIndex& oti, const Ontology& ontology, std::string_view concept_name,
                                     bool include_descendants) {
    const auto& root = ontology.at(concept_name);
    const auto candidates = include_descendants ? descendants(ontology, root.name) : std::set<std::string>{root.name};

    std::map<std::string, double> scores;
    for (const auto& c : candidates) {
        auto cp = oti.concept_postings.find(c);
        if (cp == oti.concept_postings.end())
            continue;
        for (const auto& doc : cp->second)
            scores.try_emplace(doc, 0.0);
    }
    for (const auto& [term, concepts] : oti.term_to_concepts) {
        const auto hub_it = oti.hub.find(term);
        const auto hub = hub_it == oti.hub.end() ? 0.0 : hub_it->second;
        const auto pl_it = oti.term_postings.find(term);
        if (pl_it == oti.term_postings.end())
            continue;
        for (const auto& c : concepts) {
            if (!candidates.contains(c))
                continue;
            const auto r = ontology.at(c).weight;
            for (const auto& [doc, tf] : pl_it->second)
                scores[doc] += tf * (1.0 - hub) * r;
        }
    }

    std::vector<ScoredDoc> out;
    out.reserve(scores.size());
    for (const auto& [doc, s] : scores)
        out.push_back({doc, s});
    sort_scored(out);
    return out;
}

std::string inverted_index_to_json(const InvertedIndex& inv) {
    detail::json j;
    j["doc_count"] = inv.doc_count();
    j["postings"] = postings_json(inv.postings());
    return j.dump(2) + "\n";
}

InvertedIndex inverted_index_from_json(std::string_view text) {
    const auto j = parse_json(text, "inverted index");
    try {
        return InvertedIndex(postings_from_json(j.at("postings")), j.at("doc_count").get<std::size_t>());
    } catch (const detail::json::exception& e) {
        throw ParseError(std::string("malformed inverted index: ") + e.what());
    }
}

std::string concept_index_to_json(const OntologyTreeIndex& oti) {
    detail::json j;
    j["concept_postings"] = string_sets_json(oti.concept_postings);
    j["term_to_concepts"] = string_sets_json(oti.term_to_concepts);
    auto hub = detail::json::object();
    for (const auto& [t, h] : oti.hub)
        hub[t] = h;
    j["hub"] = std::move(hub);
    j["term_postings"] = postings_json(oti.term_postings);
    return j.dump(2) + "\n";
}

OntologyTreeIndex concept_index_from_json(std::string_view text) {
    const auto j = parse_json(text, "concept index");
    try {
        OntologyTreeIndex oti;
        oti.concept_postings = string_sets_from_json(j.at("concept_postings"));
        oti.term_to_concepts = string_sets_from_json(j.at("term_to_concepts"));
        for (const auto& [t, h] : j.at("hub").items())
            oti.hub[t] = h.get<double>();
        oti.term_postings = postings_from_json(j.at("term_postings"));
        return oti;
    } catch (const detail::json::exception& e) {
        throw ParseError(std::string("malformed concept index: ") + e.what());
    }
}

void save_inverted_index(const InvertedIndex& inv, const std::filesystem::path& path) {
    detail::write_file_atomic(path, inverted_index_to_json(inv));
}

InvertedIndex load_inverted_index(const std::filesystem::path& path) {
    return inverted_index_from_json(detail::read_file(path));
}

void save_concept_index(const OntologyTreeIndex& oti, const std::filesystem::path& path) {
    detail::write_file_atomic(path, concept_index_to_json(oti));
}

OntologyTreeIndex load_concept_index(const std::filesystem::path& path) {
    return concept_index_from_json(detail::read_file(path));
}

} // namespace obi
