#include "obi/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "json_util.hpp"
#include "obi/error.hpp"
#include "obi/index.hpp"

namespace obi {

WeightedInput input_weights(const TokenList& phrase, WeightRule rule, const InvertedIndex* index) {
    WeightedInput in{phrase, std::vector<double>(phrase.size(), 1.0)};
    if (rule == WeightRule::uniform)
        return in;
    if (index == nullptr)
        throw ConfigError("IDF input weights need an inverted index");
    const auto n = static_cast<double>(index->doc_count());
    if (n <= 1.0)
        return in;
    for (std::size_t i = 0; i < phrase.size(); ++i) {
        const auto df = std::max<double>(1.0, static_cast<double>(index->df(phrase[i])));
        in.weights[i] = std::min(1.0, std::log(n / df) / std::log(n));
    }
    return in;
}

std::vector<TermMatch> match_terms(const WeightedInput& input, const ConceptWeights& concepts,
                                   const Lexicon* synonyms) {
    const RelationSet syn{LexRelation::synonym};
    std::vector<std::string> concept_keys;
    std::vector<std::set<std::string>> concept_syns;
    concept_keys.reserve(concepts.names.size());
    for (const auto& name : concepts.names) {
        concept_keys.push_back(detail::to_lower(name));
        if (synonyms)
            concept_syns.push_back(expand(*synonyms, concept_keys.back(), syn, 1));
    }

    std::vector<TermMatch> out(input.terms.size());
    for (std::size_t i = 0; i < input.terms.size(); ++i) {
        const auto key = detail::to_lower(input.terms[i]);
        std::set<std::string> term_syns;
        if (synonyms)
            term_syns = expand(*synonyms, key, syn, 1);

        std::optional<std::size_t> best;
        for (std::size_t j = 0; j < concept_keys.size(); ++j) {
            bool equal = key == concept_keys[j];
            if (!equal && synonyms) {
                const auto& cs = concept_syns[j];
                equal = std::any_of(term_syns.begin(), term_syns.end(), [&](const auto& s) { return cs.contains(s); });
            }
            if (equal && (!best || concepts.weights[j] > concepts.weights[*best]))
                best = j;
        }
        if (best)
            out[i] = {input.weights[i] * concepts.weights[*best], best};
    }
    return out;
}

ResultVector match_vector(const WeightedInput& input, const ConceptWeights& concepts, const Lexicon* synonyms) {
    ResultVector r;
    r.reserve(input.terms.size());
    for (const auto& m : match_terms(input, concepts, synonyms))
        r.push_back(m.value);
    return r;
}

ResultVector match_vector(const WeightedInput& input, const Ontology& ontology, const Lexicon* synonyms) {
    return match_vector(input, concepts_weights(ontology), synonyms);
}

double score(const ResultVector& result) {
    if (result.empty())
        return 0.0;
    double sum = 0.0;
    for (auto r : result)
        sum += r;
    return sum / static_cast<double>(result.size());
}

std::vector<RankedMatch> rank_documents(const PhraseSet& phrases, const Corpus& corpus, const Ontology& ontology,
                                        std::size_t top_k, const RankOptions& options) {
    const auto cw = concepts_weights(ontology);
    const auto& stopwords = options.stopwords ? *options.stopwords : default_stopwords();

    struct Prepared {
        const TokenList* phrase;
        std::vector<TermMatch> matches;
    };
    std::vector<Prepared> prepared;
    prepared.reserve(phrases.phrases.size());
    for (const auto& p : phrases.phrases)
        prepared.push_back({&p, match_terms(input_weights(p, options.rule, options.index), cw, options.synonyms)});

    std::vector<RankedMatch> ranked;
    for (const auto& doc : corpus.documents()) {
        const auto tokens = tokenize(doc.text(), stopwords);
        const std::set<std::string> present(tokens.begin(), tokens.end());

        std::optional<RankedMatch> best;
        for (const auto& [phrase, matches] : prepared) {
            if (phrase->empty())
                continue;
            std::size_t hits = 0;
            double sum = 0.0;
            std::vector<std::pair<std::string, double>> concepts;
            for (std::size_t i = 0; i < phrase->size(); ++i) {
                sum += matches[i].value;
                if (!present.contains((*phrase)[i]))
                    continue;
                ++hits;
                if (!matches[i].concept_index || matches[i].value <= 0.0)
                    continue;
                const auto& name = cw.names[*matches[i].concept_index];
                auto it = std::find_if(concepts.begin(), concepts.end(), [&](const auto& c) { return c.first == name; });
                if (it == concepts.end())
                    concepts.emplace_back(name, matches[i].value);
                else
                    it->second = std::max(it->second, matches[i].value);
            }
            const auto m = static_cast<double>(phrase->size());
            const double s = (sum / m) * (static_cast<double>(hits) / m);
            if (s > 0.0 && (!best || s > best->score))
                best = RankedMatch{doc.id, *phrase, s, std::move(concepts)};
        }
        if (best)
            ranked.push_back(std::move(*best));
    }

    std::sort(ranked.begin(), ranked.end(), [](const RankedMatch& a, const RankedMatch& b) {
        return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
    });
    if (ranked.size() > top_k)
        ranked.resize(top_k);
    return ranked;
}

} // namespace obi
