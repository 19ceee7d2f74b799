#pragma once

// Random small collections for the two-step index, and a reference
// computation of concept postings straight from the raw lexicon rows and the
// document text. Vocabulary words ("w00".."w29") pass through the tokenizer
// unchanged, so documents can be split on spaces here.

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "obi/corpus.hpp"
#include "obi/lexicon.hpp"
#include "obi/ontology.hpp"

namespace obi::oracle {

struct LexRow {
    std::string from;
    LexRelation rel;
    std::string to;
};

struct RandomCollection {
    Corpus corpus;
    std::vector<LexRow> rows;
    Lexicon lexicon;
    Ontology ontology;
};

inline std::string vocab_word(int i) {
    std::ostringstream s;
    s << 'w' << (i < 10 ? "0" : "") << i;
    return s.str();
}

inline RandomCollection random_collection(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_docs(0, 20);
    std::uniform_int_distribution<int> n_terms(1, 30);
    const int vocab = n_terms(rng);
    std::uniform_int_distribution<int> word(0, vocab - 1);
    std::uniform_int_distribution<int> doc_len(1, 8);

    std::vector<Document> docs;
    for (int d = n_docs(rng); d > 0; --d) {
        std::string text;
        for (int k = doc_len(rng); k > 0; --k)
            text += vocab_word(word(rng)) + " ";
        docs.push_back({"doc" + std::to_string(docs.size()), "src", "2010-01-01T00:00:00Z", text, ""});
    }

    RandomCollection c{Corpus(std::move(docs)), {}, {}, {}};
    std::uniform_int_distribution<int> rel(0, 2);
    for (int i = static_cast<int>(rng() % 25); i > 0; --i) {
        const int a = word(rng), b = word(rng);
        if (a == b)
            continue;
        LexRow row{vocab_word(a), static_cast<LexRelation>(rel(rng)), vocab_word(b)};
        c.lexicon.add(row.from, row.rel, row.to);
        c.rows.push_back(row);
    }

    // Concepts: a random subset of the vocabulary (plus one name outside it)
    // arranged as a random forest.
    std::vector<ConceptSpec> specs;
    std::set<int> used;
    for (int i = static_cast<int>(rng() % 8); i >= 0; --i) {
        const int w = word(rng);
        if (!used.insert(w).second)
            continue;
        ConceptSpec s{vocab_word(w), std::nullopt, (rng() % 11) / 10.0};
        if (!specs.empty() && rng() % 3 != 0)
            s.parent = specs[rng() % specs.size()].name;
        specs.push_back(s);
    }
    specs.push_back({"unused", std::nullopt, 0.5});
    c.ontology = Ontology::from_specs("random", specs);
    return c;
}

/// term -> documents containing it, by whitespace splitting.
inline std::map<std::string, std::set<std::string>> reference_term_docs(const Corpus& corpus) {
    std::map<std::string, std::set<std::string>> out;
    for (const auto& d : corpus.documents()) {
        std::istringstream words(d.text());
        for (std::string w; words >> w;)
            out[w].insert(d.id);
    }
    return out;
}

/// The mapping rule evaluated directly on the rows: t maps to c when t == c,
/// when t and c share a SYNONYM row in either direction, or when c is a
/// hypernym of t ("t HYPERNYM c" or "c HYPONYM t").
inline bool reference_maps(const std::vector<LexRow>& rows, const std::string& term, const std::string& concept_name) {
    if (term == concept_name)
        return true;
    for (const auto& r : rows) {
        if (r.rel == LexRelation::synonym &&
            ((r.from == term && r.to == concept_name) || (r.from == concept_name && r.to == term)))
            return true;
        if (r.rel == LexRelation::hypernym && r.from == term && r.to == concept_name)
            return true;
        if (r.rel == LexRelation::hyponym && r.from == concept_name && r.to == term)
            return true;
    }
    return false;
}

inline std::map<std::string, std::set<std::string>> reference_concept_postings(const RandomCollection& c) {
    std::map<std::string, std::set<std::string>> out;
    const auto term_docs = reference_term_docs(c.corpus);
    for (const auto& concept_entry : c.ontology.concepts()) {
        auto& docs = out[concept_entry.name];
        for (const auto& [term, ds] : term_docs)
            if (reference_maps(c.rows, term, concept_entry.name))
                docs.insert(ds.begin(), ds.end());
    }
    return out;
}

} // namespace obi::oracle
