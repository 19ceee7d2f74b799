#include <doctest.h>

#include <cmath>
#include <random>

#include "obi/error.hpp"
#include "obi/index.hpp"
#include "oracles/index_reference.hpp"
#include "support.hpp"

using namespace obi;

namespace {

struct Fixture {
    Corpus corpus = load_corpus(test::data_dir() / "corpus.jsonl");
    Ontology ontology = load_ontology(test::data_dir() / "banking_ontology.json");
    Lexicon lexicon = load_lexicon(test::data_dir() / "lexicon.tsv");
    InvertedIndex inv = build_inverted_index(corpus);
    OntologyTreeIndex oti = build_concept_index(inv, ontology, lexicon);
};

std::set<std::string> ids(const std::vector<ScoredDoc>& docs) {
    std::set<std::string> out;
    for (const auto& d : docs)
        out.insert(d.doc_id);
    return out;
}

} // namespace

TEST_CASE("inverted index on the fixture") {
    Fixture f;
    CHECK(f.inv.doc_count() == 3);
    CHECK(f.inv.postings("bank") == PostingList{{"d1", 1}, {"d2", 1}});
    CHECK(f.inv.postings("loan") == PostingList{{"d1", 1}});
    CHECK(f.inv.postings("nothing").empty());
    CHECK(f.inv.tf("bank", "d3") == 0);

    const auto empty = build_inverted_index(Corpus{});
    CHECK(empty.doc_count() == 0);
    CHECK(empty.postings().empty());
}

TEST_CASE("concept index on the fixture") {
    Fixture f;
    CHECK(f.oti.term_to_concepts.at("loan") == std::set<std::string>{"loan"});
    CHECK(f.oti.concept_postings.at("loan") == std::set<std::string>{"d1"});
    CHECK(f.oti.term_to_concepts.at("saving") == std::set<std::string>{"deposit"});
    CHECK(f.oti.concept_postings.at("deposit") == std::set<std::string>{"d2"});
    for (const auto& [term, postings] : f.inv.postings())
        CHECK(f.oti.hub.contains(term));
}

TEST_CASE("synonym documents reach the concept") {
    const Corpus corpus({Document{"d1", "s", "2010-01-01", "education loan", ""},
                         Document{"d9", "s", "2010-01-01", "cheap credit offers", ""}});
    const auto ontology = load_ontology(test::data_dir() / "banking_ontology.json");
    const auto lexicon = load_lexicon(test::data_dir() / "lexicon.tsv");
    const auto oti = build_concept_index(build_inverted_index(corpus), ontology, lexicon);
    CHECK(oti.concept_postings.at("loan") == std::set<std::string>{"d1", "d9"});
}

TEST_CASE("ontology with no matching concept") {
    Fixture f;
    const auto other = parse_ontology(R"({"concepts":[{"name":"equity"},{"name":"bond","parent":"equity"}]})");
    const auto oti = build_concept_index(f.inv, other, f.lexicon);
    for (const auto& [c, docs] : oti.concept_postings)
        CHECK(docs.empty());
    CHECK(query_concept(oti, other, "equity", true).empty());
}

TEST_CASE("hub weights") {
    Fixture f;
    CHECK(hub_weight(f.inv, "bank") == doctest::Approx(2.0 / 3.0));
    CHECK(hub_weight(f.inv, "unseen") == 0.0);
    CHECK(hub_weight(InvertedIndex{}, "bank") == 0.0);

    const Corpus all({Document{"a", "s", "2010-01-01", "bank", ""}, Document{"b", "s", "2010-01-01", "bank", ""}});
    const auto inv = build_inverted_index(all);
    CHECK(hub_weight(inv, "bank") == 1.0);
    CHECK(representative_weight(inv, "bank") == 0.0);
}

TEST_CASE("keyword queries") {
    Fixture f;
    CHECK(ids(query_keyword(f.inv, {"bank"}, QueryMode::any_term)) == std::set<std::string>{"d1", "d2"});
    CHECK(ids(query_keyword(f.inv, {"bank"}, QueryMode::all_terms)) == std::set<std::string>{"d1", "d2"});
    CHECK(ids(query_keyword(f.inv, {"bank", "education"}, QueryMode::all_terms)) == std::set<std::string>{"d1"});
    CHECK(query_keyword(f.inv, {}, QueryMode::any_term).empty());

    const auto ranked = query_keyword(f.inv, {"bank", "education"}, QueryMode::any_term);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].doc_id == "d1");
    CHECK(ranked[0].score == doctest::Approx(std::log(1.5) + std::log(3.0)));
    // equal scores fall back to id order
    const auto tie = query_keyword(f.inv, {"bank"}, QueryMode::any_term);
    CHECK(tie[0].doc_id == "d1");
    CHECK(tie[1].doc_id == "d2");
}

TEST_CASE("concept queries") {
    Fixture f;
    CHECK(ids(query_concept(f.oti, f.ontology, "bank", true)) == std::set<std::string>{"d1", "d2"});
    CHECK(ids(query_concept(f.oti, f.ontology, "loan", false)) == std::set<std::string>{"d1"});
    CHECK_THROWS_AS(query_concept(f.oti, f.ontology, "zzz", false), LookupError);

    // d1 via loan: tf 1 * (1 - 1/3) * 0.8
    const auto loan = query_concept(f.oti, f.ontology, "loan", false);
    CHECK(loan[0].score == doctest::Approx((2.0 / 3.0) * 0.8));
}

TEST_CASE("persistence is byte-stable") {
    Fixture f;
    test::TempDir dir;
    save_inverted_index(f.inv, dir / "inverted.json");
    save_concept_index(f.oti, dir / "concept.json");
    const auto inv = load_inverted_index(dir / "inverted.json");
    const auto oti = load_concept_index(dir / "concept.json");
    CHECK(inv == f.inv);
    CHECK(oti == f.oti);
    CHECK(inverted_index_to_json(inv) == test::read_file(dir / "inverted.json"));
    CHECK(concept_index_to_json(oti) == test::read_file(dir / "concept.json"));
    CHECK_THROWS_AS(inverted_index_from_json("{\"postings\": 3}"), ParseError);
    CHECK_THROWS_AS(concept_index_from_json("nope"), ParseError);
}

TEST_CASE("index properties on random collections") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = oracle::random_collection(rng);
        const auto inv = build_inverted_index(c.corpus);
        const auto oti = build_concept_index(inv, c.ontology, c.lexicon);

        // union consistency
        const auto expected = oracle::reference_concept_postings(c);
        for (const auto& [name, docs] : expected)
            CHECK(oti.concept_postings.at(name) == docs);

        // hub monotonicity
        for (const auto& [t1, p1] : inv.postings())
            for (const auto& [t2, p2] : inv.postings())
                if (p1.size() >= p2.size())
                    CHECK(hub_weight(inv, t1) >= hub_weight(inv, t2));

        const auto term_docs = oracle::reference_term_docs(c.corpus);
        for (const auto& concept_entry : c.ontology.concepts()) {
            const auto narrow = ids(query_concept(oti, c.ontology, concept_entry.name, false));
            const auto wide = ids(query_concept(oti, c.ontology, concept_entry.name, true));
            for (const auto& d : narrow)
                CHECK(wide.contains(d));
            // every returned document holds a contributing term
            const auto candidates = descendants(c.ontology, concept_entry.name);
            for (const auto& d : wide) {
                bool found = false;
                for (const auto& [term, mapped] : oti.term_to_concepts)
                    for (const auto& m : mapped)
                        found = found || (candidates.contains(m) && term_docs.count(term) && term_docs.at(term).contains(d));
                CHECK(found);
            }
        }
    }
}
