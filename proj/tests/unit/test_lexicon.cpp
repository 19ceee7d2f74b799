#include <doctest.h>

#include <random>

#include "obi/error.hpp"
#include "obi/lexicon.hpp"
#include "support.hpp"

using namespace obi;

namespace {

const RelationSet kSyn{LexRelation::synonym};
const RelationSet kHypo{LexRelation::hyponym};

Lexicon random_lexicon(std::mt19937& rng, int terms, int rows) {
    std::uniform_int_distribution<int> pick(0, terms - 1);
    std::uniform_int_distribution<int> rel(0, 2);
    Lexicon lex;
    for (int i = 0; i < rows; ++i) {
        const int a = pick(rng), b = pick(rng);
        if (a == b)
            continue;
        lex.add("t" + std::to_string(a), static_cast<LexRelation>(rel(rng)), "t" + std::to_string(b));
    }
    return lex;
}

} // namespace

TEST_CASE("empty lexicon file") {
    CHECK(parse_lexicon("").empty());
    CHECK(parse_lexicon("# only a comment\n\n").empty());
}

TEST_CASE("synonym rows are symmetric") {
    const auto lex = parse_lexicon("loan\tSYNONYM\tcredit\n");
    CHECK(expand(lex, "credit", kSyn, 1).contains("loan"));
    CHECK(expand(lex, "loan", kSyn, 1) == std::set<std::string>{"loan", "credit"});
}

TEST_CASE("hypernym rows are inverted into hyponym edges") {
    const auto lex = parse_lexicon("loan\tHYPERNYM\tmortgage\n");
    CHECK(expand(lex, "mortgage", kHypo, 1) == std::set<std::string>{"mortgage", "loan"});
    CHECK(expand(lex, "loan", {LexRelation::hypernym}, 1) == std::set<std::string>{"loan", "mortgage"});
    // the reverse direction does not hold for the other relation
    CHECK(expand(lex, "mortgage", {LexRelation::hypernym}, 1) == std::set<std::string>{"mortgage"});
}

TEST_CASE("breadth-first expansion honors depth") {
    const auto lex = parse_lexicon("bank\tHYPONYM\tloan\nbank\tHYPONYM\tdeposit\nloan\tHYPONYM\tmortgage\n");
    CHECK(expand(lex, "bank", kHypo, 2) == std::set<std::string>{"bank", "loan", "deposit", "mortgage"});
    CHECK(expand(lex, "bank", kHypo, 1) == std::set<std::string>{"bank", "loan", "deposit"});
}

TEST_CASE("unknown terms expand to themselves") {
    const auto lex = load_lexicon(test::data_dir() / "lexicon.tsv");
    CHECK(expand(lex, "quantummuon", kSyn, 3) == std::set<std::string>{"quantummuon"});
}

TEST_CASE("terms are lowercased") {
    const auto lex = parse_lexicon("Loan\tSYNONYM\tCREDIT\n");
    CHECK(expand(lex, "LOAN", kSyn, 1) == std::set<std::string>{"loan", "credit"});
}

TEST_CASE("load errors") {
    try {
        parse_lexicon("# header\nloan\tSYNONYM\tcredit\nloan\tANTONYM\tdebt\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_lexicon("loan SYNONYM credit\n"), ParseError);
    CHECK_THROWS_AS(parse_lexicon("loan\tSYNONYM\tLoan\n"), ValidationError);
    CHECK_THROWS_AS(expand(Lexicon{}, "x", kSyn, 0), DomainError);
    CHECK_THROWS_AS(load_lexicon("/nonexistent.tsv"), IoError);
}

TEST_CASE("expansion properties on random lexicons") {
    std::mt19937 rng(7);
    const std::vector<RelationSet> selections = {
        kSyn, kHypo, {LexRelation::hypernym}, {LexRelation::synonym, LexRelation::hypernym},
        {LexRelation::synonym, LexRelation::hypernym, LexRelation::hyponym}};
    for (int trial = 0; trial < 50; ++trial) {
        const auto lex = random_lexicon(rng, 12, 20);
        for (int a = 0; a < 12; ++a) {
            const auto term = "t" + std::to_string(a);
            for (const auto& rels : selections) {
                std::set<std::string> prev;
                for (std::size_t d = 1; d <= 4; ++d) {
                    const auto e = expand(lex, term, rels, d);
                    CHECK(e.contains(term));
                    for (const auto& x : prev)
                        CHECK(e.contains(x));
                    prev = e;
                }
            }
            for (const auto& b : expand(lex, term, kSyn, 1))
                CHECK(expand(lex, b, kSyn, 1).contains(term));
        }
        for (const auto& [from, edges] : lex.entries())
            for (const auto& [rel, to] : edges) {
                CHECK(from != to);
                if (rel == LexRelation::hypernym)
                    CHECK(lex.edges(to).contains({LexRelation::hyponym, from}));
                if (rel == LexRelation::hyponym)
                    CHECK(lex.edges(to).contains({LexRelation::hypernym, from}));
            }
    }
}
