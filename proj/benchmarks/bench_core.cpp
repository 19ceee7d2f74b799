#include <benchmark/benchmark.h>

#include <random>

#include "obi/c45.hpp"
#include "obi/corpus.hpp"
#include "obi/index.hpp"
#include "obi/matcher.hpp"
#include "obi/phrase.hpp"

namespace {

const std::filesystem::path kData = OBI_BENCH_DATA_DIR;

const obi::Corpus& synthetic_corpus() {
    static const auto corpus = obi::load_corpus(kData / "synthetic" / "corpus.jsonl");
    return corpus;
}

const obi::Ontology& synthetic_ontology() {
    static const auto ontology = obi::load_ontology(kData / "synthetic" / "ontology.json");
    return ontology;
}

const obi::Lexicon& synthetic_lexicon() {
    static const auto lexicon = obi::load_lexicon(kData / "synthetic" / "lexicon.tsv");
    return lexicon;
}

void BM_Tokenize(benchmark::State& state) {
    const auto& docs = synthetic_corpus().documents();
    std::size_t bytes = 0;
    for (auto _ : state)
        for (const auto& d : docs) {
            const auto text = d.text();
            bytes += text.size();
            benchmark::DoNotOptimize(obi::tokenize(text));
        }
    state.SetBytesProcessed(static_cast<int64_t>(bytes));
}
BENCHMARK(BM_Tokenize);

void BM_MatchVector(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    obi::ConceptWeights concepts;
    for (std::size_t j = 0; j < n; ++j) {
        concepts.names.push_back("c" + std::to_string(j));
        concepts.weights.push_back((rng() % 11) / 10.0);
    }
    obi::WeightedInput input;
    for (int i = 0; i < 8; ++i) {
        input.terms.push_back("c" + std::to_string(rng() % (2 * n)));
        input.weights.push_back(1.0);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(obi::match_vector(input, concepts));
}
BENCHMARK(BM_MatchVector)->Arg(8)->Arg(64)->Arg(512);

void BM_RankDocuments(benchmark::State& state) {
    const auto phrases =
        obi::generate_phrases(obi::tokenize("cheap loan offers from banks"), synthetic_lexicon(),
                              {obi::LexRelation::synonym}, 1, 32);
    for (auto _ : state)
        benchmark::DoNotOptimize(obi::rank_documents(phrases, synthetic_corpus(), synthetic_ontology(), 10));
}
BENCHMARK(BM_RankDocuments);

void BM_BuildIndexes(benchmark::State& state) {
    for (auto _ : state) {
        const auto inv = obi::build_inverted_index(synthetic_corpus());
        benchmark::DoNotOptimize(obi::build_concept_index(inv, synthetic_ontology(), synthetic_lexicon()));
    }
}
BENCHMARK(BM_BuildIndexes);

void BM_QueryKeywordVsConcept(benchmark::State& state) {
    const auto inv = obi::build_inverted_index(synthetic_corpus());
    const auto oti = obi::build_concept_index(inv, synthetic_ontology(), synthetic_lexicon());
    const bool concept_side = state.range(0) != 0;
    for (auto _ : state) {
        if (concept_side)
            benchmark::DoNotOptimize(obi::query_concept(oti, synthetic_ontology(), "loan", true));
        else
            benchmark::DoNotOptimize(obi::query_keyword(inv, {"loan"}, obi::QueryMode::any_term));
    }
}
BENCHMARK(BM_QueryKeywordVsConcept)->Arg(0)->Arg(1);

void BM_BuildTree(benchmark::State& state) {
    const auto rows = static_cast<int>(state.range(0));
    std::mt19937 rng(2);
    obi::c45::Dataset d;
    d.attributes = {"a", "b", "c", "d", "e"};
    for (int i = 0; i < rows; ++i) {
        obi::c45::Example e;
        for (std::size_t a = 0; a < d.attributes.size(); ++a)
            e.values.push_back("v" + std::to_string(rng() % 4));
        e.label = (e.values[0] == "v0" || e.values[2] == "v1") ? "yes" : (rng() % 5 ? "no" : "yes");
        d.rows.push_back(std::move(e));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(obi::c45::build_tree(d));
}
BENCHMARK(BM_BuildTree)->Arg(100)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
