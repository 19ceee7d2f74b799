#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using obi::cli::run_command;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (obi::test::data_dir() / name).string(); }

} // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"ingest"}).code == 2);
    CHECK(run({"query", "--mode", "sideways", "loan"}).code == 2);
    CHECK(run({"train", "--min-fraction", "3"}).code == 2);
    CHECK(run({"match", "--corpus", data("corpus.jsonl"), "--ontology", data("banking_ontology.json")}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit with 1") {
    obi::test::TempDir dir;
    CHECK(run({"ingest", "--corpus", (dir / "missing.jsonl").string()}).code == 1);
    obi::test::write_file(dir / "bad.jsonl", "{\"id\": 3}\n");
    const auto bad = run({"ingest", "--corpus", (dir / "bad.jsonl").string()});
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"report", "--warehouse", (dir / "nowhere").string()}).code == 1);
    CHECK(run({"classify", "--model", data("weather.csv"), "--record", "outlook=sunny"}).code == 1);
}

TEST_CASE("index then query") {
    obi::test::TempDir dir;
    const auto idx = run({"index", "--corpus", data("corpus.jsonl"), "--ontology", data("banking_ontology.json"),
                          "--lexicon", data("lexicon.tsv"), "--out", dir.path().string()});
    REQUIRE(idx.code == 0);

    const auto kw = run({"query", "--mode", "keyword", "--index", (dir / "inverted.json").string(), "bank"});
    CHECK(kw.code == 0);
    CHECK(kw.out.rfind("d1\t", 0) == 0);
    CHECK(kw.out.find("d2\t") != std::string::npos);

    const auto both = run({"query", "--mode", "keyword", "--op", "and", "--index", (dir / "inverted.json").string(),
                           "bank", "education"});
    CHECK(both.out.find("d2") == std::string::npos);

    const auto cq = run({"query", "--mode", "concept", "--index", (dir / "concept.json").string(), "--ontology",
                         data("banking_ontology.json"), "--descendants", "bank"});
    CHECK(cq.code == 0);
    CHECK(cq.out.find("d1") != std::string::npos);
    CHECK(cq.out.find("d2") != std::string::npos);

    const auto unknown = run({"query", "--mode", "concept", "--index", (dir / "concept.json").string(),
                              "--ontology", data("banking_ontology.json"), "weather"});
    CHECK(unknown.code == 1);
}

TEST_CASE("match, etl and report") {
    obi::test::TempDir dir;
    const auto m = run({"match", "--corpus", data("corpus.jsonl"), "--ontology", data("banking_ontology.json"),
                        "--lexicon", data("lexicon.tsv"), "--out", (dir / "matches.jsonl").string(),
                        "finding information about education loans in banks"});
    REQUIRE(m.code == 0);
    CHECK(m.out.find("tokens: finding, information, education, loan, bank") != std::string::npos);
    CHECK(m.out.find("1\td1\t") != std::string::npos);

    const auto e = run({"etl", "--in", (dir / "matches.jsonl").string(), "--warehouse", (dir / "wh").string()});
    REQUIRE(e.code == 0);
    CHECK(e.out.find("rejected 0") != std::string::npos);

    const auto fixture = run({"etl", "--in", data("etl_batch.jsonl"), "--warehouse", (dir / "wh2").string()});
    CHECK(fixture.out.find("loaded 3") != std::string::npos);

    const auto r = run({"report", "--warehouse", (dir / "wh").string(), "--out", (dir / "rep").string(), "--now",
                        "2010-03-10T00:00:00Z"});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "rep" / "report.json"));
    CHECK(r.out.find("2010-03-10T00:00:00Z") != std::string::npos);
}

TEST_CASE("train, rules and classify") {
    obi::test::TempDir dir;
    const auto t = run({"train", "--data", data("weather.csv"), "--out", (dir / "tree.json").string()});
    REQUIRE(t.code == 0);
    CHECK(t.out.find("root: outlook") != std::string::npos);

    const auto r = run({"rules", "--model", (dir / "tree.json").string(), "--data", data("weather.csv"), "--out",
                        (dir / "rules.json").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("rule 5:") != std::string::npos);
    CHECK(r.out.find("rule 6:") == std::string::npos);

    const auto one = run({"classify", "--model", (dir / "rules.json").string(), "--record", "outlook=overcast"});
    CHECK(one.code == 0);
    CHECK(one.out == "yes\n");
    const auto all = run({"classify", "--model", (dir / "tree.json").string(), "--data", data("weather.csv")});
    CHECK(all.out.find("accuracy: 14/14") != std::string::npos);
    CHECK(run({"classify", "--model", (dir / "tree.json").string(), "--record", "outlook"}).code == 2);
}

TEST_CASE("bench and config") {
    const auto b = run({"bench", "--corpus", data("corpus.jsonl"), "--ontology", data("banking_ontology.json"),
                        "--lexicon", data("lexicon.tsv"), "--queries", data("queries.txt")});
    CHECK(b.code == 0);
    CHECK(b.out.find("Duration (Seconds)") != std::string::npos);

    obi::test::TempDir dir;
    obi::test::write_file(dir / "config.json", "{\"corpus\": \"" + data("corpus.jsonl") + "\"}");
    const auto ing = run({"--config", (dir / "config.json").string(), "ingest"});
    CHECK(ing.code == 0);
    CHECK(ing.out.find("documents: 3") != std::string::npos);

    obi::test::write_file(dir / "odd.json", "{\"colour\": \"red\"}");
    CHECK(run({"--config", (dir / "odd.json").string(), "ingest"}).code == 1);
}
