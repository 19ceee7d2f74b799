#include <doctest.h>

#include "obi/corpus.hpp"
#include "obi/error.hpp"
#include "support.hpp"

using namespace obi;

TEST_CASE("load_corpus reads the fixture in file order") {
    const auto corpus = load_corpus(test::data_dir() / "corpus.jsonl");
    REQUIRE(corpus.size() == 3);
    CHECK(corpus.documents()[0].id == "d1");
    CHECK(corpus.documents()[1].id == "d2");
    CHECK(corpus.documents()[2].id == "d3");
}

TEST_CASE("empty file gives an empty corpus") {
    test::TempDir dir;
    test::write_file(dir / "empty.jsonl", "");
    CHECK(load_corpus(dir / "empty.jsonl").empty());
}

TEST_CASE("get_document") {
    const auto corpus = load_corpus(test::data_dir() / "corpus.jsonl");
    const auto* d1 = get_document(corpus, "d1");
    REQUIRE(d1 != nullptr);
    CHECK(d1->title == "education loan rates rise in banks");
    CHECK(get_document(corpus, "zzz") == nullptr);
    CHECK(get_document(Corpus{}, "d1") == nullptr);
}

TEST_CASE("round trip and determinism") {
    const auto a = load_corpus(test::data_dir() / "corpus.jsonl");
    const auto b = load_corpus(test::data_dir() / "corpus.jsonl");
    CHECK(a == b);
    for (const auto& d : a.documents()) {
        const auto* found = get_document(a, d.id);
        REQUIRE(found != nullptr);
        CHECK(*found == d);
    }
}

TEST_CASE("duplicate ids are rejected by name") {
    const std::string rec1 = R"({"id":"d1","source":"s","published_at":"2010-01-01","title":"a","body":"b"})";
    try {
        parse_corpus(rec1 + "\n" + rec1 + "\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("\"d1\"") != std::string::npos);
    }
}

TEST_CASE("malformed lines report their line number") {
    const std::string good = R"({"id":"d1","source":"s","published_at":"2010-01-01","title":"a","body":"b"})";
    auto line_of = [](const std::string& content) -> std::size_t {
        try {
            parse_corpus(content);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of(good + "\n{not json\n") == 2);
    CHECK(line_of(good + "\n\n" + R"({"id":"d2","source":"s","published_at":"2010-01-01","title":"a"})") == 3);
    CHECK(line_of(R"({"id":"d2","source":"s","published_at":"2010-01-01","title":"a","body":"b","x":"y"})") == 1);
    CHECK(line_of(R"({"id":2,"source":"s","published_at":"2010-01-01","title":"a","body":"b"})") == 1);
    CHECK(line_of(R"({"id":"d","source":"s","published_at":"yesterday","title":"a","body":"b"})") == 1);
}

TEST_CASE("document invariants") {
    CHECK_THROWS_AS(Corpus({Document{"", "s", "2010-01-01", "t", "b"}}), ValidationError);
    CHECK_THROWS_AS(Corpus({Document{"d", "s", "2010-01-01", "", ""}}), ValidationError);
    CHECK_NOTHROW(Corpus({Document{"d", "s", "2010-01-01", "title only", ""}}));
}

TEST_CASE("unreadable file is an I/O error") {
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.jsonl"), IoError);
}
