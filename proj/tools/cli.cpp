#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "obi/bench.hpp"
#include "obi/c45.hpp"
#include "obi/corpus.hpp"
#include "obi/error.hpp"
#include "obi/etl.hpp"
#include "obi/index.hpp"
#include "obi/lexicon.hpp"
#include "obi/matcher.hpp"
#include "obi/ontology.hpp"
#include "obi/phrase.hpp"
#include "obi/report.hpp"
#include "obi/timestamp.hpp"

namespace obi::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

/// Bad or missing flags detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File paths shared by several subcommands; `--config` fills any left empty.
struct Paths {
    std::string corpus;
    std::string ontology;
    std::string lexicon;
    std::string stopwords;
    std::string warehouse;
    std::string index;
    std::string model;
    std::string data;
    std::string queries;
    std::string qrels;
    std::string out;
};

void apply_config(const std::string& config_path, Paths& p) {
    std::ifstream in(config_path);
    if (!in)
        throw IoError("cannot read config " + config_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid config JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("config must be a JSON object");
    const std::map<std::string, std::string*> fields = {
        {"corpus", &p.corpus},   {"ontology", &p.ontology}, {"lexicon", &p.lexicon}, {"stopwords", &p.stopwords},
        {"warehouse", &p.warehouse}, {"index", &p.index},   {"model", &p.model},     {"data", &p.data},
        {"queries", &p.queries}, {"qrels", &p.qrels},
    };
    for (const auto& [key, value] : j.items()) {
        auto it = fields.find(key);
        if (it == fields.end())
            throw ConfigError("unknown config key \"" + key + "\"");
        if (!value.is_string())
            throw ConfigError("config key \"" + key + "\" must be a string");
        if (it->second->empty())
            *it->second = value.get<std::string>();
    }
}

const std::string& need(const std::string& value, const char* flag) {
    if (value.empty())
        throw UsageError(std::string("missing required ") + flag);
    return value;
}

StopwordSet stopwords_for(const Paths& p) {
    return p.stopwords.empty() ? default_stopwords() : load_stopwords(p.stopwords);
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string join(const TokenList& tokens, const char* sep = " ") {
    std::string s;
    for (const auto& t : tokens) {
        if (!s.empty())
            s += sep;
        s += t;
    }
    return s;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty() && line.front() != '#')
            lines.push_back(line);
    }
    return lines;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text(const fs::path& path, const std::string& content) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << content))
        throw IoError("cannot write " + path.string());
}

RelationSet parse_relations(const std::string& spec) {
    RelationSet out;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item == "synonym")
            out.insert(LexRelation::synonym);
        else if (item == "hypernym")
            out.insert(LexRelation::hypernym);
        else if (item == "hyponym")
            out.insert(LexRelation::hyponym);
        else
            throw UsageError("unknown relation \"" + item + "\"");
    }
    return out;
}

std::string now_utc() {
    return format_utc(std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
}

// ---------------------------------------------------------------- commands

int cmd_ingest(const Paths& p, std::ostream& out) {
    const auto corpus = load_corpus(need(p.corpus, "--corpus"));
    const auto stopwords = stopwords_for(p);
    std::map<std::string, std::size_t> sources;
    std::set<std::string> terms;
    for (const auto& d : corpus.documents()) {
        ++sources[d.source];
        for (auto& t : tokenize(d.text(), stopwords))
            terms.insert(std::move(t));
    }
    out << "documents: " << corpus.size() << "\n";
    out << "distinct terms: " << terms.size() << "\n";
    for (const auto& [source, n] : sources)
        out << "  " << source << "\t" << n << "\n";
    return kExitOk;
}

int cmd_index(const Paths& p, std::ostream& out) {
    const auto corpus = load_corpus(need(p.corpus, "--corpus"));
    const auto ontology = load_ontology(need(p.ontology, "--ontology"));
    const auto lexicon = p.lexicon.empty() ? Lexicon{} : load_lexicon(p.lexicon);
    const fs::path dir = need(p.out, "--out");
    fs::create_directories(dir);

    const auto inv = build_inverted_index(corpus, stopwords_for(p));
    const auto oti = build_concept_index(inv, ontology, lexicon);
    save_inverted_index(inv, dir / "inverted.json");
    save_concept_index(oti, dir / "concept.json");

    std::size_t mapped_concepts = 0;
    for (const auto& [c, docs] : oti.concept_postings)
        mapped_concepts += !docs.empty();
    out << "indexed " << inv.doc_count() << " documents, " << inv.postings().size() << " terms, " << mapped_concepts
        << "/" << ontology.size() << " concepts with documents -> " << dir.string() << "\n";
    return kExitOk;
}

int cmd_query(const Paths& p, const std::string& mode, const std::string& op, bool with_descendants,
              const std::vector<std::string>& terms, std::ostream& out) {
    if (terms.empty())
        throw UsageError("query needs at least one term");
    std::vector<ScoredDoc> results;
    if (mode == "keyword") {
        const auto inv = load_inverted_index(need(p.index, "--index"));
        const auto tokens = tokenize(join(terms), stopwords_for(p));
        results = query_keyword(inv, tokens, op == "and" ? QueryMode::all_terms : QueryMode::any_term);
    } else {
        if (terms.size() != 1)
            throw UsageError("concept query takes exactly one concept name");
        const auto oti = load_concept_index(need(p.index, "--index"));
        const auto ontology = load_ontology(need(p.ontology, "--ontology"));
        results = query_concept(oti, ontology, terms.front(), with_descendants);
    }
    for (const auto& r : results)
        out << r.doc_id << "\t" << fmt(r.score) << "\n";
    return kExitOk;
}

struct MatchFlags {
    std::string weights = "uniform";
    bool synonym_match = false;
    std::size_t top_k = 10;
    std::size_t depth = 1;
    std::size_t cap = 16;
    std::string relations = "synonym";
    std::vector<std::string> query;
};

int cmd_match(const Paths& p, const MatchFlags& f, std::ostream& out) {
    if (f.query.empty())
        throw UsageError("match needs query text");
    if (f.top_k == 0 || f.depth == 0 || f.cap == 0)
        throw UsageError("--top-k, --depth and --cap must be positive");
    const auto corpus = load_corpus(need(p.corpus, "--corpus"));
    const auto ontology = load_ontology(need(p.ontology, "--ontology"));
    const auto lexicon = p.lexicon.empty() ? Lexicon{} : load_lexicon(p.lexicon);
    if (f.synonym_match && p.lexicon.empty())
        throw UsageError("--synonym-match needs --lexicon");
    const auto stopwords = stopwords_for(p);

    std::optional<InvertedIndex> inv;
    RankOptions options;
    options.stopwords = &stopwords;
    options.synonyms = f.synonym_match ? &lexicon : nullptr;
    if (f.weights == "idf") {
        inv = p.index.empty() ? build_inverted_index(corpus, stopwords) : load_inverted_index(p.index);
        options.rule = WeightRule::idf;
        options.index = &*inv;
    }

    const auto tokens = tokenize(join(f.query), stopwords);
    const auto phrases = generate_phrases(tokens, lexicon, parse_relations(f.relations), f.depth, f.cap);
    const auto ranked = rank_documents(phrases, corpus, ontology, f.top_k, options);

    out << "tokens: " << join(tokens, ", ") << "\n";
    out << "phrases: " << phrases.phrases.size() << "\n";
    std::vector<MatchRecord> records;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto& m = ranked[i];
        out << i + 1 << "\t" << m.doc_id << "\t" << fmt(m.score) << "\t" << join(m.phrase) << "\n";
        const auto* doc = corpus.find(m.doc_id);
        std::vector<ConceptScore> concepts;
        for (const auto& [name, s] : m.concepts)
            concepts.push_back({name, s});
        records.push_back(make_match_record(doc->id, doc->source, doc->published_at, std::move(concepts)));
    }
    if (!p.out.empty()) {
        save_match_records(records, p.out);
        out << "wrote " << records.size() << " match records to " << p.out << "\n";
    }
    return kExitOk;
}

int cmd_etl(const Paths& p, const std::string& in_path, bool cross_run_dedup, std::ostream& out) {
    const auto records = load_match_records(need(in_path, "--in"));
    const auto report = run_etl(records, need(p.warehouse, "--warehouse"), {cross_run_dedup});
    out << "extracted " << report.extracted << "\nvalidated " << report.validated << "\nrejected " << report.rejected
        << "\ndeduplicated " << report.deduplicated << "\nconverted " << report.converted << "\nloaded "
        << report.loaded << "\n";
    for (const auto& r : report.rejects)
        out << "  reject #" << r.position << ": " << r.reason << "\n";
    return kExitOk;
}

c45::Dataset training_data(const Paths& p) {
    if (!p.data.empty())
        return c45::load_csv(p.data);
    if (!p.warehouse.empty())
        return warehouse_dataset(read_warehouse(p.warehouse));
    throw UsageError("missing required --data or --warehouse");
}

int cmd_train(const Paths& p, double min_fraction, std::ostream& out) {
    const auto data = training_data(p);
    const auto tree = c45::build_tree(data, {min_fraction, std::nullopt});
    write_text(need(p.out, "--out"), c45::tree_to_json(tree));
    const auto& root = tree.root();
    out << "root: " << (root.leaf ? "leaf " + root.label : root.attribute) << "\n";
    out << c45::render_tree(tree);
    return kExitOk;
}

int cmd_rules(const Paths& p, std::ostream& out) {
    const auto tree = c45::tree_from_json(read_text(need(p.model, "--model")));
    const auto rules = p.data.empty() ? c45::extract_rules(tree) : c45::extract_rules(tree, c45::load_csv(p.data));
    if (!p.out.empty())
        write_text(p.out, c45::rules_to_json(rules));
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        const auto& r = rules.rules[i];
        out << "rule " << i + 1 << ": ";
        if (r.conditions.empty())
            out << "true";
        for (std::size_t k = 0; k < r.conditions.size(); ++k)
            out << (k ? " and " : "") << r.conditions[k].attribute << " = " << r.conditions[k].value;
        out << " -> " << r.label << "\n";
    }
    out << "default: " << rules.default_class << "\n";
    return kExitOk;
}

int cmd_classify(const Paths& p, const std::vector<std::string>& assignments, std::ostream& out) {
    const auto text = read_text(need(p.model, "--model"));
    const auto type = [&] {
        try {
            return json::parse(text).value("type", "");
        } catch (const json::exception&) {
            throw ParseError("model is not valid JSON");
        }
    }();
    std::function<std::string(const c45::Record&)> classify;
    if (type == "c45-tree") {
        auto tree = c45::tree_from_json(text);
        classify = [tree](const c45::Record& r) { return c45::classify_tree(tree, r); };
    } else if (type == "c45-rules") {
        auto rules = c45::rules_from_json(text);
        classify = [rules](const c45::Record& r) { return c45::classify_rules(rules, r); };
    } else {
        throw ParseError("unknown model type \"" + type + "\"");
    }

    if (!assignments.empty()) {
        c45::Record record;
        for (const auto& a : assignments) {
            const auto eq = a.find('=');
            if (eq == std::string::npos)
                throw UsageError("--record expects attribute=value, got \"" + a + "\"");
            record[a.substr(0, eq)] = a.substr(eq + 1);
        }
        out << classify(record) << "\n";
        return kExitOk;
    }

    const auto data = c45::load_csv(need(p.data, "--data or --record"));
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.rows.size(); ++i) {
        const auto label = classify(c45::to_record(data, data.rows[i]));
        correct += label == data.rows[i].label;
        out << i + 1 << "\t" << label << "\n";
    }
    out << "accuracy: " << correct << "/" << data.rows.size() << "\n";
    return kExitOk;
}

int cmd_report(const Paths& p, const std::string& now, std::ostream& out) {
    std::optional<c45::DecisionTree> model;
    if (!p.model.empty())
        model = c45::tree_from_json(read_text(p.model));
    const auto report = build_report(fs::path(need(p.warehouse, "--warehouse")), model ? &*model : nullptr,
                                     now.empty() ? now_utc() : now);
    const auto text = render_report_text(report);
    if (!p.out.empty()) {
        const fs::path dir = p.out;
        fs::create_directories(dir);
        write_text(dir / "report.txt", text);
        write_text(dir / "report.json", report_to_json(report));
    }
    out << text;
    return kExitOk;
}

int cmd_bench(const Paths& p, std::ostream& out) {
    const auto corpus = load_corpus(need(p.corpus, "--corpus"));
    const auto ontology = load_ontology(need(p.ontology, "--ontology"));
    const auto lexicon = p.lexicon.empty() ? Lexicon{} : load_lexicon(p.lexicon);
    const auto stopwords = stopwords_for(p);
    const auto queries = read_lines(need(p.queries, "--queries"));

    const auto rows = run_bench(queries, {corpus, ontology, lexicon, stopwords});
    out << render_bench_table(rows);

    bool ok = true;
    for (const auto& r : rows) {
        if (!r.containment_applies)
            continue;
        out << "containment " << (r.containment_holds ? "ok" : "VIOLATED") << ": \"" << r.query << "\" concept "
            << r.concept_count << " <= expanded keyword " << r.expanded_keyword_count << "\n";
        ok = ok && r.containment_holds;
    }

    if (!p.qrels.empty()) {
        std::map<std::string, std::vector<std::string>> qrels;
        for (const auto& line : read_lines(p.qrels)) {
            const auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw ParseError("qrels line without a tab: \"" + line + "\"");
            qrels[line.substr(0, tab)].push_back(line.substr(tab + 1));
        }
        for (const auto& r : rows) {
            auto it = qrels.find(r.query);
            if (it == qrels.end())
                continue;
            out << "quality \"" << r.query << "\": keyword P@10 " << fmt(precision_at(r.keyword_docs, it->second, 10))
                << " R@50 " << fmt(recall_at(r.keyword_docs, it->second, 50)) << "; concept P@10 "
                << fmt(precision_at(r.concept_docs, it->second, 10)) << " R@50 "
                << fmt(recall_at(r.concept_docs, it->second, 50)) << "\n";
        }
    }
    return ok ? kExitOk : kExitDomainError;
}

std::string find_config(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            return args[i + 1];
        if (args[i].rfind("--config=", 0) == 0)
            return args[i].substr(9);
    }
    return {};
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"obi: ontology-based news retrieval, ETL and C4.5 mining", "obi"};
    app.require_subcommand(1);
    app.fallthrough();

    Paths p;
    std::string config_path;
    app.add_option("--config", config_path, "JSON file naming input paths");

    auto add_stopwords = [&](CLI::App* sub) { sub->add_option("--stopwords", p.stopwords, "Stopword list file"); };

    auto* ingest = app.add_subcommand("ingest", "Load and validate a corpus");
    ingest->add_option("--corpus", p.corpus, "Corpus (JSON lines)");
    add_stopwords(ingest);

    auto* index = app.add_subcommand("index", "Build the inverted and concept indexes");
    index->add_option("--corpus", p.corpus);
    index->add_option("--ontology", p.ontology);
    index->add_option("--lexicon", p.lexicon);
    index->add_option("--out", p.out, "Output directory");
    add_stopwords(index);

    std::string query_mode = "keyword";
    std::string query_op = "or";
    bool with_descendants = false;
    std::vector<std::string> query_terms;
    auto* query = app.add_subcommand("query", "Keyword or concept retrieval");
    query->add_option("--mode", query_mode)->check(CLI::IsMember({"keyword", "concept"}));
    query->add_option("--op", query_op, "Keyword combination")->check(CLI::IsMember({"and", "or"}));
    query->add_option("--index", p.index, "inverted.json (keyword) or concept.json (concept)");
    query->add_option("--ontology", p.ontology);
    query->add_flag("--descendants", with_descendants, "Include descendant concepts");
    query->add_option("terms", query_terms);
    add_stopwords(query);

    MatchFlags match_flags;
    auto* match = app.add_subcommand("match", "Rank documents against generated phrases");
    match->add_option("--corpus", p.corpus);
    match->add_option("--ontology", p.ontology);
    match->add_option("--lexicon", p.lexicon);
    match->add_option("--index", p.index, "inverted.json for IDF weights (built from the corpus if absent)");
    match->add_option("--weights", match_flags.weights)->check(CLI::IsMember({"uniform", "idf"}));
    match->add_flag("--synonym-match", match_flags.synonym_match);
    match->add_option("--top-k", match_flags.top_k);
    match->add_option("--depth", match_flags.depth, "Lexical expansion depth");
    match->add_option("--cap", match_flags.cap, "Maximum phrase variants");
    match->add_option("--relations", match_flags.relations, "Comma list of synonym,hypernym,hyponym");
    match->add_option("--out", p.out, "Match records output (JSON lines)");
    match->add_option("query", match_flags.query);
    add_stopwords(match);

    std::string etl_in;
    bool no_cross_dedup = false;
    auto* etl = app.add_subcommand("etl", "Load match records into the warehouse");
    etl->add_option("--in", etl_in, "Match records (JSON lines)");
    etl->add_option("--warehouse", p.warehouse, "Warehouse directory");
    etl->add_flag("--no-cross-run-dedup", no_cross_dedup);

    double min_fraction = 0.001;
    auto* train = app.add_subcommand("train", "Build a C4.5 decision tree");
    train->add_option("--data", p.data, "Training CSV (last column is the class)");
    train->add_option("--warehouse", p.warehouse, "Mine the warehouse instead of a CSV");
    train->add_option("--out", p.out, "tree.json");
    train->add_option("--min-fraction", min_fraction)->check(CLI::Range(0.0, 1.0));

    auto* rules = app.add_subcommand("rules", "Extract production rules from a tree");
    rules->add_option("--model", p.model, "tree.json");
    rules->add_option("--data", p.data, "Training CSV for the default class");
    rules->add_option("--out", p.out, "rules.json");

    std::vector<std::string> assignments;
    auto* classify = app.add_subcommand("classify", "Classify records with a tree or rule set");
    classify->add_option("--model", p.model, "tree.json or rules.json");
    classify->add_option("--data", p.data, "CSV of records");
    classify->add_option("--record", assignments, "attribute=value (repeatable)");

    std::string now;
    auto* report = app.add_subcommand("report", "Generate the BI report");
    report->add_option("--warehouse", p.warehouse);
    report->add_option("--model", p.model, "tree.json used for the classification summary");
    report->add_option("--out", p.out, "Directory for report.txt and report.json");
    report->add_option("--now", now, "Timestamp recorded in the report");

    auto* bench = app.add_subcommand("bench", "Compare keyword and concept retrieval");
    bench->add_option("--corpus", p.corpus);
    bench->add_option("--ontology", p.ontology);
    bench->add_option("--lexicon", p.lexicon);
    bench->add_option("--queries", p.queries, "One query per line");
    bench->add_option("--qrels", p.qrels, "query<TAB>doc id relevance judgements");
    add_stopwords(bench);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "obi: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (auto cfg = find_config(args); !cfg.empty())
            apply_config(cfg, p);

        if (ingest->parsed())
            return cmd_ingest(p, out);
        if (index->parsed())
            return cmd_index(p, out);
        if (query->parsed())
            return cmd_query(p, query_mode, query_op, with_descendants, query_terms, out);
        if (match->parsed())
            return cmd_match(p, match_flags, out);
        if (etl->parsed())
            return cmd_etl(p, etl_in, !no_cross_dedup, out);
        if (train->parsed())
            return cmd_train(p, min_fraction, out);
        if (rules->parsed())
            return cmd_rules(p, out);
        if (classify->parsed())
            return cmd_classify(p, assignments, out);
        if (report->parsed())
            return cmd_report(p, now, out);
        if (bench->parsed())
            return cmd_bench(p, out);
    } catch (const UsageError& e) {
        err << "obi: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "obi: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const fs::filesystem_error& e) {
        err << "obi: " << e.what() << "\n";
        return kExitDomainError;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace obi::cli
