#include "obi/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json_util.hpp"
#include "obi/error.hpp"

namespace obi {

ScoreBucket score_bucket(double score) {
    if (score < 1.0 / 3.0)
        return ScoreBucket::low;
    if (score < 2.0 / 3.0)
        return ScoreBucket::mid;
    return ScoreBucket::high;
}

std::string_view to_string(ScoreBucket b) {
    switch (b) {
    case ScoreBucket::low:
        return "LOW";
    case ScoreBucket::mid:
        return "MID";
    case ScoreBucket::high:
        return "HIGH";
    }
    return "?";
}

c45::Record mining_record(const MatchRecord& record) {
    return {{"source", record.source},
            {"top_concept", record.top_concept().value_or("none")},
            {"score_bucket", std::string(to_string(score_bucket(record.best_score)))}};
}

c45::Dataset warehouse_dataset(const std::vector<MatchRecord>& records) {
    if (records.empty())
        throw DomainError("warehouse holds no records to mine");
    c45::Dataset d;
    d.attributes = {"source", "top_concept"};
    d.class_name = "score_bucket";
    for (const auto& r : records) {
        auto rec = mining_record(r);
        d.rows.push_back({{rec["source"], rec["top_concept"]}, rec["score_bucket"]});
    }
    return d;
}

BIReport build_report(const std::vector<MatchRecord>& records, const c45::DecisionTree* model,
                      std::string generated_at) {
    BIReport report;
    report.generated_at = std::move(generated_at);
    report.records = records.size();

    std::map<std::string, std::pair<std::size_t, double>> concepts;
    std::map<std::string, std::size_t> sources;
    for (const auto& r : records) {
        ++sources[r.source];
        for (const auto& c : r.matched_concepts) {
            auto& [count, sum] = concepts[c.concept_name];
            ++count;
            sum += c.score;
        }
        if (model && !model->nodes.empty())
            ++report.classification_summary[c45::classify_tree(*model, mining_record(r))];
        const auto top = r.top_concept();
        report.top_matches.push_back({r.doc_id, top.value_or(""), r.best_score});
    }

    for (const auto& [name, agg] : concepts)
        report.per_concept.push_back({name, agg.first, agg.second / static_cast<double>(agg.first)});
    std::stable_sort(report.per_concept.begin(), report.per_concept.end(),
                     [](const auto& a, const auto& b) { return a.documents > b.documents; });

    for (const auto& [name, count] : sources)
        report.per_source.push_back({name, count});
    std::stable_sort(report.per_source.begin(), report.per_source.end(),
                     [](const auto& a, const auto& b) { return a.documents > b.documents; });

    std::sort(report.top_matches.begin(), report.top_matches.end(), [](const TopMatch& a, const TopMatch& b) {
        return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
    });
    if (report.top_matches.size() > kTopMatches)
        report.top_matches.resize(kTopMatches);
    return report;
}

BIReport build_report(const std::filesystem::path& warehouse_dir, const c45::DecisionTree* model,
                      std::string generated_at) {
    return build_report(read_warehouse(warehouse_dir), model, std::move(generated_at));
}

std::string report_to_json(const BIReport& report) {
    detail::json per_concept = detail::json::array();
    for (const auto& c : report.per_concept)
        per_concept.push_back({{"concept", c.concept_name}, {"documents", c.documents}, {"mean_score", c.mean_score}});
    detail::json per_source = detail::json::array();
    for (const auto& s : report.per_source)
        per_source.push_back({{"source", s.source}, {"documents", s.documents}});
    detail::json top = detail::json::array();
    for (const auto& t : report.top_matches)
        top.push_back({{"doc_id", t.doc_id}, {"concept", t.concept_name}, {"score", t.score}});
    detail::json j{{"generated_at", report.generated_at},
                   {"records", report.records},
                   {"per_concept", std::move(per_concept)},
                   {"per_source", std::move(per_source)},
                   {"classification_summary", report.classification_summary},
                   {"top_matches", std::move(top)}};
    return j.dump(2) + "\n";
}

std::string render_report_text(const BIReport& report) {
    std::ostringstream out;
    char buf[64];
    out << "BI report generated " << report.generated_at << "\n";
    out << "records: " << report.records << "\n\n";

    out << "Concepts (documents, mean score)\n";
    if (report.per_concept.empty())
        out << "  (none)\n";
    for (const auto& c : report.per_concept) {
        std::snprintf(buf, sizeof buf, "%.4f", c.mean_score);
        out << "  " << c.concept_name << "\t" << c.documents << "\t" << buf << "\n";
    }

    out << "\nSources (documents)\n";
    if (report.per_source.empty())
        out << "  (none)\n";
    for (const auto& s : report.per_source)
        out << "  " << s.source << "\t" << s.documents << "\n";

    out << "\nClassification summary\n";
    if (report.classification_summary.empty())
        out << "  (no model)\n";
    for (const auto& [label, count] : report.classification_summary)
        out << "  " << label << "\t" << count << "\n";

    out << "\nTop matches\n";
    if (report.top_matches.empty())
        out << "  (none)\n";
    for (const auto& t : report.top_matches) {
        std::snprintf(buf, sizeof buf, "%.4f", t.score);
        out << "  " << t.doc_id << "\t" << (t.concept_name.empty() ? "-" : t.concept_name) << "\t" << buf << "\n";
    }
    return out.str();
}

} // namespace obi
