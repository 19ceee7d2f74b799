#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "obi/c45.hpp"
#include "obi/etl.hpp"

namespace obi {

struct ConceptSummary {
    std::string concept_name;
    std::size_t documents = 0;
    double mean_score = 0.0;
};

struct SourceSummary {
    std::string source;
    std::size_t documents = 0;
};

struct TopMatch {
    std::string doc_id;
    std::string concept_name;
    double score = 0.0;
};

struct BIReport {
    std::string generated_at;
    std::size_t records = 0;
    std::vector<ConceptSummary> per_concept;
    std::vector<SourceSummary> per_source;
    std::map<std::string, std::size_t> classification_summary;
    std::vector<TopMatch> top_matches;
};

enum class ScoreBucket { low, mid, high };

/// LOW below 1/3, MID below 2/3, HIGH otherwise.
ScoreBucket score_bucket(double score);
std::string_view to_string(ScoreBucket b);

/// Categorical view of a warehouse record used for mining: source,
/// top_concept ("none" when absent) and score_bucket.
c45::Record mining_record(const MatchRecord& record);

/// Mining dataset over the warehouse: attributes source and top_concept,
/// class = score bucket. Throws DomainError when there are no records.
c45::Dataset warehouse_dataset(const std::vector<MatchRecord>& records);

inline constexpr std::size_t kTopMatches = 10;

BIReport build_report(const std::vector<MatchRecord>& records, const c45::DecisionTree* model,
                      std::string generated_at);
/// Reads the warehouse first; throws IoError when it is missing.
BIReport build_report(const std::filesystem::path& warehouse_dir, const c45::DecisionTree* model,
                      std::string generated_at);

std::string report_to_json(const BIReport& report);
std::string render_report_text(const BIReport& report);

} // namespace obi
