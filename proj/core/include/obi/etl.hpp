#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace obi {

struct ConceptScore {
    std::string concept_name;
    double score = 0.0;

    friend bool operator==(const ConceptScore&, const ConceptScore&) = default;
};

/// One matched news item on its way to (or stored in) the warehouse.
struct MatchRecord {
    std::string doc_id;
    std::string source;
    std::string published_at;
    std::vector<ConceptScore> matched_concepts;
    double best_score = 0.0;

    /// Concept with the highest score (first on ties), nullopt when none.
    std::optional<std::string> top_concept() const;

    friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

/// Builds a record whose best_score is the max of `concepts`.
MatchRecord make_match_record(std::string doc_id, std::string source, std::string published_at,
                              std::vector<ConceptScore> concepts);

struct Rejection {
    std::size_t position = 0;
    std::string reason;

    friend bool operator==(const Rejection&, const Rejection&) = default;
};

struct LoadReport {
    std::size_t extracted = 0;
    std::size_t validated = 0;
    std::size_t rejected = 0;
    std::size_t deduplicated = 0;
    std::size_t converted = 0;
    std::size_t loaded = 0;
    std::vector<Rejection> rejects;

    friend bool operator==(const LoadReport&, const LoadReport&) = default;
};

/// nullopt when the record is acceptable, otherwise the rejection reason.
std::optional<std::string> validate_record(const MatchRecord& record);

struct EtlOptions {
    /// Also drop records whose doc_id is already in the warehouse.
    bool dedup_across_runs = true;
};

/// Extract, validate, clean, convert and load `records` into
/// `warehouse_dir/warehouse.jsonl`. Loading is atomic (temp file + rename)
/// and guarded by a lock file. Writes `load_report.json` alongside. Throws
/// IoError when the warehouse cannot be written or is locked.
LoadReport run_etl(const std::vector<MatchRecord>& records, const std::filesystem::path& warehouse_dir,
                   const EtlOptions& options = {});

std::string to_json_line(const MatchRecord& record);
/// Throws ParseError on malformed JSON or missing/mistyped fields.
MatchRecord match_record_from_json(std::string_view line, std::size_t line_no = 0);
std::vector<MatchRecord> load_match_records(const std::filesystem::path& path);
void save_match_records(const std::vector<MatchRecord>& records, const std::filesystem::path& path);

std::string load_report_to_json(const LoadReport& report);

/// Records currently in `warehouse_dir/warehouse.jsonl`. Throws IoError when
/// the warehouse file does not exist.
std::vector<MatchRecord> read_warehouse(const std::filesystem::path& warehouse_dir);

inline constexpr std::string_view kWarehouseFile = "warehouse.jsonl";
inline constexpr std::string_view kWarehouseIdsFile = "warehouse.ids";
inline constexpr std::string_view kLoadReportFile = "load_report.json";
inline constexpr std::string_view kLockFile = ".lock";

} // namespace obi
