#include "obi/etl.hpp"

#include <algorithm>
#include <fcntl.h>
#include <set>
#include <unistd.h>

#include "json_util.hpp"
#include "obi/error.hpp"
#include "obi/timestamp.hpp"

namespace obi {
namespace {

namespace fs = std::filesystem;

bool in_unit_range(double x) { return x >= 0.0 && x <= 1.0; }

/// Exclusive ownership of a warehouse directory for one run.
class WarehouseLock {
public:
    explicit WarehouseLock(fs::path path) : path_(std::move(path)) {
        fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd_ < 0)
            throw IoError("warehouse is locked or not writable: " + path_.string());
    }
    WarehouseLock(const WarehouseLock&) = delete;
    WarehouseLock& operator=(const WarehouseLock&) = delete;
    ~WarehouseLock() {
        ::close(fd_);
        std::error_code ec;
        fs::remove(path_, ec);
    }

private:
    fs::path path_;
    int fd_ = -1;
};

std::set<std::string> existing_ids(const fs::path& dir) {
    std::set<std::string> ids;
    if (fs::exists(dir / kWarehouseFile))
        for (const auto& r : read_warehouse(dir))
            ids.insert(r.doc_id);
    if (fs::exists(dir / kWarehouseIdsFile)) {
        const auto content = detail::read_file(dir / kWarehouseIdsFile);
        for (auto line : detail::split_lines(content))
            if (!line.empty())
                ids.emplace(line);
    }
    return ids;
}

void clean(MatchRecord& r) {
    r.doc_id = detail::trim(r.doc_id);
    r.source = detail::trim(r.source);
    r.published_at = detail::trim(r.published_at);
    for (auto& c : r.matched_concepts)
        c.concept_name = detail::trim(c.concept_name);
}

void convert(MatchRecord& r) {
    // Validation already guaranteed the timestamp parses.
    r.published_at = *normalize_iso8601(r.published_at);
    for (auto& c : r.matched_concepts)
        c.concept_name = detail::to_lower(c.concept_name);
}

} // namespace

std::optional<std::string> MatchRecord::top_concept() const {
    const ConceptScore* best = nullptr;
    for (const auto& c : matched_concepts)
        if (!best || c.score > best->score)
            best = &c;
    if (!best)
        return std::nullopt;
    return best->concept_name;
}

MatchRecord make_match_record(std::string doc_id, std::string source, std::string published_at,
                              std::vector<ConceptScore> concepts) {
    double best = 0.0;
    for (const auto& c : concepts)
        best = std::max(best, c.score);
    return {std::move(doc_id), std::move(source), std::move(published_at), std::move(concepts), best};
}

std::optional<std::string> validate_record(const MatchRecord& record) {
    if (detail::trim(record.doc_id).empty())
        return "missing doc_id";
    if (!parse_iso8601(detail::trim(record.published_at)))
        return "invalid published_at";
    if (!in_unit_range(record.best_score))
        return "score out of range";
    for (const auto& c : record.matched_concepts)
        if (!in_unit_range(c.score))
            return "concept score out of range";
    return std::nullopt;
}

LoadReport run_etl(const std::vector<MatchRecord>& records, const fs::path& warehouse_dir, const EtlOptions& options) {
    std::error_code ec;
    fs::create_directories(warehouse_dir, ec);
    if (ec || !fs::is_directory(warehouse_dir))
        throw IoError("cannot create warehouse directory " + warehouse_dir.string());
    WarehouseLock lock(warehouse_dir / kLockFile);

    LoadReport report;

    // 1. extraction
    report.extracted = records.size();

    // 2. validation
    std::vector<MatchRecord> valid;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (auto reason = validate_record(records[i])) {
            report.rejects.push_back({i, std::move(*reason)});
            continue;
        }
        valid.push_back(records[i]);
    }
    report.rejected = report.rejects.size();
    report.validated = report.extracted - report.rejected;

    // 3. cleaning
    auto seen = options.dedup_across_runs ? existing_ids(warehouse_dir) : std::set<std::string>{};
    std::vector<MatchRecord> cleaned;
    for (auto& r : valid) {
        clean(r);
        if (!seen.insert(r.doc_id).second) {
            ++report.deduplicated;
            continue;
        }
        cleaned.push_back(std::move(r));
    }

    // 4. conversion
    for (auto& r : cleaned)
        convert(r);
    report.converted = cleaned.size();

    // 5. loading
    const auto warehouse = warehouse_dir / kWarehouseFile;
    if (!cleaned.empty() || !fs::exists(warehouse)) {
        std::string content = fs::exists(warehouse) ? detail::read_file(warehouse) : std::string{};
        if (!content.empty() && content.back() != '\n')
            content += '\n';
        std::string ids = fs::exists(warehouse_dir / kWarehouseIdsFile)
                              ? detail::read_file(warehouse_dir / kWarehouseIdsFile)
                              : std::string{};
        for (const auto& r : cleaned) {
            content += to_json_line(r);
            content += '\n';
            ids += r.doc_id;
            ids += '\n';
        }
        detail::write_file_atomic(warehouse, content);
        detail::write_file_atomic(warehouse_dir / kWarehouseIdsFile, ids);
    }
    report.loaded = cleaned.size();

    detail::write_file_atomic(warehouse_dir / kLoadReportFile, load_report_to_json(report));
    return report;
}

std::string to_json_line(const MatchRecord& record) {
    detail::json concepts = detail::json::array();
    for (const auto& c : record.matched_concepts)
        concepts.push_back({{"concept", c.concept_name}, {"score", c.score}});
    detail::json j{{"doc_id", record.doc_id},
                   {"source", record.source},
                   {"published_at", record.published_at},
                   {"matched_concepts", std::move(concepts)},
                   {"best_score", record.best_score}};
    return j.dump();
}

MatchRecord match_record_from_json(std::string_view line, std::size_t line_no) {
    detail::json j;
    try {
        j = detail::json::parse(line);
    } catch (const detail::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    try {
        MatchRecord r;
        r.doc_id = j.at("doc_id").get<std::string>();
        r.source = j.at("source").get<std::string>();
        r.published_at = j.at("published_at").get<std::string>();
        for (const auto& c : j.at("matched_concepts"))
            r.matched_concepts.push_back({c.at("concept").get<std::string>(), c.at("score").get<double>()});
        r.best_score = j.at("best_score").get<double>();
        return r;
    } catch (const detail::json::exception& e) {
        throw ParseError(std::string("malformed match record: ") + e.what(), line_no);
    }
}

std::vector<MatchRecord> load_match_records(const fs::path& path) {
    std::vector<MatchRecord> out;
    const auto content = detail::read_file(path);
    const auto lines = detail::split_lines(content);
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (!detail::trim(lines[i]).empty())
            out.push_back(match_record_from_json(lines[i], i + 1));
    return out;
}

void save_match_records(const std::vector<MatchRecord>& records, const fs::path& path) {
    std::string content;
    for (const auto& r : records) {
        content += to_json_line(r);
        content += '\n';
    }
    detail::write_file_atomic(path, content);
}

std::string load_report_to_json(const LoadReport& report) {
    detail::json rejects = detail::json::array();
    for (const auto& r : report.rejects)
        rejects.push_back({{"position", r.position}, {"reason", r.reason}});
    detail::json j{{"extracted", report.extracted}, {"validated", report.validated},
                   {"rejected", report.rejected},   {"deduplicated", report.deduplicated},
                   {"converted", report.converted}, {"loaded", report.loaded},
                   {"rejects", std::move(rejects)}};
    return j.dump(2) + "\n";
}

std::vector<MatchRecord> read_warehouse(const fs::path& warehouse_dir) {
    const auto path = warehouse_dir / kWarehouseFile;
    if (!fs::exists(path))
        throw IoError("no warehouse at " + warehouse_dir.string());
    return load_match_records(path);
}

} // namespace obi
