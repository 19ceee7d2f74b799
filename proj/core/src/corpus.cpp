#include "obi/corpus.hpp"

#include <algorithm>
#include <array>

#include "json_util.hpp"
#include "obi/error.hpp"
#include "obi/timestamp.hpp"

namespace obi {
namespace {

constexpr std::array<std::string_view, 5> kFields = {"id", "source", "published_at", "title", "body"};

Document parse_line(std::string_view line, std::size_t line_no) {
    detail::json j;
    try {
        j = detail::json::parse(line);
    } catch (const detail::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!j.is_object())
        throw ParseError("expected a JSON object", line_no);
    for (const auto& [key, value] : j.items()) {
        if (std::find(kFields.begin(), kFields.end(), key) == kFields.end())
            throw ParseError("unknown field \"" + key + "\"", line_no);
        if (!value.is_string())
            throw ParseError("field \"" + key + "\" must be a string", line_no);
    }
    for (auto field : kFields)
        if (!j.contains(field))
            throw ParseError("missing field \"" + std::string(field) + "\"", line_no);

    Document d{j["id"].get<std::string>(), j["source"].get<std::string>(), j["published_at"].get<std::string>(),
               j["title"].get<std::string>(), j["body"].get<std::string>()};
    if (!parse_iso8601(d.published_at))
        throw ParseError("published_at is not an ISO-8601 timestamp: \"" + d.published_at + "\"", line_no);
    return d;
}

} // namespace

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
    by_id_.reserve(documents_.size());
    for (std::size_t i = 0; i < documents_.size(); ++i) {
        const auto& d = documents_[i];
        if (d.id.empty())
            throw ValidationError("document at position " + std::to_string(i) + " has an empty id");
        if (d.title.empty() && d.body.empty())
            throw ValidationError("document \"" + d.id + "\" has neither title nor body");
        if (!by_id_.emplace(d.id, i).second)
            throw ValidationError("duplicate document id \"" + d.id + "\"");
    }
}

const Document* Corpus::find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    return it == by_id_.end() ? nullptr : &documents_[it->second];
}

Corpus parse_corpus(std::string_view content) {
    std::vector<Document> docs;
    const auto lines = detail::split_lines(content);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (detail::trim(lines[i]).empty())
            continue;
        docs.push_back(parse_line(lines[i], i + 1));
    }
    return Corpus(std::move(docs));
}

Corpus load_corpus(const std::filesystem::path& path) { return parse_corpus(detail::read_file(path)); }

} // namespace obi
