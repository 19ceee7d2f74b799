#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace obi {

/// One news item. Immutable once it sits in a Corpus.
struct Document {
    std::string id;
    std::string source;
    std::string published_at;
    std::string title;
    std::string body;

    /// Text seen by the tokenizer: title and body joined by a space.
    std::string text() const { return title + " " + body; }

    friend bool operator==(const Document&, const Document&) = default;
};

/// Ordered, id-addressable collection of documents.
class Corpus {
public:
    Corpus() = default;

    /// Throws ValidationError on an empty or duplicate id, or on a document
    /// with both title and body empty.
    explicit Corpus(std::vector<Document> documents);

    const std::vector<Document>& documents() const noexcept { return documents_; }
    std::size_t size() const noexcept { return documents_.size(); }
    bool empty() const noexcept { return documents_.empty(); }

    /// nullptr when no document carries `id`.
    const Document* find(std::string_view id) const;

    friend bool operator==(const Corpus& a, const Corpus& b) { return a.documents_ == b.documents_; }

private:
    std::vector<Document> documents_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

/// Reads the line-delimited JSON corpus format. Blank lines are skipped.
Corpus load_corpus(const std::filesystem::path& path);

/// Parses corpus records from an in-memory string (same format as the file).
Corpus parse_corpus(std::string_view content);

inline const Document* get_document(const Corpus& corpus, std::string_view id) { return corpus.find(id); }

} // namespace obi
