#include "obi/lexicon.hpp"

#include <deque>
#include <vector>

#include "json_util.hpp"
#include "obi/error.hpp"

namespace obi {
namespace {

std::optional<LexRelation> parse_relation(std::string_view token) {
    if (token == "SYNONYM")
        return LexRelation::synonym;
    if (token == "HYPERNYM")
        return LexRelation::hypernym;
    if (token == "HYPONYM")
        return LexRelation::hyponym;
    return std::nullopt;
}

LexRelation inverse(LexRelation r) {
    switch (r) {
    case LexRelation::hypernym:
        return LexRelation::hyponym;
    case LexRelation::hyponym:
        return LexRelation::hypernym;
    case LexRelation::synonym:
        break;
    }
    return LexRelation::synonym;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    for (;;) {
        const auto tab = line.find('\t', start);
        cols.push_back(line.substr(start, tab - start));
        if (tab == std::string_view::npos)
            break;
        start = tab + 1;
    }
    return cols;
}

} // namespace

std::string_view to_string(LexRelation r) {
    switch (r) {
    case LexRelation::synonym:
        return "SYNONYM";
    case LexRelation::hypernym:
        return "HYPERNYM";
    case LexRelation::hyponym:
        return "HYPONYM";
    }
    return "?";
}

void Lexicon::insert(const std::string& from, LexRelation rel, const std::string& to) {
    entries_[from].emplace(rel, to);
}

void Lexicon::add(std::string_view from, LexRelation rel, std::string_view to) {
    const auto a = detail::to_lower(detail::trim(from));
    const auto b = detail::to_lower(detail::trim(to));
    if (a.empty() || b.empty())
        throw ValidationError("lexicon relation with an empty term");
    if (a == b)
        throw ValidationError("term \"" + a + "\" related to itself");
    insert(a, rel, b);
    insert(b, inverse(rel), a);
}

const std::set<Lexicon::Edge>& Lexicon::edges(std::string_view term) const {
    static const std::set<Edge> none;
    auto it = entries_.find(term);
    return it == entries_.end() ? none : it->second;
}

Lexicon parse_lexicon(std::string_view content) {
    Lexicon lex;
    const auto lines = detail::split_lines(content);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line_no = i + 1;
        const auto trimmed = detail::trim(lines[i]);
        if (trimmed.empty() || trimmed.front() == '#')
            continue;
        const auto cols = split_tabs(lines[i]);
        if (cols.size() != 3)
            throw ParseError("expected 3 tab-separated columns, got " + std::to_string(cols.size()), line_no);
        const auto rel = parse_relation(detail::trim(cols[1]));
        if (!rel)
            throw ParseError("unknown relation \"" + std::string(cols[1]) + "\"", line_no);
        try {
            lex.add(cols[0], *rel, cols[2]);
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) { return parse_lexicon(detail::read_file(path)); }

std::set<std::string> expand(const Lexicon& lexicon, std::string_view term, const RelationSet& relations,
                             std::size_t depth) {
    if (depth < 1)
        throw DomainError("expansion depth must be at least 1");
    const auto start = detail::to_lower(term);
    std::set<std::string> seen{start};
    std::deque<std::pair<std::string, std::size_t>> frontier{{start, 0}};
    while (!frontier.empty()) {
        auto [current, hops] = std::move(frontier.front());
        frontier.pop_front();
        if (hops == depth)
            continue;
        for (const auto& [rel, next] : lexicon.edges(current)) {
            if (!relations.contains(rel))
                continue;
            if (seen.insert(next).second)
                frontier.emplace_back(next, hops + 1);
        }
    }
    return seen;
}

} // namespace obi
