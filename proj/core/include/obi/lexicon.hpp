#pragma once

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace obi {

enum class LexRelation { synonym, hypernym, hyponym };

std::string_view to_string(LexRelation r);

using RelationSet = std::set<LexRelation>;

/// Flat synonym / hypernym / hyponym dictionary.
///
/// A row `a REL b` reads "b is a REL of a" and is stored as the edge
/// a -> (REL, b). Loading closes the relation under SYNONYM symmetry and
/// HYPERNYM/HYPONYM inversion, so `a HYPONYM b` also yields b -> (HYPERNYM, a).
/// All terms are lowercased.
class Lexicon {
public:
    using Edge = std::pair<LexRelation, std::string>;

    /// Adds a row with closure applied. Throws ValidationError on a
    /// self-relation (after lowercasing) or an empty term.
    void add(std::string_view from, LexRelation rel, std::string_view to);

    const std::set<Edge>& edges(std::string_view term) const;

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::map<std::string, std::set<Edge>, std::less<>>& entries() const noexcept { return entries_; }

private:
    void insert(const std::string& from, LexRelation rel, const std::string& to);

    std::map<std::string, std::set<Edge>, std::less<>> entries_;
};

/// TSV `term<TAB>RELATION<TAB>term`; `#` comment lines and blank lines are
/// ignored. Throws ParseError (with line number) on a bad row or unknown
/// relation token, ValidationError on a self-relation.
Lexicon load_lexicon(const std::filesystem::path& path);
Lexicon parse_lexicon(std::string_view content);

/// Terms reachable from `term` over the selected relations in at most
/// `depth` hops, `term` included. Throws DomainError when depth < 1.
std::set<std::string> expand(const Lexicon& lexicon, std::string_view term, const RelationSet& relations,
                             std::size_t depth = 1);

} // namespace obi
