#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace obi {

struct Concept {
    std::string name;
    double weight = 1.0;
    std::optional<std::string> parent;
    std::vector<std::string> children;
};

/// Input row for building an ontology; an absent weight falls back to the
/// depth rule.
struct ConceptSpec {
    std::string name;
    std::optional<std::string> parent;
    std::optional<double> weight;
};

/// Parallel (C_1..C_n), (r_1..r_n) lists in the ontology's fixed order.
struct ConceptWeights {
    std::vector<std::string> names;
    std::vector<double> weights;
};

/// A forest of weighted concepts. Concept order is declaration order.
class Ontology {
public:
    Ontology() = default;

    /// Validates and links the specs. Throws ValidationError on a duplicate
    /// or empty name, a weight outside [0,1], a dangling parent or a cycle.
    static Ontology from_specs(std::string name, const std::vector<ConceptSpec>& specs);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Concept>& concepts() const noexcept { return concepts_; }
    const std::vector<std::string>& roots() const noexcept { return roots_; }
    std::size_t size() const noexcept { return concepts_.size(); }

    const Concept* find(std::string_view name) const;
    /// Throws LookupError.
    const Concept& at(std::string_view name) const;

    /// Number of edges between the concept and its root.
    std::size_t depth(std::string_view name) const;

private:
    std::string name_;
    std::vector<Concept> concepts_;
    std::vector<std::string> roots_;
    std::map<std::string, std::size_t, std::less<>> position_;
};

/// JSON `{"name": ..., "concepts": [{"name", "parent", "weight"}, ...]}`.
Ontology load_ontology(const std::filesystem::path& path);
Ontology parse_ontology(std::string_view json_text);

ConceptWeights concepts_weights(const Ontology& ontology);

/// The concept and everything strictly below it. Throws LookupError.
std::set<std::string> descendants(const Ontology& ontology, std::string_view name);

/// r_i = 1 / (1 + depth(C_i)), roots at depth 0.
std::vector<double> default_weights(const Ontology& ontology);

} // namespace obi
