#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace obi::c45 {

struct Example {
    std::vector<std::string> values;
    std::string label;

    friend bool operator==(const Example&, const Example&) = default;
};

/// Categorical training data; each example has one value per attribute.
struct Dataset {
    std::vector<std::string> attributes;
    std::string class_name = "class";
    std::vector<Example> rows;

    /// Throws LookupError.
    std::size_t attribute_index(std::string_view name) const;
};

/// CSV with a header row; the last column is the class. Throws ParseError on
/// ragged rows and DomainError when there are no data rows.
Dataset load_csv(const std::filesystem::path& path);
Dataset parse_csv(std::string_view content);

using Record = std::map<std::string, std::string, std::less<>>;

/// Label counts in first-seen order, so ties resolve to the earliest label.
class ClassCounts {
public:
    void add(const std::string& label, std::size_t n = 1);
    std::size_t total() const noexcept { return total_; }
    const std::vector<std::pair<std::string, std::size_t>>& counts() const noexcept { return counts_; }
    /// Throws DomainError when empty.
    const std::string& majority() const;

private:
    std::vector<std::pair<std::string, std::size_t>> counts_;
    std::size_t total_ = 0;
};

/// Entropy in bits. Throws DomainError when the total is zero.
double entropy(const ClassCounts& counts);
double entropy(const std::map<std::string, std::size_t>& counts);

/// Throws LookupError for an unknown attribute, DomainError on an empty
/// dataset.
double information_gain(const Dataset& dataset, std::string_view attribute);

struct Node {
    bool leaf = true;
    /// Leaf class, or the majority class of a split node.
    std::string label;
    std::size_t support = 0;
    std::string attribute;
    /// value -> child node index, ascending by value.
    std::vector<std::pair<std::string, std::size_t>> branches;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Unpruned tree stored as a node arena; node 0 is the root.
struct DecisionTree {
    std::vector<std::string> attributes;
    std::vector<Node> nodes;

    const Node& root() const { return nodes.front(); }

    friend bool operator==(const DecisionTree&, const DecisionTree&) = default;
};

struct BuildOptions {
    /// Branches holding less than this fraction of their node's examples
    /// become majority-class leaves.
    double min_fraction = 0.001;
    /// Label for empty subsets; the parent's majority class when unset.
    std::optional<std::string> fallback_class;
};

/// Throws DomainError on an empty dataset.
DecisionTree build_tree(const Dataset& dataset, const BuildOptions& options = {});

struct Condition {
    std::string attribute;
    std::string value;

    friend bool operator==(const Condition&, const Condition&) = default;
};

struct Rule {
    std::vector<Condition> conditions;
    std::string label;

    friend bool operator==(const Rule&, const Rule&) = default;
};

struct RuleSet {
    std::vector<Rule> rules;
    std::string default_class;

    friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// One rule per leaf, depth-first with branches in ascending value order.
/// The default class is the dataset's majority class.
RuleSet extract_rules(const DecisionTree& tree, const Dataset& dataset);
/// Same, taking the default class from the root's majority.
RuleSet extract_rules(const DecisionTree& tree);

std::string classify_tree(const DecisionTree& tree, const Record& record);
std::string classify_rules(const RuleSet& rules, const Record& record);

Record to_record(const Dataset& dataset, const Example& row);

std::string tree_to_json(const DecisionTree& tree);
DecisionTree tree_from_json(std::string_view text);
std::string rules_to_json(const RuleSet& rules);
RuleSet rules_from_json(std::string_view text);

/// Indented text rendering, one node per line.
std::string render_tree(const DecisionTree& tree);

} // namespace obi::c45
