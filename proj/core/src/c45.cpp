#include "obi/c45.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json_util.hpp"
#include "obi/error.hpp"

namespace obi::c45 {
namespace {

std::vector<std::string> split_csv_row(std::string_view line, std::size_t line_no) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(detail::trim(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    if (quoted)
        throw ParseError("unterminated quote", line_no);
    cells.push_back(detail::trim(cell));
    return cells;
}

ClassCounts count_labels(const Dataset& d, const std::vector<std::size_t>& rows) {
    ClassCounts counts;
    for (auto r : rows)
        counts.add(d.rows[r].label);
    return counts;
}

/// Attribute values in ascending order with the rows holding each.
std::vector<std::pair<std::string, std::vector<std::size_t>>> partition(const Dataset& d,
                                                                        const std::vector<std::size_t>& rows,
                                                                        std::size_t attr) {
    std::map<std::string, std::vector<std::size_t>> parts;
    for (auto r : rows)
        parts[d.rows[r].values[attr]].push_back(r);
    return {parts.begin(), parts.end()};
}

double gain_over(const Dataset& d, const std::vector<std::size_t>& rows, std::size_t attr) {
    const auto n = static_cast<double>(rows.size());
    double remainder = 0.0;
    for (const auto& [value, subset] : partition(d, rows, attr))
        remainder += static_cast<double>(subset.size()) / n * entropy(count_labels(d, subset));
    return entropy(count_labels(d, rows)) - remainder;
}

class TreeBuilder {
public:
    TreeBuilder(const Dataset& d, const BuildOptions& o) : data_(d), options_(o) {}

    DecisionTree build() {
        std::vector<std::size_t> rows(data_.rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            rows[i] = i;
        std::vector<std::size_t> attrs(data_.attributes.size());
        for (std::size_t i = 0; i < attrs.size(); ++i)
            attrs[i] = i;
        tree_.attributes = data_.attributes;
        grow(rows, attrs, {});
        return std::move(tree_);
    }

private:
    std::size_t add_leaf(std::string label, std::size_t support) {
        tree_.nodes.push_back(Node{true, std::move(label), support, {}, {}});
        return tree_.nodes.size() - 1;
    }

    std::size_t grow(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& attrs,
                     const std::string& parent_majority) {
        if (rows.empty())
            return add_leaf(options_.fallback_class.value_or(parent_majority), 0);

        const auto counts = count_labels(data_, rows);
        const auto majority = counts.majority();
        if (counts.counts().size() == 1)
            return add_leaf(majority, rows.size());

        // Highest gain among attributes that still split this node; the
        // earliest declared attribute wins ties.
        std::optional<std::size_t> best;
        double best_gain = 0.0;
        for (auto a : attrs) {
            if (partition(data_, rows, a).size() < 2)
                continue;
            const auto g = gain_over(data_, rows, a);
            if (!best || g > best_gain + 1e-12) {
                best = a;
                best_gain = g;
            }
        }
        if (!best)
            return add_leaf(majority, rows.size());

        const auto self = tree_.nodes.size();
        tree_.nodes.push_back(Node{false, majority, rows.size(), data_.attributes[*best], {}});

        std::vector<std::size_t> rest;
        std::copy_if(attrs.begin(), attrs.end(), std::back_inserter(rest), [&](auto a) { return a != *best; });

        const auto n = static_cast<double>(rows.size());
        for (const auto& [value, subset] : partition(data_, rows, *best)) {
            std::size_t child;
            if (static_cast<double>(subset.size()) / n < options_.min_fraction)
                child = add_leaf(majority, subset.size());
            else
                child = grow(subset, rest, majority);
            tree_.nodes[self].branches.emplace_back(value, child);
        }
        return self;
    }

    const Dataset& data_;
    const BuildOptions& options_;
    DecisionTree tree_;
};

void collect_rules(const DecisionTree& tree, std::size_t node, std::vector<Condition>& path, RuleSet& out) {
    const auto& n = tree.nodes[node];
    if (n.leaf) {
        out.rules.push_back({path, n.label});
        return;
    }
    for (const auto& [value, child] : n.branches) {
        path.push_back({n.attribute, value});
        collect_rules(tree, child, path, out);
        path.pop_back();
    }
}

detail::json node_json(const DecisionTree& tree, std::size_t index) {
    const auto& n = tree.nodes[index];
    if (n.leaf)
        return {{"leaf", true}, {"class", n.label}, {"support", n.support}};
    detail::json branches = detail::json::array();
    for (const auto& [value, child] : n.branches)
        branches.push_back({{"value", value}, {"node", node_json(tree, child)}});
    return {{"leaf", false},
            {"attribute", n.attribute},
            {"majority", n.label},
            {"support", n.support},
            {"branches", std::move(branches)}};
}

std::size_t node_from_json(const detail::json& j, DecisionTree& tree) {
    const auto index = tree.nodes.size();
    tree.nodes.emplace_back();
    Node n;
    n.leaf = j.at("leaf").get<bool>();
    n.support = j.at("support").get<std::size_t>();
    if (n.leaf) {
        n.label = j.at("class").get<std::string>();
    } else {
        n.attribute = j.at("attribute").get<std::string>();
        n.label = j.at("majority").get<std::string>();
        for (const auto& b : j.at("branches"))
            n.branches.emplace_back(b.at("value").get<std::string>(), node_from_json(b.at("node"), tree));
        if (n.branches.empty())
            throw ParseError("split node on \"" + n.attribute + "\" has no branches");
    }
    tree.nodes[index] = std::move(n);
    return index;
}

detail::json parse_model(std::string_view text, std::string_view expected_type) {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const detail::json::parse_error& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("type", "") != expected_type)
        throw ParseError("not a " + std::string(expected_type) + " model");
    return j;
}

void render_node(const DecisionTree& tree, std::size_t index, int indent, std::ostringstream& out) {
    const auto& n = tree.nodes[index];
    for (const auto& [value, child] : n.branches) {
        const auto& c = tree.nodes[child];
        out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << n.attribute << " = " << value;
        if (c.leaf) {
            out << ": " << c.label << " (" << c.support << ")\n";
        } else {
            out << ":\n";
            render_node(tree, child, indent + 1, out);
        }
    }
}

} // namespace

std::size_t Dataset::attribute_index(std::string_view name) const {
    auto it = std::find(attributes.begin(), attributes.end(), name);
    if (it == attributes.end())
        throw LookupError("unknown attribute \"" + std::string(name) + "\"");
    return static_cast<std::size_t>(it - attributes.begin());
}

Dataset parse_csv(std::string_view content) {
    Dataset d;
    const auto lines = detail::split_lines(content);
    bool have_header = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (detail::trim(lines[i]).empty())
            continue;
        auto cells = split_csv_row(lines[i], i + 1);
        if (!have_header) {
            if (cells.size() < 2)
                throw ParseError("header needs at least one attribute and a class column", i + 1);
            d.class_name = cells.back();
            cells.pop_back();
            d.attributes = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != d.attributes.size() + 1)
            throw ParseError("expected " + std::to_string(d.attributes.size() + 1) + " cells, got " +
                                 std::to_string(cells.size()),
                             i + 1);
        Example e;
        e.label = std::move(cells.back());
        cells.pop_back();
        e.values = std::move(cells);
        d.rows.push_back(std::move(e));
    }
    if (!have_header)
        throw ParseError("missing CSV header");
    if (d.rows.empty())
        throw DomainError("dataset has no rows");
    return d;
}

Dataset load_csv(const std::filesystem::path& path) { return parse_csv(detail::read_file(path)); }

void ClassCounts::add(const std::string& label, std::size_t n) {
    total_ += n;
    for (auto& [l, c] : counts_)
        if (l == label) {
            c += n;
            return;
        }
    counts_.emplace_back(label, n);
}

const std::string& ClassCounts::majority() const {
    if (counts_.empty())
        throw DomainError("majority of an empty class distribution");
    const auto* best = &counts_.front();
    for (const auto& c : counts_)
        if (c.second > best->second)
            best = &c;
    return best->first;
}

double entropy(const ClassCounts& counts) {
    if (counts.total() == 0)
        throw DomainError("entropy of an empty class distribution");
    const auto total = static_cast<double>(counts.total());
    double h = 0.0;
    for (const auto& [label, c] : counts.counts()) {
        if (c == 0)
            continue;
        const double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

double entropy(const std::map<std::string, std::size_t>& counts) {
    ClassCounts cc;
    for (const auto& [label, c] : counts)
        cc.add(label, c);
    return entropy(cc);
}

double information_gain(const Dataset& dataset, std::string_view attribute) {
    const auto attr = dataset.attribute_index(attribute);
    if (dataset.rows.empty())
        throw DomainError("information gain over an empty dataset");
    std::vector<std::size_t> rows(dataset.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i] = i;
    return gain_over(dataset, rows, attr);
}

DecisionTree build_tree(const Dataset& dataset, const BuildOptions& options) {
    if (dataset.rows.empty())
        throw DomainError("cannot build a tree from an empty dataset");
    for (const auto& row : dataset.rows)
        if (row.values.size() != dataset.attributes.size())
            throw DomainError("row width does not match the attribute list");
    return TreeBuilder(dataset, options).build();
}

RuleSet extract_rules(const DecisionTree& tree, const Dataset& dataset) {
    RuleSet out = extract_rules(tree);
    ClassCounts counts;
    for (const auto& row : dataset.rows)
        counts.add(row.label);
    out.default_class = counts.majority();
    return out;
}

RuleSet extract_rules(const DecisionTree& tree) {
    RuleSet out;
    if (tree.nodes.empty())
        return out;
    out.default_class = tree.root().label;
    std::vector<Condition> path;
    collect_rules(tree, 0, path, out);
    return out;
}

std::string classify_tree(const DecisionTree& tree, const Record& record) {
    std::size_t index = 0;
    for (;;) {
        const auto& n = tree.nodes.at(index);
        if (n.leaf)
            return n.label;
        auto value = record.find(n.attribute);
        if (value == record.end())
            return n.label;
        auto branch = std::find_if(n.branches.begin(), n.branches.end(),
                                   [&](const auto& b) { return b.first == value->second; });
        if (branch == n.branches.end())
            return n.label;
        index = branch->second;
    }
}

std::string classify_rules(const RuleSet& rules, const Record& record) {
    for (const auto& rule : rules.rules) {
        const bool fires = std::all_of(rule.conditions.begin(), rule.conditions.end(), [&](const Condition& c) {
            auto it = record.find(c.attribute);
            return it != record.end() && it->second == c.value;
        });
        if (fires)
            return rule.label;
    }
    return rules.default_class;
}

Record to_record(const Dataset& dataset, const Example& row) {
    Record r;
    for (std::size_t i = 0; i < dataset.attributes.size() && i < row.values.size(); ++i)
        r.emplace(dataset.attributes[i], row.values[i]);
    return r;
}

std::string tree_to_json(const DecisionTree& tree) {
    detail::json j{{"type", "c45-tree"}, {"attributes", tree.attributes}};
    j["root"] = tree.nodes.empty() ? detail::json(nullptr) : node_json(tree, 0);
    return j.dump(2) + "\n";
}

DecisionTree tree_from_json(std::string_view text) {
    const auto j = parse_model(text, "c45-tree");
    try {
        DecisionTree tree;
        tree.attributes = j.at("attributes").get<std::vector<std::string>>();
        if (!j.at("root").is_null())
            node_from_json(j.at("root"), tree);
        return tree;
    } catch (const detail::json::exception& e) {
        throw ParseError(std::string("malformed tree model: ") + e.what());
    }
}

std::string rules_to_json(const RuleSet& rules) {
    detail::json list = detail::json::array();
    for (const auto& r : rules.rules) {
        detail::json conds = detail::json::array();
        for (const auto& c : r.conditions)
            conds.push_back({{"attribute", c.attribute}, {"value", c.value}});
        list.push_back({{"conditions", std::move(conds)}, {"class", r.label}});
    }
    detail::json j{{"type", "c45-rules"}, {"default_class", rules.default_class}, {"rules", std::move(list)}};
    return j.dump(2) + "\n";
}

RuleSet rules_from_json(std::string_view text) {
    const auto j = parse_model(text, "c45-rules");
    try {
        RuleSet rs;
        rs.default_class = j.at("default_class").get<std::string>();
        for (const auto& r : j.at("rules")) {
            Rule rule;
            rule.label = r.at("class").get<std::string>();
            for (const auto& c : r.at("conditions"))
                rule.conditions.push_back({c.at("attribute").get<std::string>(), c.at("value").get<std::string>()});
            rs.rules.push_back(std::move(rule));
        }
        return rs;
    } catch (const detail::json::exception& e) {
        throw ParseError(std::string("malformed rule set: ") + e.what());
    }
}

std::string render_tree(const DecisionTree& tree) {
    std::ostringstream out;
    if (tree.nodes.empty())
        return "";
    if (tree.root().leaf) {
        out << tree.root().label << " (" << tree.root().support << ")\n";
        return out.str();
    }
    render_node(tree, 0, 0, out);
    return out.str();
}

} // namespace obi::c45
