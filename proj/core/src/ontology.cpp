#include "obi/ontology.hpp"

#include "json_util.hpp"
#include "obi/error.hpp"

namespace obi {

Ontology Ontology::from_specs(std::string name, const std::vector<ConceptSpec>& specs) {
    Ontology o;
    o.name_ = std::move(name);
    o.concepts_.reserve(specs.size());
    for (const auto& spec : specs) {
        auto cname = detail::to_lower(detail::trim(spec.name));
        if (cname.empty())
            throw ValidationError("concept with an empty name");
        if (spec.weight && !(*spec.weight >= 0.0 && *spec.weight <= 1.0))
            throw ValidationError("weight of concept \"" + cname + "\" outside [0,1]: " +
                                  std::to_string(*spec.weight));
        if (!o.position_.emplace(cname, o.concepts_.size()).second)
            throw ValidationError("duplicate concept \"" + cname + "\"");
        Concept c;
        c.name = std::move(cname);
        if (spec.parent)
            c.parent = detail::to_lower(detail::trim(*spec.parent));
        o.concepts_.push_back(std::move(c));
    }

    for (auto& c : o.concepts_) {
        if (!c.parent) {
            o.roots_.push_back(c.name);
            continue;
        }
        auto it = o.position_.find(*c.parent);
        if (it == o.position_.end())
            throw ValidationError("concept \"" + c.name + "\" has unknown parent \"" + *c.parent + "\"");
        if (*c.parent == c.name)
            throw ValidationError("cycle through concept \"" + c.name + "\"");
    }
    for (const auto& c : o.concepts_)
        if (c.parent)
            o.concepts_[o.position_.at(*c.parent)].children.push_back(c.name);

    // Every chain of parent links must reach a root within n steps.
    enum class Mark { unvisited, active, done };
    std::vector<Mark> mark(o.concepts_.size(), Mark::unvisited);
    for (std::size_t start = 0; start < o.concepts_.size(); ++start) {
        std::vector<std::size_t> path;
        auto i = start;
        while (mark[i] == Mark::unvisited) {
            mark[i] = Mark::active;
            path.push_back(i);
            if (!o.concepts_[i].parent)
                break;
            i = o.position_.at(*o.concepts_[i].parent);
            if (mark[i] == Mark::active)
                throw ValidationError("cycle through concept \"" + o.concepts_[i].name + "\"");
        }
        for (auto p : path)
            mark[p] = Mark::done;
    }

    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& w = specs[i].weight;
        o.concepts_[i].weight = w ? *w : 1.0 / (1.0 + static_cast<double>(o.depth(o.concepts_[i].name)));
    }
    return o;
}

const Concept* Ontology::find(std::string_view name) const {
    auto it = position_.find(name);
    return it == position_.end() ? nullptr : &concepts_[it->second];
}

const Concept& Ontology::at(std::string_view name) const {
    if (const auto* c = find(name))
        return *c;
    throw LookupError("unknown concept \"" + std::string(name) + "\"");
}

std::size_t Ontology::depth(std::string_view name) const {
    std::size_t d = 0;
    for (const auto* c = &at(name); c->parent; c = &at(*c->parent))
        ++d;
    return d;
}

Ontology parse_ontology(std::string_view json_text) {
    detail::json j;
    try {
        j = detail::json::parse(json_text);
    } catch (const detail::json::parse_error& e) {
        throw ParseError(std::string("invalid ontology JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("concepts") || !j["concepts"].is_array())
        throw ParseError("ontology must be an object with a \"concepts\" array");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw ParseError("ontology \"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    std::vector<ConceptSpec> specs;
    std::size_t pos = 0;
    for (const auto& c : j["concepts"]) {
        const auto where = "concept #" + std::to_string(pos++);
        if (!c.is_object() || !c.contains("name") || !c["name"].is_string())
            throw ParseError(where + ": expected an object with a string \"name\"");
        ConceptSpec spec{c["name"].get<std::string>(), std::nullopt, std::nullopt};
        if (c.contains("parent") && !c["parent"].is_null()) {
            if (!c["parent"].is_string())
                throw ParseError(where + ": \"parent\" must be a string or null");
            spec.parent = c["parent"].get<std::string>();
        }
        if (c.contains("weight") && !c["weight"].is_null()) {
            if (!c["weight"].is_number())
                throw ParseError(where + ": \"weight\" must be a number or null");
            spec.weight = c["weight"].get<double>();
        }
        specs.push_back(std::move(spec));
    }
    return Ontology::from_specs(std::move(name), specs);
}

Ontology load_ontology(const std::filesystem::path& path) { return parse_ontology(detail::read_file(path)); }

ConceptWeights concepts_weights(const Ontology& ontology) {
    ConceptWeights cw;
    cw.names.reserve(ontology.size());
    cw.weights.reserve(ontology.size());
    for (const auto& c : ontology.concepts()) {
        cw.names.push_back(c.name);
        cw.weights.push_back(c.weight);
    }
    return cw;
}

std::set<std::string> descendants(const Ontology& ontology, std::string_view name) {
    std::set<std::string> out;
    std::vector<const Concept*> stack{&ontology.at(name)};
    while (!stack.empty()) {
        const auto* c = stack.back();
        stack.pop_back();
        out.insert(c->name);
        for (const auto& child : c->children)
            stack.push_back(&ontology.at(child));
    }
    return out;
}

std::vector<double> default_weights(const Ontology& ontology) {
    std::vector<double> w;
    w.reserve(ontology.size());
    for (const auto& c : ontology.concepts())
        w.push_back(1.0 / (1.0 + static_cast<double>(ontology.depth(c.name))));
    return w;
}

} // namespace obi
