#include "sbp/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sbp::json_io {

namespace {

void require_keys(const Json& j, const char* what, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw Error(std::string(what) + ": expected a JSON object");
    for (const auto& key : required)
        if (!j.contains(key)) throw Error(std::string(what) + ": missing key \"" + key + "\"");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            throw Error(std::string(what) + ": unknown key \"" + key + "\"");
    }
}

std::string require_string(const Json& j, const char* what, const std::string& key) {
    if (!j.at(key).is_string())
        throw Error(std::string(what) + ": \"" + key + "\" must be a string");
    return j.at(key).get<std::string>();
}

/// Splits "x,b" at the comma at paren depth zero.
std::pair<std::string, std::string> split_pair_key(const std::string& key) {
    int depth = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
        const char c = key[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == ',' && depth == 0)
            return {key.substr(0, i), key.substr(i + 1)};
    }
    throw Error("pseudo-action: key \"" + key + "\" is not an element pair");
}

std::size_t resolve_element(const FiniteMonoid& m, const std::string& name,
                            const char* what) {
    auto i = m.index_of(name);
    if (!i)
        throw Error(std::string(what) + ": unknown element \"" + name + "\" of monoid " +
                    m.name());
    return *i;
}

}  // namespace

void MonoidContext::add(MonoidPtr m) {
    if (!m) throw Error("monoid context: null monoid");
    const std::string name = m->name();
    auto it = by_name_.find(name);
    if (it != by_name_.end()) {
        if (!it->second->same_structure(*m))
            throw Error("monoid context: conflicting definitions for \"" + name + "\"");
        return;
    }
    by_name_.emplace(name, std::move(m));
}

MonoidPtr MonoidContext::resolve(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw Error("unknown monoid \"" + name + "\"");
    return it->second;
}

bool MonoidContext::contains(const std::string& name) const {
    return by_name_.count(name) != 0;
}

MonoidData monoid_data_from_json(const Json& j) {
    require_keys(j, "monoid", {"name", "elements", "identity", "table"});
    MonoidData data;
    data.name = require_string(j, "monoid", "name");
    if (!j.at("elements").is_array()) throw Error("monoid: \"elements\" must be an array");
    for (const auto& e : j.at("elements")) {
        if (!e.is_string()) throw Error("monoid: element names must be strings");
        data.elements.push_back(e.get<std::string>());
    }
    data.identity = require_string(j, "monoid", "identity");
    if (!j.at("table").is_array()) throw Error("monoid: \"table\" must be an array of rows");
    for (const auto& row : j.at("table")) {
        if (!row.is_array()) throw Error("monoid: table rows must be arrays");
        std::vector<std::string> cells;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw Error("monoid: table cells must be element names");
            cells.push_back(cell.get<std::string>());
        }
        data.table.push_back(std::move(cells));
    }
    return data;
}

MonoidPtr monoid_from_json(const Json& j) { return make_monoid(monoid_data_from_json(j)); }

Json monoid_to_json(const FiniteMonoid& m) {
    Json j;
    j["name"] = m.name();
    j["elements"] = m.elements();
    j["identity"] = m.element_name(m.identity());
    Json table = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m.element_name(m.op(i, k)));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

namespace {

struct ParsedMap {
    MonoidPtr domain, codomain;
    std::vector<std::size_t> mapping;
    bool is_hom = false;
};

ParsedMap parse_map(const Json& j, const MonoidContext& ctx) {
    require_keys(j, "map", {"domain", "codomain", "kind", "map"}, {"monoids"});
    MonoidContext local = ctx;
    if (j.contains("monoids")) {
        if (!j.at("monoids").is_array()) throw Error("map: \"monoids\" must be an array");
        for (const auto& m : j.at("monoids")) local.add(monoid_from_json(m));
    }

    ParsedMap parsed;
    parsed.domain = local.resolve(require_string(j, "map", "domain"));
    parsed.codomain = local.resolve(require_string(j, "map", "codomain"));
    const std::string kind = require_string(j, "map", "kind");
    if (kind == "hom") parsed.is_hom = true;
    else if (kind == "pointed") parsed.is_hom = false;
    else throw Error("map: \"kind\" must be \"hom\" or \"pointed\"");

    if (!j.at("map").is_object()) throw Error("map: \"map\" must be an object");
    parsed.mapping.assign(parsed.domain->size(), parsed.codomain->size());
    for (const auto& [from, to] : j.at("map").items()) {
        if (!to.is_string()) throw Error("map: values must be element names");
        const std::size_t i = resolve_element(*parsed.domain, from, "map");
        if (parsed.mapping[i] != parsed.codomain->size())
            throw Error("map: element \"" + from + "\" assigned twice");
        parsed.mapping[i] = resolve_element(*parsed.codomain, to.get<std::string>(), "map");
    }
    for (std::size_t i = 0; i < parsed.mapping.size(); ++i)
        if (parsed.mapping[i] == parsed.codomain->size())
            throw Error("map: no value for element \"" + parsed.domain->element_name(i) + "\"");
    return parsed;
}

}  // namespace

PointedMap pointed_map_from_json(const Json& j, const MonoidContext& ctx) {
    auto parsed = parse_map(j, ctx);
    return PointedMap(parsed.domain, parsed.codomain, std::move(parsed.mapping));
}

Homomorphism hom_from_json(const Json& j, const MonoidContext& ctx) {
    auto parsed = parse_map(j, ctx);
    if (!parsed.is_hom) throw Error("map: expected kind \"hom\"");
    return Homomorphism(parsed.domain, parsed.codomain, std::move(parsed.mapping));
}

Json map_to_json(const PointedMap& m, bool is_hom) {
    Json j;
    j["domain"] = m.domain()->name();
    j["codomain"] = m.codomain()->name();
    j["kind"] = is_hom ? "hom" : "pointed";
    Json mapping = Json::object();
    for (std::size_t i = 0; i < m.domain()->size(); ++i)
        mapping[m.domain()->element_name(i)] = m.codomain()->element_name(m(i));
    j["map"] = std::move(mapping);
    return j;
}

SemiBiproduct diagram_from_json(const Json& j, const MonoidContext& ctx) {
    require_keys(j, "diagram", {"X", "A", "B", "p", "k", "q", "s"}, {"monoids"});
    MonoidContext local = ctx;
    if (j.contains("monoids")) {
        if (!j.at("monoids").is_array()) throw Error("diagram: \"monoids\" must be an array");
        for (const auto& m : j.at("monoids")) local.add(monoid_from_json(m));
    }
    MonoidPtr X = local.resolve(require_string(j, "diagram", "X"));
    MonoidPtr A = local.resolve(require_string(j, "diagram", "A"));
    MonoidPtr B = local.resolve(require_string(j, "diagram", "B"));

    auto p = parse_map(j.at("p"), local);
    auto k = parse_map(j.at("k"), local);
    if (!p.is_hom || !k.is_hom) throw Error("diagram: p and k must have kind \"hom\"");
    return SemiBiproduct::create(
        X, A, B, Homomorphism(p.domain, p.codomain, std::move(p.mapping)),
        Homomorphism(k.domain, k.codomain, std::move(k.mapping)),
        pointed_map_from_json(j.at("q"), local), pointed_map_from_json(j.at("s"), local));
}

Json diagram_to_json(const SemiBiproduct& d) {
    Json j;
    j["X"] = d.X->name();
    j["A"] = d.A->name();
    j["B"] = d.B->name();
    j["p"] = map_to_json(d.p, true);
    j["k"] = map_to_json(d.k, true);
    j["q"] = map_to_json(d.q, false);
    j["s"] = map_to_json(d.s, false);
    Json monoids = Json::array();
    monoids.push_back(monoid_to_json(*d.X));
    monoids.push_back(monoid_to_json(*d.A));
    monoids.push_back(monoid_to_json(*d.B));
    j["monoids"] = std::move(monoids);
    return j;
}

namespace {

std::vector<std::size_t> parse_component(const Json& j, const char* name,
                                         const FiniteMonoid& first,
                                         const FiniteMonoid& second,
                                         const FiniteMonoid& values) {
    if (!j.is_object())
        throw Error(std::string("pseudo-action: \"") + name + "\" must be an object");
    const std::size_t sentinel = values.size();
    std::vector<std::size_t> out(first.size() * second.size(), sentinel);
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw Error(std::string("pseudo-action: values of \"") + name +
                        "\" must be element names");
        auto [first_name, second_name] = split_pair_key(key);
        const std::size_t i = resolve_element(first, first_name, name);
        const std::size_t k = resolve_element(second, second_name, name);
        if (out[i * second.size() + k] != sentinel)
            throw Error(std::string("pseudo-action: \"") + name + "\" assigns \"" + key +
                        "\" twice");
        out[i * second.size() + k] = resolve_element(values, value.get<std::string>(), name);
    }
    for (std::size_t idx = 0; idx < out.size(); ++idx)
        if (out[idx] == sentinel)
            throw Error(std::string("pseudo-action: \"") + name + "\" is not total");
    return out;
}

}  // namespace

PseudoAction pa_from_json(const Json& j) {
    require_keys(j, "pseudo-action", {"X", "B", "rho", "phi", "gamma"});
    MonoidPtr X = monoid_from_json(j.at("X"));
    MonoidPtr B = monoid_from_json(j.at("B"));
    return PseudoAction::create(X, B, parse_component(j.at("rho"), "rho", *X, *B, *X),
                                parse_component(j.at("phi"), "phi", *B, *X, *X),
                                parse_component(j.at("gamma"), "gamma", *B, *B, *X));
}

Json pa_to_json(const PseudoAction& pa) {
    Json j;
    j["X"] = monoid_to_json(*pa.X);
    j["B"] = monoid_to_json(*pa.B);
    Json rho = Json::object(), phi = Json::object(), gamma = Json::object();
    for (std::size_t x = 0; x < pa.X->size(); ++x)
        for (std::size_t b = 0; b < pa.B->size(); ++b)
            rho[pa.X->element_name(x) + "," + pa.B->element_name(b)] =
                pa.X->element_name(pa.rho_at(x, b));
    for (std::size_t b = 0; b < pa.B->size(); ++b)
        for (std::size_t x = 0; x < pa.X->size(); ++x)
            phi[pa.B->element_name(b) + "," + pa.X->element_name(x)] =
                pa.X->element_name(pa.phi_at(b, x));
    for (std::size_t b = 0; b < pa.B->size(); ++b)
        for (std::size_t b2 = 0; b2 < pa.B->size(); ++b2)
            gamma[pa.B->element_name(b) + "," + pa.B->element_name(b2)] =
                pa.X->element_name(pa.gamma_at(b, b2));
    j["rho"] = std::move(rho);
    j["phi"] = std::move(phi);
    j["gamma"] = std::move(gamma);
    return j;
}

bool looks_like_pseudo_action(const Json& j) {
    return j.is_object() && j.contains("rho") && j.contains("phi") && j.contains("gamma");
}

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str());
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);  // strict: no trailing commas, no comments
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("JSON parse error: ") + e.what());
    }
}

}  // namespace sbp::json_io
