#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "sbp/pseudoaction.hpp"
#include "sbp/semibiproduct.hpp"

namespace sbp::json_io {

/// All parsing and emission uses order-preserving JSON so that emitted
/// documents re-serialize to identical bytes after a parse round trip.
using Json = nlohmann::ordered_json;

/// Named monoids available when resolving maps and diagrams.
class MonoidContext {
public:
    void add(MonoidPtr m);
    MonoidPtr resolve(const std::string& name) const;  // throws Error when absent
    bool contains(const std::string& name) const;

private:
    std::map<std::string, MonoidPtr> by_name_;
};

/// {"name", "elements", "identity", "table"}; unknown keys rejected,
/// duplicate or unknown element names reported through validate_monoid.
MonoidData monoid_data_from_json(const Json& j);
MonoidPtr monoid_from_json(const Json& j);
Json monoid_to_json(const FiniteMonoid& m);

/// {"domain", "codomain", "kind", "map"} with kind "hom" or "pointed";
/// an optional "monoids" array supplies carriers not in the context.
PointedMap pointed_map_from_json(const Json& j, const MonoidContext& ctx);
Homomorphism hom_from_json(const Json& j, const MonoidContext& ctx);
Json map_to_json(const PointedMap& m, bool is_hom);

/// {"X", "A", "B", "p", "k", "q", "s"} with monoids inline under
/// "monoids" or supplied through the context.
SemiBiproduct diagram_from_json(const Json& j, const MonoidContext& ctx = {});
Json diagram_to_json(const SemiBiproduct& d);  // bundle form, monoids inline

/// {"X": monoid, "B": monoid, "rho": {"x,b": x'}, "phi": {"b,x": x'},
/// "gamma": {"b,b'": x'}}. Keys are element names joined by a comma at
/// paren depth zero.
PseudoAction pa_from_json(const Json& j);
Json pa_to_json(const PseudoAction& pa);

/// True when the document carries pseudo-action keys rather than diagram
/// keys.
bool looks_like_pseudo_action(const Json& j);

Json parse_file(const std::string& path);   // throws Error on I/O or syntax
Json parse_text(const std::string& text);

}  // namespace sbp::json_io
