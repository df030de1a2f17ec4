#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bshell/geometry.hpp"
#include "bshell/orders.hpp"
#include "bshell/shelling.hpp"

namespace bshell {

using Json = nlohmann::ordered_json;

// Matroid JSON: {"ground": ["0","1",...], "flats": [[], ["0"], ...]};
// ground order is significant.
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

// Building-set JSON: {"members": [["0"], ["1","2","3"], ...]}.
Json building_to_json(const BuildingSet& b);
BuildingSet building_from_json(const Matroid& m, const Json& j);

// c-vector JSON: {"c": {"0": "3", "1,2,3": "-3", ...}}; flats keyed by
// comma-joined labels in ground order, values as exact "p/q" strings.
Json cubical_to_json(const Matroid& m, const CubicalFunction& c);
CubicalFunction cubical_from_json(const Matroid& m, const Json& j);

// gamma: array of "p/q" strings in ground order.
Json gamma_to_json(const RatVec& gamma);
RatVec gamma_from_json(const Json& j);

// A facet as an array of flat keys; a flat key is its comma-joined labels.
Json facet_to_json(const Matroid& m, const NestedSet& n);
NestedSet facet_from_json(const BuildingSet& b, const Json& j);

// Facet list export: full and reduced forms.
Json facets_to_json(const BuildingSet& b, const std::vector<NestedSet>& fs);

// Vertex report: map "flat|flat|..." -> {"lambda": {...}, "point": [...],
// "interior": bool}.
Json vertex_report_to_json(const BuildingSet& b, const std::vector<VertexSolution>& sols);

// Order report: provenance, ordered facets with labelings and, for NC/USER
// orders, vertex points and inner products against a supplied gamma.
Json order_report_to_json(const BuildingSet& b, const FacetOrder& order,
                          const CubicalFunction* c, const RatVec* gamma);

Json shelling_report_to_json(const Matroid& m, const ShellingReport& rep,
                             const std::vector<NestedSet>& order);

std::string facet_key(const Matroid& m, const NestedSet& n);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bshell
