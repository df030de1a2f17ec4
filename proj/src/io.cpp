#include "bshell/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bshell {

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["ground"] = m.ground().labels;
  Json flats = Json::array();
  for (Subset f : m.flats()) {
    Json fl = Json::array();
    for (int i = 0; i < m.ground_size(); ++i)
      if (f & (Subset{1} << i)) fl.push_back(m.ground().labels[i]);
    flats.push_back(std::move(fl));
  }
  j["flats"] = std::move(flats);
  return j;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.contains("ground") || !j.contains("flats"))
    throw InputError("matroid JSON needs 'ground' and 'flats'");
  GroundSet g;
  for (const auto& l : j.at("ground")) g.labels.push_back(l.get<std::string>());
  std::vector<Subset> flats;
  for (const auto& fl : j.at("flats")) {
    Subset s = 0;
    for (const auto& l : fl) {
      int idx = g.index_of(l.get<std::string>());
      if (idx < 0) throw InputError("flat mentions unknown label '" + l.get<std::string>() + "'");
      s |= Subset{1} << idx;
    }
    flats.push_back(s);
  }
  return Matroid::validate(std::move(g), std::move(flats));
}

Json building_to_json(const BuildingSet& b) {
  Json j;
  Json members = Json::array();
  for (Subset x : b.members) {
    Json fl = Json::array();
    for (int i = 0; i < b.matroid.ground_size(); ++i)
      if (x & (Subset{1} << i)) fl.push_back(b.matroid.ground().labels[i]);
    members.push_back(std::move(fl));
  }
  j["members"] = std::move(members);
  return j;
}

BuildingSet building_from_json(const Matroid& m, const Json& j) {
  if (!j.contains("members")) throw InputError("building-set JSON needs 'members'");
  std::vector<Subset> members;
  for (const auto& fl : j.at("members")) {
    Subset s = 0;
    for (const auto& l : fl) {
      int idx = m.ground().index_of(l.get<std::string>());
      if (idx < 0) throw InputError("member mentions unknown label '" + l.get<std::string>() + "'");
      s |= Subset{1} << idx;
    }
    members.push_back(s);
  }
  return make_building_set(m, std::move(members));
}

Json cubical_to_json(const Matroid& m, const CubicalFunction& c) {
  Json values = Json::object();
  // iterate in canonical member order for stable output
  std::vector<Subset> keys;
  for (const auto& [k, v] : c.values) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), canon_less);
  for (Subset k : keys) values[subset_key(m.ground(), k)] = rat_to_string(c.values.at(k));
  Json j;
  j["c"] = std::move(values);
  return j;
}

CubicalFunction cubical_from_json(const Matroid& m, const Json& j) {
  if (!j.contains("c")) throw InputError("c-vector JSON needs 'c'");
  CubicalFunction c;
  for (const auto& [key, val] : j.at("c").items()) {
    Subset s = subset_from_key(m.ground(), key);
    if (!m.is_flat(s)) throw InputError("c key '" + key + "' is not a flat");
    c.values[s] = rat_from_string(val.get<std::string>());
  }
  return c;
}

Json gamma_to_json(const RatVec& gamma) {
  Json j = Json::array();
  for (const Rat& r : gamma) j.push_back(rat_to_string(r));
  return j;
}

RatVec gamma_from_json(const Json& j) {
  RatVec out;
  for (const auto& v : j) out.push_back(rat_from_string(v.get<std::string>()));
  return out;
}

Json facet_to_json(const Matroid& m, const NestedSet& n) {
  Json j = Json::array();
  for (Subset x : n.flats) j.push_back(subset_key(m.ground(), x));
  return j;
}

NestedSet facet_from_json(const BuildingSet& b, const Json& j) {
  std::vector<Subset> flats;
  for (const auto& key : j) flats.push_back(subset_from_key(b.matroid.ground(), key.get<std::string>()));
  return make_nested(b, std::move(flats));
}

Json facets_to_json(const BuildingSet& b, const std::vector<NestedSet>& fs) {
  Json full = Json::array(), red = Json::array();
  for (const NestedSet& n : fs) {
    full.push_back(facet_to_json(b.matroid, n));
    Json r = Json::array();
    for (Subset x : reduced(b, n)) r.push_back(subset_key(b.matroid.ground(), x));
    red.push_back(std::move(r));
  }
  Json j;
  j["full"] = std::move(full);
  j["reduced"] = std::move(red);
  return j;
}

std::string facet_key(const Matroid& m, const NestedSet& n) {
  std::string out;
  for (size_t i = 0; i < n.flats.size(); ++i) {
    if (i) out += '|';
    out += subset_key(m.ground(), n.flats[i]);
  }
  return out;
}

Json vertex_report_to_json(const BuildingSet& b, const std::vector<VertexSolution>& sols) {
  Json j = Json::object();
  for (const auto& sol : sols) {
    Json entry;
    Json lambda = Json::object();
    for (size_t i = 0; i < sol.facet.flats.size(); ++i)
      lambda[subset_key(b.matroid.ground(), sol.facet.flats[i])] = rat_to_string(sol.lambda[i]);
    entry["lambda"] = std::move(lambda);
    Json point = Json::array();
    for (const Rat& r : sol.point) point.push_back(rat_to_string(r));
    entry["point"] = std::move(point);
    entry["interior"] = sol.interior;
    j[facet_key(b.matroid, sol.facet)] = std::move(entry);
  }
  return j;
}

Json order_report_to_json(const BuildingSet& b, const FacetOrder& order,
                          const CubicalFunction* c, const RatVec* gamma) {
  Json j;
  j["provenance"] = provenance_name(order.provenance);
  if (gamma) j["gamma"] = gamma_to_json(*gamma);
  Json list = Json::array();
  for (const NestedSet& n : order.facets) {
    Json entry;
    entry["facet"] = facet_to_json(b.matroid, n);
    if (order.provenance == Provenance::NL) {
      NLLabeling lab = nl_labeling(b.matroid, n);
      Json seq = Json::array();
      for (Subset a : lab.atom_sequence()) seq.push_back(subset_key(b.matroid.ground(), a));
      entry["labeling"] = std::move(seq);
    } else if (order.provenance == Provenance::EL) {
      // Edge labels of the chain: smallest atom below each flat but not
      // below its predecessor. Canonical order of a chain is chain order.
      Json seq = Json::array();
      Subset prev = 0;
      for (Subset x : n.flats) {
        for (Subset a : b.matroid.atoms())
          if (subset_le(a, x) && !subset_le(a, prev)) {
            seq.push_back(subset_key(b.matroid.ground(), a));
            break;
          }
        prev = x;
      }
      entry["labeling"] = std::move(seq);
    }
    if (c && (order.provenance == Provenance::NC || order.provenance == Provenance::USER)) {
      VertexSolution sol = vertex(b, n, *c);
      Json point = Json::array();
      for (const Rat& r : sol.point) point.push_back(rat_to_string(r));
      entry["point"] = std::move(point);
      if (gamma) entry["inner_product"] = rat_to_string(inner_product(sol.point, *gamma));
    }
    list.push_back(std::move(entry));
  }
  j["facets"] = std::move(list);
  return j;
}

Json shelling_report_to_json(const Matroid& m, const ShellingReport& rep,
                             const std::vector<NestedSet>& order) {
  Json j;
  j["verdict"] = rep.verdict;
  if (rep.first_violation) {
    Json v;
    v["j"] = rep.first_violation->first;
    v["i"] = rep.first_violation->second;
    v["facet_j"] = facet_to_json(m, order[rep.first_violation->first]);
    v["facet_i"] = facet_to_json(m, order[rep.first_violation->second]);
    j["first_violation"] = std::move(v);
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("JSON parse error in '" + path + "': " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace bshell
