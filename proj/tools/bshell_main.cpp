// Command-line front door: instance resolution, reports, verification
// pipeline and the NL-shelling search harness.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "bshell/corpus.hpp"
#include "bshell/generators.hpp"
#include "bshell/io.hpp"
#include "bshell/search.hpp"
#include "bshell/shelling.hpp"
#include "bshell/threads.hpp"

using namespace bshell;

namespace {

struct InstanceFlags {
  std::string matroid_spec;
  std::string building_spec = "minimal";
  std::string c_spec = "auto";
  std::string gamma_spec;
  std::string ground_order;
  bool json = false;
  std::string out;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

Matroid resolve_matroid(const std::string& spec) {
  if (spec.empty()) throw InputError("--matroid is required");
  if (spec == "broom") return broom_matroid();
  if (spec.rfind("uniform:", 0) == 0) {
    auto parts = split(spec.substr(8), ',');
    if (parts.size() != 2) throw InputError("uniform spec is uniform:r,n");
    return uniform_matroid(std::stoi(parts[0]), std::stoi(parts[1]));
  }
  if (spec.rfind("boolean:", 0) == 0) return boolean_matroid(std::stoi(spec.substr(8)));
  if (spec.rfind("graphic:", 0) == 0) {
    std::vector<std::pair<int, int>> edges;
    int nv = 0;
    for (const auto& e : split(spec.substr(8), ',')) {
      auto uv = split(e, '-');
      if (uv.size() != 2) throw InputError("graphic spec is graphic:u-v,u-v,...");
      int u = std::stoi(uv[0]), v = std::stoi(uv[1]);
      edges.emplace_back(u, v);
      nv = std::max({nv, u + 1, v + 1});
    }
    return graphic_matroid(nv, edges);
  }
  if (spec.rfind("directsum:", 0) == 0) {
    auto parts = split(spec.substr(10), '+');
    if (parts.size() < 2) throw InputError("directsum spec is directsum:spec+spec");
    Matroid acc = relabel_sequential(resolve_matroid(parts[0]));
    for (size_t i = 1; i < parts.size(); ++i) {
      Matroid next = resolve_matroid(parts[i]);
      GroundSet shifted;
      for (int k = 0; k < next.ground_size(); ++k)
        shifted.labels.push_back(std::to_string(acc.ground_size() + k));
      acc = direct_sum(acc, Matroid::validate(shifted, next.flats()));
    }
    return acc;
  }
  return matroid_from_json(read_json_file(spec));
}

Matroid apply_ground_order(Matroid m, const std::string& order_spec) {
  if (order_spec.empty()) return m;
  std::vector<int> order;
  for (const auto& label : split(order_spec, ',')) {
    int idx = m.ground().index_of(label);
    if (idx < 0) throw InputError("--ground-order mentions unknown label '" + label + "'");
    order.push_back(idx);
  }
  return reorder_ground(m, order);
}

BuildingSet resolve_building(const Matroid& m, const std::string& spec) {
  if (spec == "minimal") return minimal_building_set(m);
  if (spec == "maximal") return maximal_building_set(m);
  return building_from_json(m, read_json_file(spec));
}

CubicalFunction resolve_c(const BuildingSet& b, const std::string& spec) {
  if (spec == "auto") return default_cubical(b, 0);
  if (spec.rfind("auto:", 0) == 0)
    return default_cubical(b, std::stoull(spec.substr(5)));
  CubicalFunction c = cubical_from_json(b.matroid, read_json_file(spec));
  for (Subset x : b.members)
    if (!c.values.count(x))
      throw InputError("c file is missing a value for member " +
                       subset_pretty(b.matroid.ground(), x));
  return c;
}

RatVec resolve_gamma(const Matroid& m, const std::string& spec) {
  RatVec gamma;
  for (const auto& part : split(spec, ',')) gamma.push_back(rat_from_string(part));
  if (static_cast<int>(gamma.size()) != m.ground_size())
    throw InputError("--gamma needs one rational per ground element");
  return gamma;
}

void emit(const InstanceFlags& fl, const Json& report, const std::string& human) {
  if (fl.json) std::cout << report.dump(2) << "\n";
  else std::cout << human;
  if (!fl.out.empty()) write_text_file(fl.out, report.dump(2) + "\n");
}

int cmd_matroid(const InstanceFlags& fl) {
  Matroid m = apply_ground_order(resolve_matroid(fl.matroid_spec), fl.ground_order);
  Json rep;
  rep["matroid"] = matroid_to_json(m);
  rep["rank"] = m.rank();
  Json ranks = Json::object(), atoms = Json::array(), connected = Json::array();
  for (Subset f : m.flats()) ranks[subset_key(m.ground(), f)] = m.rank_of_flat(f);
  for (Subset a : m.atoms()) atoms.push_back(subset_key(m.ground(), a));
  for (Subset f : m.connected_flats()) connected.push_back(subset_key(m.ground(), f));
  rep["ranks"] = std::move(ranks);
  rep["atoms"] = std::move(atoms);
  rep["connected_flats"] = std::move(connected);

  std::ostringstream hs;
  hs << "ground (" << m.ground_size() << "): ";
  for (const auto& l : m.ground().labels) hs << l << " ";
  hs << "\nrank: " << m.rank() << "\nflats (" << m.flats().size() << "):\n";
  for (Subset f : m.flats())
    hs << "  " << subset_pretty(m.ground(), f) << "  rank " << m.rank_of_flat(f)
       << (m.is_flat(f) && f != 0 && m.is_connected_flat(f) ? "  connected" : "") << "\n";
  emit(fl, rep, hs.str());
  return 0;
}

int cmd_building(const InstanceFlags& fl) {
  Matroid m = apply_ground_order(resolve_matroid(fl.matroid_spec), fl.ground_order);
  BuildingSet b = resolve_building(m, fl.building_spec);
  Json rep;
  rep["building"] = building_to_json(b);
  Json mx = Json::array();
  for (Subset x : b.maximal) mx.push_back(subset_key(m.ground(), x));
  rep["maximal"] = std::move(mx);

  std::ostringstream hs;
  hs << "members (" << b.members.size() << "):\n";
  for (Subset x : b.members)
    hs << "  " << subset_pretty(m.ground(), x)
       << (b.is_maximal_member(x) ? "  [maximal]" : "") << "\n";
  emit(fl, rep, hs.str());
  return 0;
}

int cmd_facets(const InstanceFlags& fl) {
  Matroid m = apply_ground_order(resolve_matroid(fl.matroid_spec), fl.ground_order);
  BuildingSet b = resolve_building(m, fl.building_spec);
  auto fs = facets(b);
  Json rep = facets_to_json(b, fs);
  std::ostringstream hs;
  hs << fs.size() << " facets:\n";
  for (const auto& n : fs) {
    hs << " ";
    for (Subset x : n.flats) hs << " " << subset_pretty(m.ground(), x);
    hs << "\n";
  }
  emit(fl, rep, hs.str());
  return 0;
}

int cmd_normal(const InstanceFlags& fl) {
  Matroid m = apply_ground_order(resolve_matroid(fl.matroid_spec), fl.ground_order);
  BuildingSet b = resolve_building(m, fl.building_spec);
  CubicalFunction c = resolve_c(b, fl.c_spec);
  auto fs = facets(b);
  CubicalReport cub = is_cubical(b, c, fs, 0);
  auto sols = facet_vertices(b, c, fs, 0);
  Json rep;
  rep["c"] = cubical_to_json(m, c)["c"];
  rep["cubical"] = cub.ok;
  rep["vertices"] = vertex_report_to_json(b, sols);
  if (!cub.ok) {
    Json fails = Json::array();
    for (const auto& f : cub.failures) {
      Json e;
      e["facet"] = facet_to_json(m, f.facet);
      e["flat"] = subset_key(m.ground(), f.flat);
      e["lambda"] = rat_to_string(f.lambda);
      fails.push_back(std::move(e));
    }
    rep["failures"] = std::move(fails);
  }
  std::ostringstream hs;
  hs << "cubical: " << (cub.ok ? "yes" : "NO") << "\n";
  for (const auto& sol : sols) {
    hs << "  v(";
    for (Subset x : sol.facet.flats) hs << subset_pretty(m.ground(), x);
    hs << ") = (";
    for (size_t i = 0; i < sol.point.size(); ++i)
      hs << (i ? "," : "") << rat_to_string(sol.point[i]);
    hs << ")" << (sol.interior ? "" : "  [not interior]") << "\n";
  }
  emit(fl, rep, hs.str());
  return cub.ok ? 0 : 1;
}

int cmd_order(const InstanceFlags& fl, const std::string& which) {
  Matroid m = apply_ground_order(resolve_matroid(fl.matroid_spec), fl.ground_order);
  BuildingSet b = resolve_building(m, fl.building_spec);
  std::optional<CubicalFunction> c;
  std::optional<RatVec> gamma;
  if (!fl.gamma_spec.empty()) gamma = resolve_gamma(m, fl.gamma_spec);

  FacetOrder order;
  if (which == "nc") {
    c = resolve_c(b, fl.c_spec);
    order = nc_order(b, *c, 0);
    if (gamma) {
      auto lex = is_lexicographic_vector(b, *c, *gamma);
      if (!lex.ok)
        std::cerr << "note: supplied gamma is not lexicographic on this complex\n";
    }
  } else if (which == "nl") {
    order = nl_order(b);
  } else if (which == "el") {
    BuildingSet bM = maximal_building_set(m);
    if (b.members != bM.members)
      throw ELRequiresMaximal("the EL order is defined for the maximal building set");
    order = el_order(m);
  } else {
    throw InputError("--which must be nc, nl or el");
  }

  Json rep = order_report_to_json(b, order, c ? &*c : nullptr, gamma ? &*gamma : nullptr);
  std::ostringstream hs;
  hs << provenance_name(order.provenance) << " order (" << order.facets.size()
     << " facets):\n";
  for (const auto& entry : rep["facets"]) {
    hs << " ";
    for (const auto& k : entry["facet"]) hs << " {" << k.get<std::string>() << "}";
    if (entry.contains("labeling")) {
      hs << "  labels (";
      for (size_t i = 0; i < entry["labeling"].size(); ++i)
        hs << (i ? "," : "") << entry["labeling"][i].get<std::string>();
      hs << ")";
    }
    if (entry.contains("inner_product"))
      hs << "  <v,gamma> = " << entry["inner_product"].get<std::string>();
    hs << "\n";
  }
  emit(fl, rep, hs.str());
  return 0;
}

int cmd_verify(const InstanceFlags& fl, bool corpus_sweep, std::uint64_t seed) {
  if (corpus_sweep) {
    long instances = 0, failures = 0;
    for (const CorpusEntry& entry : theorem1_corpus()) {
      for (const auto& [bname, b] : corpus_building_sets(entry.matroid)) {
        CubicalFunction c = default_cubical(b, seed);
        ShellingReport rep = verify_theorem1(b, c, 0);
        ++instances;
        if (!rep.verdict) {
          ++failures;
          std::cout << "FAIL " << entry.name << " / " << bname << "\n";
        }
      }
    }
    std::cout << instances << " instances verified, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
  }

  Matroid m = apply_ground_order(resolve_matroid(fl.matroid_spec), fl.ground_order);
  BuildingSet b = resolve_building(m, fl.building_spec);
  CubicalFunction c = resolve_c(b, fl.c_spec);
  auto fs = facets(b);
  CubicalReport cub = is_cubical(b, c, fs, 0);
  if (!cub.ok) {
    std::cout << "c is not cubical on this building set\n";
    return 1;
  }
  FacetOrder order;
  if (!fl.gamma_spec.empty()) {
    RatVec gamma = resolve_gamma(m, fl.gamma_spec);
    order = order_by_gamma(b, c, gamma);
    auto lex = is_lexicographic_vector(b, c, gamma);
    std::cout << "gamma lexicographic: " << (lex.ok ? "yes" : "no") << "\n";
  } else {
    order = nc_order(b, c, fs, 0);
  }
  ShellingReport rep = check_shelling(b, order.facets, 0);
  Json jrep = shelling_report_to_json(m, rep, order.facets);
  jrep["order"] = order_report_to_json(b, order, &c, nullptr);
  std::ostringstream hs;
  hs << "shelling: " << (rep.verdict ? "PASS" : "FAIL") << "\n";
  if (rep.first_violation) {
    hs << "  facet " << rep.first_violation->first << " has no valid predecessor for facet "
       << rep.first_violation->second << "\n";
  }
  emit(fl, jrep, hs.str());
  return rep.verdict ? 0 : 1;
}

int cmd_compare(const InstanceFlags& fl, const std::string& first,
                const std::string& second) {
  Matroid m = apply_ground_order(resolve_matroid(fl.matroid_spec), fl.ground_order);
  BuildingSet b = resolve_building(m, fl.building_spec);
  std::optional<CubicalFunction> c;
  auto build = [&](const std::string& which) {
    if (which == "nc") {
      if (!c) c = resolve_c(b, fl.c_spec);
      return nc_order(b, *c, 0);
    }
    if (which == "nl") return nl_order(b);
    if (which == "el") {
      if (b.members != maximal_building_set(m).members)
        throw ELRequiresMaximal("the EL order is defined for the maximal building set");
      return el_order(m);
    }
    throw InputError("order kind must be nc, nl or el");
  };
  FacetOrder oa = build(first), ob = build(second);
  OrderComparison cmp = compare_orders(oa, ob, b);
  Json rep;
  rep["first"] = provenance_name(oa.provenance);
  rep["second"] = provenance_name(ob.provenance);
  rep["equal"] = cmp.equal;
  rep["locally_equivalent"] = cmp.locally_equivalent;
  rep["weakly_locally_equivalent"] = cmp.weakly_locally_equivalent;
  rep["same_minimum"] = cmp.same_minimum;
  std::ostringstream hs;
  hs << "equal: " << cmp.equal << "\nlocally equivalent: " << cmp.locally_equivalent
     << "\nweakly locally equivalent: " << cmp.weakly_locally_equivalent
     << "\nsame minimum: " << cmp.same_minimum << "\n";
  emit(fl, rep, hs.str());
  return 0;
}

int cmd_search(const SearchSpec& spec, std::uint64_t seed, long budget,
               const std::string& out) {
  SearchResult res = search_nl_shelling(spec, seed, budget, 0);
  std::string log;
  for (const Json& f : res.findings) log += f.dump() + "\n";
  if (!out.empty()) {
    std::ofstream file(out, std::ios::app);
    if (!file) throw InputError("cannot open '" + out + "'");
    file << log;
  } else {
    std::cout << log;
  }
  std::cout << "checked " << res.checked << " instances, " << res.violations
            << " NL-shelling violations";
  if (res.budget_exceeded) std::cout << " (budget exceeded, partial sweep)";
  std::cout << "\n";
  return res.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nested set complexes, normal complexes and shelling orders"};
  app.require_subcommand(1);

  InstanceFlags fl;
  std::string which = "nc", first = "nc", second = "el";
  bool corpus_sweep = false;
  std::uint64_t seed = 0;
  long budget = -1;
  SearchSpec spec;
  std::string search_out;

  auto add_instance_flags = [&](CLI::App* cmd, bool with_c) {
    cmd->add_option("--matroid", fl.matroid_spec,
                    "broom | uniform:r,n | boolean:n | graphic:u-v,... | "
                    "directsum:a+b | file.json");
    cmd->add_option("--ground-order", fl.ground_order, "labels in the desired order");
    cmd->add_option("--building", fl.building_spec, "minimal | maximal | file.json");
    if (with_c) cmd->add_option("--c", fl.c_spec, "auto | auto:SEED | file.json");
    cmd->add_flag("--json", fl.json, "machine-readable output");
    cmd->add_option("--out", fl.out, "also write the JSON report to this file");
  };

  auto* c_matroid = app.add_subcommand("matroid", "validate and describe a matroid");
  add_instance_flags(c_matroid, false);
  auto* c_building = app.add_subcommand("building", "resolve and describe a building set");
  add_instance_flags(c_building, false);
  auto* c_facets = app.add_subcommand("facets", "enumerate nested-set facets");
  add_instance_flags(c_facets, false);
  auto* c_normal = app.add_subcommand("normal", "normal-complex vertices and cubicality");
  add_instance_flags(c_normal, true);
  auto* c_order = app.add_subcommand("order", "facet orders: nc, nl or el");
  add_instance_flags(c_order, true);
  c_order->add_option("--which", which, "nc | nl | el");
  c_order->add_option("--gamma", fl.gamma_spec, "comma-separated rationals");
  auto* c_verify = app.add_subcommand("verify", "full pipeline: cubical -> order -> shelling");
  add_instance_flags(c_verify, true);
  c_verify->add_option("--gamma", fl.gamma_spec, "use this gamma order instead of NC");
  c_verify->add_flag("--corpus", corpus_sweep, "sweep the generated corpus");
  c_verify->add_option("--seed", seed, "seed for auto cubical functions");
  auto* c_compare = app.add_subcommand("compare", "compare two facet orders");
  add_instance_flags(c_compare, true);
  c_compare->add_option("--first", first, "nc | nl | el");
  c_compare->add_option("--second", second, "nc | nl | el");
  auto* c_search = app.add_subcommand("search", "NL-shelling counterexample search");
  c_search->add_option("--family", spec.families, "instance family prefix (repeatable)");
  c_search->add_option("--max-n", spec.max_n, "ground size bound");
  c_search->add_option("--seed", seed, "RNG seed");
  c_search->add_option("--budget", budget, "max checks, -1 unlimited");
  c_search->add_option("--out", search_out, "findings log (JSON lines, appended)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_matroid->parsed()) return cmd_matroid(fl);
    if (c_building->parsed()) return cmd_building(fl);
    if (c_facets->parsed()) return cmd_facets(fl);
    if (c_normal->parsed()) return cmd_normal(fl);
    if (c_order->parsed()) return cmd_order(fl, which);
    if (c_verify->parsed()) return cmd_verify(fl, corpus_sweep, seed);
    if (c_compare->parsed()) return cmd_compare(fl, first, second);
    if (c_search->parsed()) return cmd_search(spec, seed, budget, search_out);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
