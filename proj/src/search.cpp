#include "bshell/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bshell/corpus.hpp"
#include "bshell/generators.hpp"
#include "bshell/threads.hpp"

namespace bshell {

namespace {

std::vector<std::vector<int>> ground_orders(int n, int perm_all_max_n, int random_small,
                                            int random_large, std::mt19937_64& rng) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> out;
  if (n <= perm_all_max_n) {
    std::vector<int> p = id;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  out.push_back(id);
  int want = n <= 6 ? random_small : random_large;
  for (int i = 0; i < want; ++i) {
    std::vector<int> p = id;
    // Fisher-Yates with raw engine output for cross-platform determinism.
    for (int k = n - 1; k > 0; --k)
      std::swap(p[k], p[rng() % static_cast<std::uint64_t>(k + 1)]);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json instance_json(const Matroid& reordered, const BuildingSet& b,
                   const std::string& instance_name, const std::string& building_name) {
  Json inst;
  inst["name"] = instance_name;
  inst["building_name"] = building_name;
  inst["matroid"] = matroid_to_json(reordered);
  inst["building"] = building_to_json(b);
  inst["ground_order"] = reordered.ground().labels;
  return inst;
}

}  // namespace

SearchResult search_nl_shelling(const SearchSpec& spec, std::uint64_t seed, long budget,
                                int threads) {
  SearchResult res;
  if (budget == 0) return res;

  bool broom_all_orders =
      std::find(spec.families.begin(), spec.families.end(), "broom-all-orders") !=
      spec.families.end();

  std::vector<CorpusEntry> corpus;
  if (broom_all_orders) {
    corpus.push_back({"broom", broom_matroid()});
  } else {
    for (CorpusEntry& e : theorem1_corpus()) {
      if (e.matroid.ground_size() > spec.max_n && spec.max_n > 0) continue;
      if (!spec.families.empty()) {
        bool wanted = false;
        for (const auto& f : spec.families)
          if (e.name.rfind(f, 0) == 0) { wanted = true; break; }
        if (!wanted) continue;
      }
      corpus.push_back(std::move(e));
    }
  }

  std::mt19937_64 rng(seed);
  struct Unit {
    std::string instance_name, building_name;
    Matroid matroid;           // reordered ground
    std::vector<Subset> members;  // members in the reordered encoding
  };
  std::vector<Unit> units;

  for (const CorpusEntry& entry : corpus) {
    const int n = entry.matroid.ground_size();
    auto orders = broom_all_orders
                      ? ground_orders(n, n, 0, 0, rng)  // exhaustive for the broom sweep
                      : ground_orders(n, spec.perm_all_max_n, spec.random_perms_small,
                                      spec.random_perms_large, rng);
    auto buildings = corpus_building_sets(entry.matroid, spec.building_all_cap);
    for (const auto& [bname, bset] : buildings) {
      for (const auto& order : orders) {
        if (budget >= 0 && static_cast<long>(units.size()) >= budget) {
          res.budget_exceeded = true;
          break;
        }
        std::vector<Subset> members;
        for (Subset x : bset.members) {
          Subset nx = 0;
          for (int i = 0; i < n; ++i)
            if (x & (Subset{1} << order[i])) nx |= Subset{1} << i;
          members.push_back(nx);
        }
        units.push_back(Unit{entry.name, bname, reorder_ground(entry.matroid, order),
                             std::move(members)});
      }
      if (res.budget_exceeded) break;
    }
    if (res.budget_exceeded) break;
  }

  res.checked = static_cast<long>(units.size());

  struct Outcome {
    bool violation = false;
    Json finding;
  };
  std::vector<Outcome> outcomes(units.size());
  threads = resolve_threads(threads);

  auto run_unit = [&](size_t i) {
    const Unit& u = units[i];
    BuildingSet b = make_building_set(u.matroid, u.members);
    FacetOrder order = nl_order(b);
    ShellingReport rep = check_shelling(b, order.facets, 1);
    if (!rep.verdict) {
      Outcome& o = outcomes[i];
      o.violation = true;
      Json line;
      line["instance"] = instance_json(u.matroid, b, u.instance_name, u.building_name);
      line["order_provenance"] = "NL";
      line["verdict"] = false;
      Json viol = shelling_report_to_json(b.matroid, rep, order.facets);
      Json ordered = Json::array();
      for (const NestedSet& nset : order.facets)
        ordered.push_back(facet_to_json(b.matroid, nset));
      viol["order"] = std::move(ordered);
      line["violation"] = std::move(viol);
      o.finding = std::move(line);
    }
  };

  if (threads == 1) {
    for (size_t i = 0; i < units.size(); ++i) run_unit(i);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long i = 0; i < static_cast<long>(units.size()); ++i)
      run_unit(static_cast<size_t>(i));
  }

  // Single-writer merge in task order keeps the log deterministic.
  for (const Outcome& o : outcomes) {
    if (!o.violation) continue;
    ++res.violations;
    res.findings.push_back(o.finding);
  }
  return res;
}

bool replay_finding(const Json& finding) {
  const Json& inst = finding.at("instance");
  Matroid m = matroid_from_json(inst.at("matroid"));
  BuildingSet b = building_from_json(m, inst.at("building"));
  FacetOrder order = nl_order(b);
  ShellingReport rep = check_shelling(b, order.facets, 1);
  return rep.verdict == finding.at("verdict").get<bool>();
}

}  // namespace bshell
