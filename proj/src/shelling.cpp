#include "bshell/shelling.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "bshell/threads.hpp"

namespace bshell {

namespace {

struct Mask128 {
  std::uint64_t lo = 0, hi = 0;

  void set(int i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1; }
  friend Mask128 operator&(Mask128 a, Mask128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
  friend Mask128 operator~(Mask128 a) { return {~a.lo, ~a.hi}; }
  bool none() const { return lo == 0 && hi == 0; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool subset_of(Mask128 o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
  friend bool operator==(const Mask128&, const Mask128&) = default;
};

// Step data for facet j: OK(i, j) holds iff some X in S_j misses N_i, where
// S_j = { X in N_j : exists k < j with N_k n N_j = N_j \ {X} }.
struct StepScan {
  Mask128 s;                      // union of admissible removed vertices X
  std::vector<int> s_vertices;    // same, listed
  std::optional<int> bad_i;       // first i < j with S_j subset of N_i
};

StepScan scan_step(const std::vector<Mask128>& fs, int j, int d) {
  StepScan out;
  for (int k = 0; k < j; ++k) {
    Mask128 inter = fs[k] & fs[j];
    if (inter.count() == d - 1) {
      Mask128 missing = fs[j] & ~inter;
      out.s = {out.s.lo | missing.lo, out.s.hi | missing.hi};
    }
  }
  for (int i = 0; i < j; ++i) {
    // The pair (i, j) is fine iff some admissible X avoids N_i.
    if (out.s.subset_of(fs[i])) { out.bad_i = i; break; }
  }
  return out;
}

}  // namespace

ShellingReport check_shelling_reduced(const std::vector<std::vector<int>>& reduced_order,
                                      int threads) {
  const int f = static_cast<int>(reduced_order.size());
  ShellingReport rep;
  rep.glue.assign(f, {});
  if (f == 0) { rep.verdict = true; return rep; }

  const int d = static_cast<int>(reduced_order[0].size());
  for (const auto& r : reduced_order)
    if (static_cast<int>(r.size()) != d)
      throw NotPure("reduced facets have different cardinalities");

  if (d <= 1) { rep.verdict = true; return rep; }  // points or empty: any order shells

  int max_vertex = -1;
  for (const auto& r : reduced_order)
    for (int v : r) max_vertex = std::max(max_vertex, v);
  if (max_vertex >= 128) throw Error("complex has too many vertices (>= 128)");

  std::vector<Mask128> fs(f);
  for (int i = 0; i < f; ++i)
    for (int v : reduced_order[i]) fs[i].set(v);

  std::vector<StepScan> scans(f);
  threads = resolve_threads(threads);
  if (threads == 1) {
    for (int j = 1; j < f; ++j) scans[j] = scan_step(fs, j, d);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int j = 1; j < f; ++j) scans[j] = scan_step(fs, j, d);
  }

  rep.verdict = true;
  for (int j = 1; j < f; ++j) {
    std::vector<int> glue_vertices;
    for (int v = 0; v <= max_vertex; ++v)
      if (scans[j].s.test(v)) glue_vertices.push_back(v);
    rep.glue[j].assign(glue_vertices.begin(), glue_vertices.end());
    if (rep.verdict && scans[j].bad_i) {
      rep.verdict = false;
      rep.first_violation = {j, *scans[j].bad_i};
    }
  }
  return rep;
}

ShellingReport check_shelling(const BuildingSet& b, const std::vector<NestedSet>& order,
                              int threads) {
  // Map reduced flats to dense vertex ids.
  std::map<Subset, int> vertex_id;
  std::vector<Subset> id_to_flat;
  std::vector<std::vector<int>> red(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    for (Subset x : reduced(b, order[i])) {
      auto [it, inserted] = vertex_id.emplace(x, static_cast<int>(id_to_flat.size()));
      if (inserted) id_to_flat.push_back(x);
      red[i].push_back(it->second);
    }
  }
  ShellingReport rep = check_shelling_reduced(red, threads);
  // Translate glue vertex ids back to flats.
  for (auto& g : rep.glue) {
    std::vector<Subset> flats;
    for (Subset v : g) flats.push_back(id_to_flat[static_cast<int>(v)]);
    std::sort(flats.begin(), flats.end(), canon_less);
    g = std::move(flats);
  }
  return rep;
}

ShellingReport verify_theorem1(const BuildingSet& b, const CubicalFunction& c,
                               int threads) {
  const std::vector<NestedSet> fs = facets(b);
  CubicalReport cub = is_cubical(b, c, fs, threads);
  if (!cub.ok) throw NonCubical("c is not cubical; cannot form the normal complex");
  FacetOrder order = nc_order(b, c, fs, threads);
  return check_shelling(b, order.facets, threads);
}

LocalEquivalenceReport check_local_equivalence(const FacetOrder& a, const FacetOrder& o,
                                               const BuildingSet& b, bool weak) {
  auto sorted_set = [](const FacetOrder& f) {
    std::vector<std::vector<Subset>> s;
    for (const auto& n : f.facets) s.push_back(n.flats);
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sorted_set(a) != sorted_set(o))
    throw MismatchedFacetSets("orders are over different facet sets");

  std::set<std::vector<Subset>> faces;
  for (const auto& n : a.facets) {
    std::vector<Subset> red = reduced(b, n);
    for (size_t drop = 0; drop < red.size(); ++drop) {
      std::vector<Subset> face;
      for (size_t i = 0; i < red.size(); ++i)
        if (i != drop) face.push_back(red[i]);
      faces.insert(face);
    }
  }

  LocalEquivalenceReport rep;
  for (const auto& face : faces) {
    auto contains_face = [&](const NestedSet& n) {
      for (Subset x : face)
        if (!n.contains(x)) return false;
      return true;
    };
    std::vector<const NestedSet*> ra, ro;
    for (const auto& n : a.facets)
      if (contains_face(n)) ra.push_back(&n);
    for (const auto& n : o.facets)
      if (contains_face(n)) ro.push_back(&n);
    bool good;
    if (weak) {
      good = ra.empty() || *ra.front() == *ro.front();
    } else {
      good = ra.size() == ro.size();
      for (size_t i = 0; good && i < ra.size(); ++i) good = *ra[i] == *ro[i];
    }
    if (!good) {
      rep.ok = false;
      rep.witness_face = face;
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace bshell
