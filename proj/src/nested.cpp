#include "bshell/nested.hpp"

#include <algorithm>
#include <functional>

namespace bshell {

bool NestedSet::contains(Subset x) const {
  return std::find(flats.begin(), flats.end(), x) != flats.end();
}

namespace {

// Enumerates antichains of size >= 2 among xs and tests their joins against
// B. Condition 2 quantifies over all antichains, not just pairs: three
// pairwise-incomparable flats can have their triple join in B even when no
// pairwise join is.
bool antichain_join_in_b(const BuildingSet& b, const std::vector<Subset>& xs,
                         std::vector<Subset>* witness) {
  const int n = static_cast<int>(xs.size());
  std::vector<int> chosen;
  std::function<bool(int, Subset)> rec = [&](int start, Subset un) -> bool {
    if (chosen.size() >= 2) {
      Subset jn = b.matroid.closure(un);
      if (b.is_member(jn)) {
        if (witness) {
          witness->clear();
          for (int i : chosen) witness->push_back(xs[i]);
        }
        return true;
      }
    }
    for (int i = start; i < n; ++i) {
      bool ok = true;
      for (int j : chosen)
        if (!incomparable(xs[i], xs[j])) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(i);
      if (rec(i + 1, un | xs[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0, 0);
}

// Incremental form used by the facet backtracking: only antichains through
// the newly added flat need inspection.
bool extension_stays_nested(const BuildingSet& b, const std::vector<Subset>& current,
                            Subset added) {
  std::vector<Subset> inc;
  for (Subset y : current)
    if (incomparable(y, added)) inc.push_back(y);
  const int n = static_cast<int>(inc.size());
  std::vector<int> chosen;
  std::function<bool(int, Subset)> rec = [&](int start, Subset un) -> bool {
    if (!chosen.empty()) {
      Subset jn = b.matroid.closure(un | added);
      if (b.is_member(jn)) return false;
    }
    for (int i = start; i < n; ++i) {
      bool ok = true;
      for (int j : chosen)
        if (!incomparable(inc[i], inc[j])) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(i);
      if (!rec(i + 1, un | inc[i])) return false;
      chosen.pop_back();
    }
    return true;
  };
  return rec(0, 0);
}

}  // namespace

NestedReport check_nested(const BuildingSet& b, const std::vector<Subset>& flats) {
  NestedReport rep;
  for (Subset x : flats)
    if (!b.is_member(x))
      throw XNotInBuildingSet(subset_pretty(b.matroid.ground(), x) +
                              " is not a building-set member");
  for (Subset mx : b.maximal) {
    if (std::find(flats.begin(), flats.end(), mx) == flats.end()) {
      rep.missing_max = true;
      rep.witness.push_back(mx);
    }
  }
  if (rep.missing_max) return rep;
  std::vector<Subset> witness;
  if (antichain_join_in_b(b, flats, &witness)) {
    rep.witness = std::move(witness);
    return rep;
  }
  rep.ok = true;
  return rep;
}

NestedSet make_nested(const BuildingSet& b, std::vector<Subset> flats) {
  std::sort(flats.begin(), flats.end(), canon_less);
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  NestedReport rep = check_nested(b, flats);
  if (!rep.ok) throw Error("not a nested set");
  return NestedSet{std::move(flats)};
}

std::vector<NestedSet> facets(const BuildingSet& b) {
  const int target = b.matroid.rank();
  std::vector<Subset> candidates;
  for (Subset x : b.members)
    if (!b.is_maximal_member(x)) candidates.push_back(x);

  std::vector<NestedSet> out;
  std::vector<Subset> current(b.maximal.begin(), b.maximal.end());
  const int need = target - static_cast<int>(b.maximal.size());
  if (need < 0) throw Error("building set has more maximal members than rank");

  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      std::vector<Subset> f = current;
      std::sort(f.begin(), f.end(), canon_less);
      out.push_back(NestedSet{std::move(f)});
      return;
    }
    for (int i = start; i <= static_cast<int>(candidates.size()) - left; ++i) {
      if (!extension_stays_nested(b, current, candidates[i])) continue;
      current.push_back(candidates[i]);
      rec(i + 1, left - 1);
      current.pop_back();
    }
  };
  rec(0, need);

  std::sort(out.begin(), out.end(), [](const NestedSet& a, const NestedSet& c) {
    return std::lexicographical_compare(a.flats.begin(), a.flats.end(),
                                        c.flats.begin(), c.flats.end(), canon_less);
  });
  return out;
}

std::vector<Subset> reduced(const BuildingSet& b, const NestedSet& n) {
  std::vector<Subset> out;
  for (Subset x : n.flats)
    if (!b.is_maximal_member(x)) out.push_back(x);
  return out;
}

ForestPoset forest(const NestedSet& n) {
  ForestPoset fp;
  fp.nodes = n.flats;
  fp.parent.assign(fp.nodes.size(), -1);
  for (size_t i = 0; i < fp.nodes.size(); ++i) {
    int best = -1;
    for (size_t j = 0; j < fp.nodes.size(); ++j) {
      if (!subset_lt(fp.nodes[i], fp.nodes[j])) continue;
      if (best < 0 || subset_lt(fp.nodes[j], fp.nodes[best])) best = static_cast<int>(j);
    }
    fp.parent[i] = best;
  }
  return fp;
}

Subset tau(const BuildingSet& b, Subset z, Subset x) {
  if (!b.is_member(z))
    throw XNotInBuildingSet(subset_pretty(b.matroid.ground(), z) +
                            " is not a building-set member");
  if (b.is_maximal_member(z))
    throw XMaximal(subset_pretty(b.matroid.ground(), z) + " is a maximal member");
  if (x == z) return z;
  if (!b.is_member(x)) throw NotInLink(subset_pretty(b.matroid.ground(), x) + " not in B");
  if (!b.is_maximal_member(x)) {
    // X must be a link vertex: {X, Z} u max(B) nested.
    std::vector<Subset> probe(b.maximal.begin(), b.maximal.end());
    probe.push_back(x);
    probe.push_back(z);
    std::sort(probe.begin(), probe.end(), canon_less);
    probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
    if (!check_nested(b, probe).ok)
      throw NotInLink(subset_pretty(b.matroid.ground(), x) + " is not in the link of " +
                      subset_pretty(b.matroid.ground(), z));
  }
  if (subset_lt(x, z)) return x;
  return b.matroid.join(x, z) & ~z;
}

NestedSet link_image(const BuildingSet& b, Subset z, const NestedSet& n,
                     const BuildingSet& product) {
  if (!n.contains(z))
    throw NotInLink(subset_pretty(b.matroid.ground(), z) + " is not in the nested set");
  std::vector<Subset> image;
  for (Subset x : n.flats) image.push_back(tau(b, z, x));
  std::sort(image.begin(), image.end(), canon_less);
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (image.size() != n.flats.size())
    throw Error("tau_Z collapsed two members of a nested set");
  NestedReport rep = check_nested(product, image);
  if (!rep.ok) throw Error("tau_Z image is not nested in the product building set");
  return NestedSet{std::move(image)};
}

NestedSet link_image(const BuildingSet& b, Subset z, const NestedSet& n) {
  return link_image(b, z, n, product_building_set(b, z));
}

}  // namespace bshell
