#include "bshell/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "bshell/generators.hpp"

namespace bshell {

std::vector<std::vector<std::pair<int, int>>> connected_graphs(int nv) {
  std::vector<std::pair<int, int>> all_edges;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) all_edges.emplace_back(u, v);
  const int m = static_cast<int>(all_edges.size());

  std::vector<int> perm(nv);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::set<std::uint64_t> seen;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    // connectivity over all nv vertices
    std::vector<int> comp(nv);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int v) {
      while (comp[v] != v) v = comp[v] = comp[comp[v]];
      return v;
    };
    for (int e = 0; e < m; ++e)
      if (mask & (std::uint64_t{1} << e)) comp[find(all_edges[e].first)] = find(all_edges[e].second);
    bool connected = true;
    for (int v = 1; v < nv && connected; ++v) connected = find(v) == find(0);
    if (!connected) continue;

    // canonical form under vertex permutations
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t canon = ~std::uint64_t{0};
    do {
      std::uint64_t relab = 0;
      for (int e = 0; e < m; ++e) {
        if (!(mask & (std::uint64_t{1} << e))) continue;
        auto [u, v] = all_edges[e];
        int pu = perm[u], pv = perm[v];
        if (pu > pv) std::swap(pu, pv);
        int idx = static_cast<int>(std::find(all_edges.begin(), all_edges.end(),
                                             std::make_pair(pu, pv)) -
                                   all_edges.begin());
        relab |= std::uint64_t{1} << idx;
      }
      canon = std::min(canon, relab);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(canon).second) continue;

    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e)
      if (canon & (std::uint64_t{1} << e)) edges.push_back(all_edges[e]);
    out.push_back(std::move(edges));
  }
  return out;
}

namespace {

bool is_tree_or_cycle(int nv, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  if (m == nv - 1) return true;  // connected with nv-1 edges: tree
  if (m != nv) return false;
  std::vector<int> deg(nv, 0);
  for (auto [u, v] : edges) { ++deg[u]; ++deg[v]; }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

}  // namespace

std::vector<CorpusEntry> theorem1_corpus() {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  auto add = [&](std::string name, Matroid m) {
    // canonical dedup is exhaustive in n!; skip it above 7 ground elements
    if (m.ground_size() <= 7 && !seen.insert(canonical_form(m)).second) return;
    out.push_back({std::move(name), std::move(m)});
  };

  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r)
      add("uniform(" + std::to_string(r) + "," + std::to_string(n) + ")",
          uniform_matroid(r, n));

  add("broom", broom_matroid());

  for (int nv = 3; nv <= 5; ++nv) {
    int idx = 0;
    for (const auto& edges : connected_graphs(nv)) {
      ++idx;
      if (is_tree_or_cycle(nv, edges)) continue;  // Boolean / uniform duplicates
      add("graphic(" + std::to_string(nv) + "v/" + std::to_string(idx) + ")",
          graphic_matroid(nv, edges));
    }
  }

  // direct sums of small pieces, total ground size <= 6
  std::vector<CorpusEntry> pieces;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      pieces.push_back({"uniform(" + std::to_string(r) + "," + std::to_string(n) + ")",
                        uniform_matroid(r, n)});
  pieces.push_back({"broom", broom_matroid()});
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = i; j < pieces.size(); ++j) {
      if (pieces[i].matroid.ground_size() + pieces[j].matroid.ground_size() > 6) continue;
      Matroid a = relabel_sequential(pieces[i].matroid);
      GroundSet shifted;
      for (int k = 0; k < pieces[j].matroid.ground_size(); ++k)
        shifted.labels.push_back(std::to_string(a.ground_size() + k));
      Matroid b = Matroid::validate(shifted, pieces[j].matroid.flats());
      add(pieces[i].name + "+" + pieces[j].name, direct_sum(a, b));
    }

  return out;
}

std::vector<std::pair<std::string, BuildingSet>> corpus_building_sets(const Matroid& m,
                                                                      int all_cap) {
  int nonempty = static_cast<int>(m.flats().size()) - 1;
  std::vector<std::pair<std::string, BuildingSet>> out;
  if (nonempty <= all_cap) {
    auto all = enumerate_building_sets(m, 1L << 20);
    for (size_t i = 0; i < all.size(); ++i)
      out.emplace_back("all/" + std::to_string(i), std::move(all[i]));
    return out;
  }
  BuildingSet mn = minimal_building_set(m);
  BuildingSet mx = maximal_building_set(m);
  bool same = mn.members == mx.members;
  out.emplace_back("minimal", std::move(mn));
  if (!same) out.emplace_back("maximal", std::move(mx));
  return out;
}

}  // namespace bshell
