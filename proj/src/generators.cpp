#include "bshell/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace bshell {

namespace {

GroundSet numbered_ground(int n) {
  GroundSet g;
  for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
  return g;
}

}  // namespace

Matroid boolean_matroid(int n) { return uniform_matroid(n, n); }

Matroid uniform_matroid(int r, int n) {
  if (n < 1 || r < 1 || r > n)
    throw InputError("uniform matroid needs 1 <= r <= n");
  std::vector<Subset> flats;
  const Subset full = (Subset{1} << n) - 1;
  for (Subset s = 0; s <= full; ++s)
    if (card(s) < r) flats.push_back(s);
  flats.push_back(full);
  return Matroid::validate(numbered_ground(n), std::move(flats));
}

Matroid broom_matroid() {
  auto f = [](std::initializer_list<int> xs) {
    Subset s = 0;
    for (int x : xs) s |= Subset{1} << x;
    return s;
  };
  std::vector<Subset> flats = {f({}),  f({0}),    f({1}),    f({2}),       f({3}),
                               f({0, 1}), f({0, 2}), f({0, 3}), f({1, 2, 3}),
                               f({0, 1, 2, 3})};
  return Matroid::validate(numbered_ground(4), std::move(flats));
}

namespace {

// Closure in the cycle matroid: all edges whose endpoints are connected by
// the edge set s.
Subset graphic_closure(int nv, const std::vector<std::pair<int, int>>& edges, Subset s) {
  std::vector<int> comp(nv);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (s & (Subset{1} << i)) comp[find(edges[i].first)] = find(edges[i].second);
  Subset out = 0;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (find(edges[i].first) == find(edges[i].second)) out |= Subset{1} << i;
  return out;
}

}  // namespace

Matroid graphic_matroid(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) throw InputError("graphic matroid needs at least one edge");
  if (static_cast<int>(edges.size()) > kMaxGroundSize)
    throw InputError("too many edges");
  GroundSet g;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self-loops are not allowed (matroid would have loops)");
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw InputError("edge endpoint out of range");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw InputError("parallel edges are not supported in graph input");
    g.labels.push_back(std::to_string(u) + "-" + std::to_string(v));
  }

  // Enumerate flats by iterated closure upward from the empty flat.
  std::set<Subset> flats;
  std::vector<Subset> frontier = {graphic_closure(num_vertices, edges, 0)};
  flats.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset f : frontier) {
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (f & (Subset{1} << e)) continue;
        Subset cl = graphic_closure(num_vertices, edges, f | (Subset{1} << e));
        if (flats.insert(cl).second) next.push_back(cl);
      }
    }
    frontier = std::move(next);
  }
  return Matroid::validate(std::move(g), std::vector<Subset>(flats.begin(), flats.end()));
}

}  // namespace bshell
