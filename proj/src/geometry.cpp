#include "bshell/geometry.hpp"

#include <algorithm>
#include <random>

#include "bshell/threads.hpp"

namespace bshell {

const Rat& CubicalFunction::at(Subset x) const {
  auto it = values.find(x);
  if (it == values.end()) throw Error("cubical function has no value for a member");
  return it->second;
}

bool CubicalFunction::total_on(const BuildingSet& b) const {
  for (Subset x : b.members)
    if (!values.count(x)) return false;
  return true;
}

std::vector<std::vector<Rat>> gram_matrix(const NestedSet& n) {
  const size_t k = n.flats.size();
  std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) g[i][j] = card(n.flats[i] & n.flats[j]);
  return g;
}

RatVec solve_linear(std::vector<std::vector<Rat>> a, RatVec rhs) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw SingularGram("singular Gram matrix");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
      rhs[r] -= f * rhs[col];
    }
  }
  RatVec x(n);
  for (size_t i = n; i-- > 0;) {
    Rat acc = rhs[i];
    for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

VertexSolution vertex(const BuildingSet& b, const NestedSet& n, const CubicalFunction& c) {
  const size_t k = n.flats.size();
  RatVec rhs(k);
  for (size_t i = 0; i < k; ++i) rhs[i] = c.at(n.flats[i]);

  VertexSolution sol;
  sol.facet = n;
  sol.lambda = solve_linear(gram_matrix(n), rhs);
  sol.point.assign(b.matroid.ground_size(), Rat(0));
  for (size_t i = 0; i < k; ++i)
    for (int e = 0; e < b.matroid.ground_size(); ++e)
      if (n.flats[i] & (Subset{1} << e)) sol.point[e] += sol.lambda[i];

  // Exactness: the point must satisfy every constraint with no tolerance.
  for (size_t i = 0; i < k; ++i) {
    Rat acc = 0;
    for (int e = 0; e < b.matroid.ground_size(); ++e)
      if (n.flats[i] & (Subset{1} << e)) acc += sol.point[e];
    if (acc != rhs[i]) throw Error("vertex re-substitution failed");
  }

  sol.interior = true;
  for (size_t i = 0; i < k; ++i)
    if (!b.is_maximal_member(n.flats[i]) && sol.lambda[i] <= 0) {
      sol.interior = false;
      break;
    }
  return sol;
}

std::vector<VertexSolution> facet_vertices(const BuildingSet& b, const CubicalFunction& c,
                                           const std::vector<NestedSet>& fs, int threads) {
  threads = resolve_threads(threads);
  std::vector<VertexSolution> out(fs.size());
  if (threads == 1) {
    for (size_t i = 0; i < fs.size(); ++i) out[i] = vertex(b, fs[i], c);
    return out;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long i = 0; i < static_cast<long>(fs.size()); ++i)
    out[static_cast<size_t>(i)] = vertex(b, fs[static_cast<size_t>(i)], c);
  return out;
}

CubicalReport is_cubical(const BuildingSet& b, const CubicalFunction& c, int threads) {
  return is_cubical(b, c, facets(b), threads);
}

CubicalReport is_cubical(const BuildingSet& b, const CubicalFunction& c,
                         const std::vector<NestedSet>& fs, int threads) {
  if (!c.total_on(b)) throw Error("cubical function is not total on the building set");
  CubicalReport rep;
  std::vector<VertexSolution> sols = facet_vertices(b, c, fs, threads);
  for (const auto& sol : sols) {
    if (sol.interior) continue;
    for (size_t i = 0; i < sol.facet.flats.size(); ++i)
      if (!b.is_maximal_member(sol.facet.flats[i]) && sol.lambda[i] <= 0)
        rep.failures.push_back({sol.facet, sol.facet.flats[i], sol.lambda[i]});
  }
  rep.ok = rep.failures.empty();
  return rep;
}

CubicalFunction default_cubical(const BuildingSet& b, std::uint64_t seed) {
  const std::vector<NestedSet> fs = facets(b);
  const int n = b.matroid.ground_size();
  long attempts = 0;

  auto try_candidate = [&](const CubicalFunction& c) -> bool {
    ++attempts;
    return is_cubical(b, c, fs).ok;
  };

  // (i) concave parabola in |X|
  {
    CubicalFunction c;
    for (Subset x : b.members) c.values[x] = Rat(card(x)) * Rat(n - card(x));
    if (try_candidate(c)) return c;
  }
  // (ii) shifted exponential, a = n + 1
  {
    CubicalFunction c;
    Rat a(n + 1);
    Rat top = 1;
    for (int i = 0; i < n; ++i) top *= a;
    for (Subset x : b.members) {
      Rat pw = 1;
      for (int i = 0; i < card(x); ++i) pw *= a;
      c.values[x] = top - pw;
    }
    if (try_candidate(c)) return c;
  }
  // (iii) seeded rational perturbations of (i)
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 200; ++round) {
    CubicalFunction c;
    for (Subset x : b.members) {
      long num = static_cast<long>(rng() % 2017) - 1008;
      c.values[x] = Rat(card(x)) * Rat(n - card(x)) + Rat(num) / Rat(1009);
    }
    if (try_candidate(c)) return c;
  }
  throw SearchExhausted("no cubical function found after " + std::to_string(attempts) +
                        " attempts");
}

CubicalFunction restrict_cubical(const BuildingSet& b, Subset z, const CubicalFunction& c,
                                 const BuildingSet& product) {
  const Rat& cz = c.at(z);
  CubicalFunction out;
  for (Subset w : product.members) {
    if (subset_le(w, z)) {
      out.values[w] = c.at(w);
      continue;
    }
    // Members of B^Z: w u Z is a flat above Z. If it is itself a member, it
    // came from the Z < X branch of tau; otherwise w is an incomparable
    // nested member of B carried over unchanged.
    Subset wz = w | z;
    if (b.is_member(wz)) out.values[w] = c.at(wz) - cz;
    else out.values[w] = c.at(w);
  }
  return out;
}

CubicalFunction restrict_cubical(const BuildingSet& b, Subset z, const CubicalFunction& c) {
  return restrict_cubical(b, z, c, product_building_set(b, z));
}

LexVectorReport is_lexicographic_vector(const BuildingSet& b, const CubicalFunction& c,
                                        const RatVec& gamma) {
  if (static_cast<int>(gamma.size()) != b.matroid.ground_size())
    throw InputError("gamma has wrong dimension");
  const std::vector<NestedSet> fs = facets(b);
  std::vector<VertexSolution> sols = facet_vertices(b, c, fs, 1);
  LexVectorReport rep;
  for (size_t i = 0; i < sols.size(); ++i)
    for (size_t j = i + 1; j < sols.size(); ++j) {
      int lex = lex_compare(sols[i].point, sols[j].point);
      if (lex == 0)
        throw DuplicateVertices("two facets share the vertex; input is not cubical");
      Rat diff = inner_product(sols[i].point, gamma) - inner_product(sols[j].point, gamma);
      int ips = diff == 0 ? 0 : (diff > 0 ? 1 : -1);
      if (ips != lex) {
        rep.counterexample = {fs[i], fs[j]};
        rep.ok = false;
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

}  // namespace bshell
