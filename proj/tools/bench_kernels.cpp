// Compares the serial reference implementations against the OpenMP kernels
// on the heaviest corpus instances: per-facet vertex solves, the shelling
// pair scan, and the search fan-out.

#include <chrono>
#include <iostream>

#include "bshell/corpus.hpp"
#include "bshell/generators.hpp"
#include "bshell/search.hpp"
#include "bshell/shelling.hpp"
#include "bshell/threads.hpp"

using namespace bshell;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_instance(const std::string& name, const BuildingSet& b, int threads) {
  auto fs = facets(b);
  CubicalFunction c = default_cubical(b, 1);
  facet_vertices(b, c, fs, 1);  // warm-up

  auto t0 = Clock::now();
  auto serial = facet_vertices(b, c, fs, 1);
  double t_serial = ms_since(t0);
  t0 = Clock::now();
  auto par = facet_vertices(b, c, fs, threads);
  double t_par = ms_since(t0);
  bool same = true;
  for (size_t i = 0; i < fs.size(); ++i) same = same && serial[i].point == par[i].point;

  FacetOrder order = nc_order(b, c, fs, threads);
  t0 = Clock::now();
  ShellingReport s1 = check_shelling(b, order.facets, 1);
  double t_shell1 = ms_since(t0);
  t0 = Clock::now();
  ShellingReport sp = check_shelling(b, order.facets, threads);
  double t_shellp = ms_since(t0);
  same = same && s1.verdict == sp.verdict && s1.glue == sp.glue;

  std::cout << name << ": " << fs.size() << " facets\n"
            << "  vertices  serial " << t_serial << " ms | omp(" << threads << ") "
            << t_par << " ms\n"
            << "  shelling  serial " << t_shell1 << " ms | omp(" << threads << ") "
            << t_shellp << " ms\n"
            << "  results identical: " << (same ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
  const int threads = resolve_threads(0);
  std::cout << "worker count: " << threads << "\n\n";

  bench_instance("U(4,6) maximal", maximal_building_set(uniform_matroid(4, 6)), threads);
  bench_instance("U(5,6) maximal", maximal_building_set(uniform_matroid(5, 6)), threads);

  // complete graph on 5 vertices
  std::vector<std::pair<int, int>> k5;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  Matroid mk5 = graphic_matroid(5, k5);
  bench_instance("K5 minimal", minimal_building_set(mk5), threads);
  bench_instance("K5 maximal", maximal_building_set(mk5), threads);

  SearchSpec spec;
  spec.families = {"uniform"};
  spec.max_n = 5;
  auto t0 = Clock::now();
  SearchResult r1 = search_nl_shelling(spec, 11, -1, 1);
  double t_s1 = ms_since(t0);
  t0 = Clock::now();
  SearchResult rp = search_nl_shelling(spec, 11, -1, threads);
  double t_sp = ms_since(t0);
  std::cout << "\nsearch sweep (" << r1.checked << " checks)  serial " << t_s1
            << " ms | omp(" << threads << ") " << t_sp << " ms\n"
            << "  results identical: "
            << (r1.findings == rp.findings && r1.checked == rp.checked ? "yes" : "NO")
            << "\n";
  return 0;
}
