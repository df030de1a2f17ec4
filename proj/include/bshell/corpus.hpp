#pragma once

#include <string>
#include <vector>

#include "bshell/building.hpp"

namespace bshell {

struct CorpusEntry {
  std::string name;
  Matroid matroid;
};

// The instance corpus for the main-theorem and invariant sweeps:
//   - uniform U_{r,n} for 1 <= r <= n <= 6
//   - cycle matroids of connected simple graphs on <= 5 vertices, up to
//     isomorphism, excluding trees and cycles (those coincide with Boolean
//     and uniform matroids already present)
//   - the broom matroid
//   - direct sums of pairs drawn from the uniforms with n <= 3 and the
//     broom, with total ground size <= 6, relabeled sequentially
// Deduplicated by canonical form where the ground is small enough.
std::vector<CorpusEntry> theorem1_corpus();

// Building sets to sweep for one instance: every building set when the
// number of nonempty flats is at most all_cap, otherwise minimal and maximal
// (deduplicated when they coincide). Names are "minimal", "maximal", or
// "all/<i>".
std::vector<std::pair<std::string, BuildingSet>> corpus_building_sets(const Matroid& m,
                                                                      int all_cap = 14);

// Connected simple graphs on exactly nv vertices up to isomorphism, as edge
// lists; helper for the corpus and tests.
std::vector<std::vector<std::pair<int, int>>> connected_graphs(int nv);

}  // namespace bshell
