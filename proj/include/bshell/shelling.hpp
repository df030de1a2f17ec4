#pragma once

#include <optional>
#include <vector>

#include "bshell/orders.hpp"

namespace bshell {

struct ShellingReport {
  bool verdict = false;
  // (j, i), 0-based: facet j meets some earlier facet i with no valid k < j.
  std::optional<std::pair<int, int>> first_violation;
  // Per step j: the flats X with N_j \ {X} contained in an earlier facet
  // (the codimension-1 faces the facet glues along).
  std::vector<std::vector<Subset>> glue;
};

// Simplicial shelling check on the reduced nested sets: for every j and
// every i < j there must be k < j and X in N_j with
//   N_i n N_j  <=  N_k n N_j  =  N_j \ {X}.
// Zero-dimensional complexes (reduced facets of size <= 1) pass trivially.
// Throws NotPure when reduced facet cardinalities differ.
// threads = 1 runs the serial reference scan, larger values the OpenMP one.
ShellingReport check_shelling(const BuildingSet& b, const std::vector<NestedSet>& order,
                              int threads = 1);

// Raw variant on already-reduced vertex-id facets; used by the checker above
// and directly by tests.
ShellingReport check_shelling_reduced(const std::vector<std::vector<int>>& reduced_order,
                                      int threads = 1);

// Full pipeline for one instance: cubicality, NC order, shelling. A false
// verdict would contradict the main theorem and is surfaced in the report.
// Throws NonCubical when c fails is_cubical.
ShellingReport verify_theorem1(const BuildingSet& b, const CubicalFunction& c,
                               int threads = 1);

struct LocalEquivalenceReport {
  bool ok = false;
  std::optional<std::vector<Subset>> witness_face;
};

// Local (or weak local) equivalence of two facet orders: restrictions to the
// facets containing each codimension-1 face coincide (weak: have the same
// minimum). Throws MismatchedFacetSets.
LocalEquivalenceReport check_local_equivalence(const FacetOrder& a, const FacetOrder& o,
                                               const BuildingSet& b, bool weak);

}  // namespace bshell
