#pragma once

#include <utility>
#include <vector>

#include "bshell/geometry.hpp"

namespace bshell {

enum class Provenance { NC, NL, EL, USER };
const char* provenance_name(Provenance p);

// A total order on the facets of the nested set complex.
struct FacetOrder {
  std::vector<NestedSet> facets;
  Provenance provenance = Provenance::USER;
};

// NL-labeling of a nested set: (flat, atom) pairs in the pluck order of the
// minimal-leaf recursion. Atoms are rank-1 flats compared by their smallest
// ground position.
struct NLLabeling {
  NestedSet facet;
  std::vector<std::pair<Subset, Subset>> entries;

  std::vector<Subset> atom_sequence() const;
};

// m_N(X): the smallest atom below X avoiding every member of N strictly
// below X. Exists for every member of a nested set.
Subset label_flat(const Matroid& m, const NestedSet& n, Subset x);

NLLabeling nl_labeling(const Matroid& m, const NestedSet& n);

// 1-based positions i with label(X_i) > label(X_{i+1}).
std::vector<int> descents(const NLLabeling& l);

// Facets sorted lexicographically by NL-labeling atom sequences.
FacetOrder nl_order(const BuildingSet& b);
FacetOrder nl_order(const BuildingSet& b, const std::vector<NestedSet>& fs);

// The unique facet with increasing labeling, built directly by the greedy
// atom recipe; equals the minimum of nl_order.
NestedSet construct_n_min(const BuildingSet& b);

// Inverse of nl_labeling on its image; throws NotALabeling when the recipe
// breaks down or the result does not reproduce the input.
NestedSet reconstruct_from_labeling(const BuildingSet& b,
                                    const std::vector<Subset>& atom_sequence);

// Facets ordered by lexicographically decreasing vertex coordinates (the
// first facet has the lexicographically largest vertex). Requires cubical c.
FacetOrder nc_order(const BuildingSet& b, const CubicalFunction& c, int threads = 1);
FacetOrder nc_order(const BuildingSet& b, const CubicalFunction& c,
                    const std::vector<NestedSet>& fs, int threads = 1);

// Facets ordered by decreasing <v_N, gamma>, for a user-supplied gamma.
// Ties broken by canonical facet order.
FacetOrder order_by_gamma(const BuildingSet& b, const CubicalFunction& c,
                          const RatVec& gamma);

// Bjorner's EL-order for the maximal building set: maximal chains of the
// lattice labeled by the smallest new atom per cover, sorted lexicographically
// by label sequence, emitted as nested sets including the top flat.
FacetOrder el_order(const Matroid& m);

struct OrderComparison {
  bool equal = false;
  bool locally_equivalent = false;
  bool weakly_locally_equivalent = false;
  bool same_minimum = false;
};

OrderComparison compare_orders(const FacetOrder& a, const FacetOrder& o,
                               const BuildingSet& b);

}  // namespace bshell
