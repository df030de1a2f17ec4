#pragma once

#include <vector>

#include "bshell/building.hpp"

namespace bshell {

// A nested set of a building set: contains max(B), and no antichain of two
// or more pairwise-incomparable members has its join in B. Flats are kept in
// canonical order.
struct NestedSet {
  std::vector<Subset> flats;

  bool contains(Subset x) const;
  friend bool operator==(const NestedSet&, const NestedSet&) = default;
};

struct NestedReport {
  bool ok = false;
  bool missing_max = false;
  std::vector<Subset> witness;  // offending antichain, or the missing max members
};

// Condition check with witness. flats must be members of B.
NestedReport check_nested(const BuildingSet& b, const std::vector<Subset>& flats);

NestedSet make_nested(const BuildingSet& b, std::vector<Subset> flats);

// All inclusion-maximal nested sets (cardinality rank(M)), by backtracking
// over B \ max(B) in canonical order. Deterministic output order.
std::vector<NestedSet> facets(const BuildingSet& b);

// N \ max(B): the simplex of the nested set complex.
std::vector<Subset> reduced(const BuildingSet& b, const NestedSet& n);

// Cover relations inside a nested set; parent[i] is the index of the unique
// minimal member strictly above nodes[i], or -1 for roots.
struct ForestPoset {
  std::vector<Subset> nodes;
  std::vector<int> parent;
};
ForestPoset forest(const NestedSet& n);

// The link bijection: X itself if X <= Z, else (X v Z) \ Z. Defined for
// X in LinkVert(Z) u {Z} u max(B); throws NotInLink otherwise.
Subset tau(const BuildingSet& b, Subset z, Subset x);

// Elementwise tau_Z image of a nested set containing Z, as a nested set of
// product_building_set(b, Z). Validates its output against the product.
NestedSet link_image(const BuildingSet& b, Subset z, const NestedSet& n,
                     const BuildingSet& product);
NestedSet link_image(const BuildingSet& b, Subset z, const NestedSet& n);

}  // namespace bshell
