#pragma once

#include <vector>

#include "bshell/matroid.hpp"

namespace bshell {

// Validated building set: contains every connected flat, and is closed under
// joins of intersecting members. maximal holds max(B), which partitions the
// ground set.
struct BuildingSet {
  Matroid matroid;
  std::vector<Subset> members;  // canonical order, nonempty flats
  std::vector<Subset> maximal;  // max(B), canonical order

  bool is_member(Subset x) const;
  bool is_maximal_member(Subset x) const;
  int member_index(Subset x) const;  // -1 if absent
};

struct BuildingViolation {
  enum class Kind { MissingConnectedFlat, MissingJoin };
  Kind kind;
  Subset a = 0;
  Subset b = 0;  // second member of the intersecting pair for MissingJoin
};

struct BuildingReport {
  bool ok = false;
  std::vector<BuildingViolation> violations;
};

// Checks the two characterization conditions and reports each violation.
// Throws NotAFlat if a member is empty or not a flat.
BuildingReport check_building_set(const Matroid& m, const std::vector<Subset>& members);

// Constructs a validated BuildingSet; throws Error with the first violations
// if the member list is not a building set.
BuildingSet make_building_set(Matroid m, std::vector<Subset> members);

// Exactly the connected flats.
BuildingSet minimal_building_set(const Matroid& m);
// All nonempty flats.
BuildingSet maximal_building_set(const Matroid& m);

// B|_X = {Y in B : Y <= X} as a building set of the restriction to X
// (ground reindexed). X may be any flat.
BuildingSet restrict_building_set(const BuildingSet& b, Subset x);

// B^X = {(Y v X) \ X : Y in B, Y not<= X} as a building set of the
// contraction (ground reindexed). Requires X in B \ max(B).
BuildingSet contract_building_set(const BuildingSet& b, Subset x);

// B|_X u B^X on the direct sum M|_X + M^X, with members and ground encoded
// as subsets of the original E (restriction members are <= X, contraction
// members are <= E\X). max = {X} plus the tau_X images of max(B).
BuildingSet product_building_set(const BuildingSet& b, Subset x);

// All building sets of m, in deterministic order. Works by adding subsets of
// the non-connected nonempty flats to the connected ones, closing under
// joins of intersecting members, and deduplicating. Throws CapExceeded when
// more than cap candidate subsets would be inspected.
std::vector<BuildingSet> enumerate_building_sets(const Matroid& m, long cap);

}  // namespace bshell
