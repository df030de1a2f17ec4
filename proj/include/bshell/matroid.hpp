#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "bshell/errors.hpp"
#include "bshell/subset.hpp"

namespace bshell {

// Loopless matroid represented extensionally by its lattice of flats.
// Validation enforces the flat axioms: the empty set and the ground set are
// flats, flats are closed under pairwise intersection, and for every flat F
// the sets G \ F over covers G of F partition E \ F.
//
// Immutable after construction; safe to share across concurrent workers.
class Matroid {
 public:
  // Builds a matroid from an explicit flat list, checking all axioms.
  // Throws HasLoops, NotALattice or CoverPartitionViolation.
  static Matroid validate(GroundSet ground, std::vector<Subset> flat_list);

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  Subset full_set() const { return ground_.full(); }

  // Flats in canonical order (cardinality, then bit pattern).
  const std::vector<Subset>& flats() const { return flats_; }
  bool is_flat(Subset s) const { return index_.count(s) != 0; }
  int flat_index(Subset f) const;  // -1 if not a flat
  int rank_of_flat(Subset f) const;
  int rank() const { return rank_of_flat(full_set()); }

  // Smallest flat containing s (intersection of all flats above s).
  Subset closure(Subset s) const;
  int rank_of(Subset s) const { return rank_of_flat(closure(s)); }

  Subset join(Subset a, Subset b) const { return closure(a | b); }
  Subset join(const std::vector<Subset>& xs) const;
  Subset meet(Subset a, Subset b) const { return a & b; }

  // Rank-1 flats sorted by key (minimum ground position); they partition E.
  const std::vector<Subset>& atoms() const { return atoms_; }
  Subset atom_of(int element) const;

  // Upper covers in the lattice, aligned with flats().
  const std::vector<std::vector<int>>& upper_covers() const { return covers_up_; }

  // Minor operations. Both reindex the ground set to consecutive positions
  // while preserving label order.
  Matroid restriction(Subset flat) const;
  Matroid contraction(Subset flat) const;

  // True iff the restriction to the flat is a connected matroid, i.e. no
  // proper nonempty A with rank(A) + rank(X\A) = rank(X). Exponential in |X|
  // (all bipartitions are inspected, with early exit); fine at desk scale.
  bool is_connected_flat(Subset flat) const;
  std::vector<Subset> connected_flats() const;  // nonempty, canonical order

 private:
  Matroid() = default;

  GroundSet ground_;
  std::vector<Subset> flats_;
  std::vector<int> rank_;                    // aligned with flats_
  std::vector<std::vector<int>> covers_up_;  // aligned with flats_
  std::unordered_map<Subset, int> index_;
  std::vector<Subset> atoms_;
};

// Ground sets are concatenated (throws LabelCollision on duplicate labels);
// flats are exactly the pairwise unions.
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Permutes the ground order: order[i] is the old position of the element at
// new position i. Flat masks are remapped accordingly.
Matroid reorder_ground(const Matroid& m, const std::vector<int>& order);

// Replaces labels by "0".."n-1" in ground order.
Matroid relabel_sequential(const Matroid& m);

// Isomorphism-invariant key: the lexicographically smallest flat-list
// encoding over all ground permutations. Exhaustive in n!; use on small n
// only (dedup helper for the corpus and search harness).
std::string canonical_form(const Matroid& m);

}  // namespace bshell
