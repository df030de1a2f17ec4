#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bshell/errors.hpp"

namespace bshell {

// Subsets of the ground set as bit masks; bit i is the element at ground
// position i. Ground order is significant everywhere (atom keys, coordinate
// order), so position-indexed masks are the canonical representation.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 31;

inline int card(Subset s) { return std::popcount(s); }
inline bool subset_le(Subset a, Subset b) { return (a & ~b) == 0; }  // a <= b
inline bool subset_lt(Subset a, Subset b) { return a != b && subset_le(a, b); }
inline bool incomparable(Subset a, Subset b) {
  return !subset_le(a, b) && !subset_le(b, a);
}
inline int min_element(Subset s) { return std::countr_zero(s); }  // s != 0

// canonical order: cardinality first, then numeric bit pattern
inline bool canon_less(Subset a, Subset b) {
  if (card(a) != card(b)) return card(a) < card(b);
  return a < b;
}

// Repack the bits of s listed in keep into consecutive low positions.
inline Subset compress_bits(Subset s, Subset keep) {
  Subset out = 0;
  int pos = 0;
  for (Subset rest = keep; rest; rest &= rest - 1, ++pos) {
    if (s & (rest & -rest)) out |= Subset{1} << pos;
  }
  return out;
}

struct GroundSet {
  std::vector<std::string> labels;  // order significant

  int size() const { return static_cast<int>(labels.size()); }
  Subset full() const { return size() == 0 ? 0 : (Subset{1} << size()) - 1; }
  int index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (labels[i] == label) return i;
    return -1;
  }
};

// Comma-joined labels in ground order, e.g. "1,2,3"; empty set is "".
std::string subset_key(const GroundSet& g, Subset s);
// Human form with braces, e.g. "{1,2,3}" and "{}" for the empty set.
std::string subset_pretty(const GroundSet& g, Subset s);
// Inverse of subset_key; throws InputError on unknown labels.
Subset subset_from_key(const GroundSet& g, const std::string& key);

}  // namespace bshell
