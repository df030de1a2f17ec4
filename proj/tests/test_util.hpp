#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "bshell/building.hpp"
#include "bshell/nested.hpp"
#include "bshell/shelling.hpp"

namespace bshell::testutil {

inline Subset sub(const Matroid& m, const std::string& key) {
  return subset_from_key(m.ground(), key);
}

inline std::vector<Subset> subs(const Matroid& m, const std::vector<std::string>& keys) {
  std::vector<Subset> out;
  for (const auto& k : keys) out.push_back(sub(m, k));
  std::sort(out.begin(), out.end(), canon_less);
  return out;
}

inline NestedSet nested_of(const BuildingSet& b, const std::vector<std::string>& keys) {
  return make_nested(b, subs(b.matroid, keys));
}

// Oracle: inclusion-maximal nested sets by filtering every subset of B of
// cardinality rank(M) through the nested-set check. Exponential; |B| <= 12.
inline std::vector<NestedSet> brute_force_facets(const BuildingSet& b) {
  const int k = static_cast<int>(b.members.size());
  const int r = b.matroid.rank();
  std::vector<NestedSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) != r) continue;
    std::vector<Subset> flats;
    for (int i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) flats.push_back(b.members[i]);
    if (check_nested(b, flats).ok) {
      std::sort(flats.begin(), flats.end(), canon_less);
      out.push_back(NestedSet{std::move(flats)});
    }
  }
  std::sort(out.begin(), out.end(), [](const NestedSet& a, const NestedSet& c) {
    return std::lexicographical_compare(a.flats.begin(), a.flats.end(),
                                        c.flats.begin(), c.flats.end(), canon_less);
  });
  return out;
}

// Oracle: literal translation of the simplicial shelling condition with
// std::set algebra, independent of the production scan.
inline bool independent_shelling_ok(const BuildingSet& b,
                                    const std::vector<NestedSet>& order) {
  using FS = std::set<Subset>;
  std::vector<FS> red;
  for (const auto& n : order) {
    auto r = reduced(b, n);
    red.emplace_back(r.begin(), r.end());
  }
  const size_t d = red.empty() ? 0 : red[0].size();
  for (const auto& r : red)
    if (r.size() != d) throw NotPure("oracle: not pure");
  if (d <= 1) return true;

  auto intersect = [](const FS& a, const FS& c) {
    FS out;
    std::set_intersection(a.begin(), a.end(), c.begin(), c.end(),
                          std::inserter(out, out.begin()));
    return out;
  };
  for (size_t j = 1; j < red.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      FS inter_ij = intersect(red[i], red[j]);
      bool found = false;
      for (size_t k = 0; k < j && !found; ++k) {
        FS inter_kj = intersect(red[k], red[j]);
        if (inter_kj.size() != d - 1) continue;
        for (Subset x : red[j]) {
          FS without = red[j];
          without.erase(x);
          if (inter_kj == without &&
              std::includes(without.begin(), without.end(), inter_ij.begin(),
                            inter_ij.end())) {
            found = true;
            break;
          }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

// Oracle: decide shellability by trying every ordering (tiny complexes only).
inline bool brute_force_shellable(const BuildingSet& b, std::vector<NestedSet> fs) {
  std::sort(fs.begin(), fs.end(), [](const NestedSet& a, const NestedSet& c) {
    return a.flats < c.flats;
  });
  do {
    if (independent_shelling_ok(b, fs)) return true;
  } while (std::next_permutation(fs.begin(), fs.end(),
                                 [](const NestedSet& a, const NestedSet& c) {
                                   return a.flats < c.flats;
                                 }));
  return false;
}

}  // namespace bshell::testutil
