#include "bshell/building.hpp"

#include <algorithm>
#include <set>

namespace bshell {

bool BuildingSet::is_member(Subset x) const { return member_index(x) >= 0; }

bool BuildingSet::is_maximal_member(Subset x) const {
  return std::find(maximal.begin(), maximal.end(), x) != maximal.end();
}

int BuildingSet::member_index(Subset x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x, canon_less);
  if (it == members.end() || *it != x) return -1;
  return static_cast<int>(it - members.begin());
}

BuildingReport check_building_set(const Matroid& m, const std::vector<Subset>& members) {
  std::set<Subset> mem(members.begin(), members.end());
  for (Subset x : mem)
    if (x == 0 || !m.is_flat(x))
      throw NotAFlat("building-set member " + subset_pretty(m.ground(), x) +
                     " is not a nonempty flat");
  BuildingReport rep;
  for (Subset f : m.connected_flats())
    if (!mem.count(f))
      rep.violations.push_back({BuildingViolation::Kind::MissingConnectedFlat, f, 0});
  for (Subset x : mem)
    for (Subset y : mem) {
      if (y <= x || (x & y) == 0) continue;
      if (!mem.count(m.join(x, y)))
        rep.violations.push_back({BuildingViolation::Kind::MissingJoin, x, y});
    }
  rep.ok = rep.violations.empty();
  return rep;
}

BuildingSet make_building_set(Matroid m, std::vector<Subset> members) {
  std::sort(members.begin(), members.end(), canon_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  BuildingReport rep = check_building_set(m, members);
  if (!rep.ok) {
    std::string msg = "not a building set:";
    for (const auto& v : rep.violations) {
      if (v.kind == BuildingViolation::Kind::MissingConnectedFlat)
        msg += " missing connected flat " + subset_pretty(m.ground(), v.a) + ";";
      else
        msg += " missing join of " + subset_pretty(m.ground(), v.a) + " and " +
               subset_pretty(m.ground(), v.b) + ";";
    }
    throw Error(msg);
  }
  // max(B): members not strictly below any other member.
  std::vector<Subset> maximal;
  for (Subset x : members) {
    bool is_max = true;
    for (Subset y : members)
      if (subset_lt(x, y)) { is_max = false; break; }
    if (is_max) maximal.push_back(x);
  }
  return BuildingSet{std::move(m), std::move(members), std::move(maximal)};
}

BuildingSet minimal_building_set(const Matroid& m) {
  return make_building_set(m, m.connected_flats());
}

BuildingSet maximal_building_set(const Matroid& m) {
  std::vector<Subset> members;
  for (Subset f : m.flats())
    if (f != 0) members.push_back(f);
  return make_building_set(m, std::move(members));
}

BuildingSet restrict_building_set(const BuildingSet& b, Subset x) {
  if (!b.matroid.is_flat(x))
    throw NotAFlat(subset_pretty(b.matroid.ground(), x) + " is not a flat");
  Matroid rest = b.matroid.restriction(x);
  std::vector<Subset> members;
  for (Subset y : b.members)
    if (subset_le(y, x)) members.push_back(compress_bits(y, x));
  return make_building_set(std::move(rest), std::move(members));
}

BuildingSet contract_building_set(const BuildingSet& b, Subset x) {
  if (!b.is_member(x))
    throw XNotInBuildingSet(subset_pretty(b.matroid.ground(), x) +
                            " is not a building-set member");
  if (b.is_maximal_member(x))
    throw XMaximal(subset_pretty(b.matroid.ground(), x) + " is a maximal member");
  const Subset rest = b.matroid.full_set() & ~x;
  Matroid contr = b.matroid.contraction(x);
  std::vector<Subset> members;
  for (Subset y : b.members)
    if (!subset_le(y, x))
      members.push_back(compress_bits(b.matroid.join(y, x) & ~x, rest));
  return make_building_set(std::move(contr), std::move(members));
}

BuildingSet product_building_set(const BuildingSet& b, Subset x) {
  if (!b.is_member(x))
    throw XNotInBuildingSet(subset_pretty(b.matroid.ground(), x) +
                            " is not a building-set member");
  if (b.is_maximal_member(x))
    throw XMaximal(subset_pretty(b.matroid.ground(), x) + " is a maximal member");
  const Matroid& m = b.matroid;

  // Flats of M|_X + M^X written as subsets of E: unions of a flat below X
  // and a (shifted-back) flat of the contraction.
  std::vector<Subset> below, above;
  for (Subset f : m.flats()) {
    if (subset_le(f, x)) below.push_back(f);
    if (subset_le(x, f)) above.push_back(f & ~x);
  }
  std::vector<Subset> flats;
  flats.reserve(below.size() * above.size());
  for (Subset fb : below)
    for (Subset fa : above) flats.push_back(fb | fa);
  Matroid prod = Matroid::validate(m.ground(), std::move(flats));

  std::vector<Subset> members;
  for (Subset y : b.members) {
    if (subset_le(y, x)) members.push_back(y);
    else members.push_back(m.join(y, x) & ~x);
  }
  return make_building_set(std::move(prod), std::move(members));
}

std::vector<BuildingSet> enumerate_building_sets(const Matroid& m, long cap) {
  std::vector<Subset> connected = m.connected_flats();
  std::set<Subset> base(connected.begin(), connected.end());
  std::vector<Subset> optional_flats;
  for (Subset f : m.flats())
    if (f != 0 && !base.count(f)) optional_flats.push_back(f);

  const int k = static_cast<int>(optional_flats.size());
  if (k > 62 || (1LL << k) > cap)
    throw CapExceeded("would inspect 2^" + std::to_string(k) +
                      " candidate building sets (cap " + std::to_string(cap) + ")");

  std::set<std::vector<Subset>> seen;
  std::vector<BuildingSet> out;
  for (long bits = 0; bits < (1LL << k); ++bits) {
    std::set<Subset> mem = base;
    for (int i = 0; i < k; ++i)
      if (bits & (1LL << i)) mem.insert(optional_flats[i]);
    // Close under joins of intersecting members.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Subset> cur(mem.begin(), mem.end());
      for (size_t i = 0; i < cur.size() && !grew; ++i)
        for (size_t j = i + 1; j < cur.size(); ++j) {
          if ((cur[i] & cur[j]) == 0) continue;
          Subset jn = m.join(cur[i], cur[j]);
          if (!mem.count(jn)) { mem.insert(jn); grew = true; break; }
        }
    }
    std::vector<Subset> sorted(mem.begin(), mem.end());
    std::sort(sorted.begin(), sorted.end(), canon_less);
    if (seen.insert(sorted).second)
      out.push_back(make_building_set(m, std::move(sorted)));
  }
  std::sort(out.begin(), out.end(), [](const BuildingSet& a, const BuildingSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                        b.members.begin(), b.members.end(), canon_less);
  });
  return out;
}

}  // namespace bshell
