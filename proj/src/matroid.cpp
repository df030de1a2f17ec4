#include "bshell/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bshell {

namespace {

void sort_canonical(std::vector<Subset>& xs) {
  std::sort(xs.begin(), xs.end(), canon_less);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

Matroid Matroid::validate(GroundSet ground, std::vector<Subset> flat_list) {
  if (ground.size() > kMaxGroundSize)
    throw InputError("ground set larger than " + std::to_string(kMaxGroundSize) +
                     " elements is not supported");
  {
    std::set<std::string> seen;
    for (const auto& l : ground.labels)
      if (!seen.insert(l).second) throw LabelCollision("duplicate ground label '" + l + "'");
  }
  const Subset full = ground.full();
  for (Subset f : flat_list)
    if (!subset_le(f, full))
      throw NotALattice("flat contains elements outside the ground set");

  sort_canonical(flat_list);

  Matroid m;
  m.ground_ = std::move(ground);
  m.flats_ = std::move(flat_list);
  for (int i = 0; i < static_cast<int>(m.flats_.size()); ++i) m.index_[m.flats_[i]] = i;

  if (!m.index_.count(0))
    throw HasLoops("the empty set is not a flat (matroid has loops)");
  if (!m.index_.count(full))
    throw NotALattice("the ground set is not a flat");

  const int nf = static_cast<int>(m.flats_.size());
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j) {
      Subset inter = m.flats_[i] & m.flats_[j];
      if (!m.index_.count(inter))
        throw NotALattice("flats are not closed under intersection: " +
                          subset_pretty(m.ground_, m.flats_[i]) + " and " +
                          subset_pretty(m.ground_, m.flats_[j]));
    }

  // Upper covers: minimal flats strictly above each flat. flats_ is sorted by
  // cardinality, so a single forward sweep keeping inclusion-minimal
  // candidates suffices.
  m.covers_up_.assign(nf, {});
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nf; ++j) {
      if (!subset_lt(m.flats_[i], m.flats_[j])) continue;
      bool minimal = true;
      for (int k : m.covers_up_[i])
        if (subset_lt(m.flats_[k], m.flats_[j])) { minimal = false; break; }
      if (minimal) m.covers_up_[i].push_back(j);
    }
  }

  // Cover-partition axiom: every e outside a flat F lies in exactly one
  // cover of F.
  for (int i = 0; i < nf; ++i) {
    const Subset f = m.flats_[i];
    for (int e = 0; e < m.ground_.size(); ++e) {
      if (f & (Subset{1} << e)) continue;
      int count = 0;
      for (int k : m.covers_up_[i])
        if (m.flats_[k] & (Subset{1} << e)) ++count;
      if (count != 1)
        throw CoverPartitionViolation(
            "element '" + m.ground_.labels[e] + "' lies in " + std::to_string(count) +
            " covers of flat " + subset_pretty(m.ground_, f));
    }
  }

  // Ranks along cover chains from the bottom. Gradedness is a consequence of
  // the axioms above; the consistency check guards the implementation.
  m.rank_.assign(nf, -1);
  m.rank_[m.index_.at(0)] = 0;
  for (int i = 0; i < nf; ++i) {
    if (m.rank_[i] < 0)
      throw CoverPartitionViolation("flat " + subset_pretty(m.ground_, m.flats_[i]) +
                                    " is unreachable from the empty flat");
    for (int k : m.covers_up_[i]) {
      if (m.rank_[k] < 0) m.rank_[k] = m.rank_[i] + 1;
      else if (m.rank_[k] != m.rank_[i] + 1)
        throw CoverPartitionViolation("lattice of flats is not graded at " +
                                      subset_pretty(m.ground_, m.flats_[k]));
    }
  }

  for (int i = 0; i < nf; ++i)
    if (m.rank_[i] == 1) m.atoms_.push_back(m.flats_[i]);
  std::sort(m.atoms_.begin(), m.atoms_.end(),
            [](Subset a, Subset b) { return min_element(a) < min_element(b); });
  Subset covered = 0;
  for (Subset a : m.atoms_) {
    if (covered & a)
      throw CoverPartitionViolation("atoms do not partition the ground set");
    covered |= a;
  }
  if (covered != full && m.ground_.size() > 0)
    throw CoverPartitionViolation("atoms do not cover the ground set");

  return m;
}

int Matroid::flat_index(Subset f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second;
}

int Matroid::rank_of_flat(Subset f) const {
  int i = flat_index(f);
  if (i < 0) throw NotAFlat(subset_pretty(ground_, f) + " is not a flat");
  return rank_[i];
}

Subset Matroid::closure(Subset s) const {
  // flats_ is sorted by cardinality, so the first flat containing s is the
  // smallest one, which is the closure.
  for (Subset f : flats_)
    if (subset_le(s, f)) return f;
  throw NotAFlat("no flat contains the given subset");  // unreachable: E is a flat
}

Subset Matroid::join(const std::vector<Subset>& xs) const {
  Subset u = 0;
  for (Subset x : xs) u |= x;
  return closure(u);
}

Subset Matroid::atom_of(int element) const {
  for (Subset a : atoms_)
    if (a & (Subset{1} << element)) return a;
  throw NotAFlat("element is not covered by any atom");
}

Matroid Matroid::restriction(Subset flat) const {
  if (!is_flat(flat)) throw NotAFlat(subset_pretty(ground_, flat) + " is not a flat");
  GroundSet g;
  for (int i = 0; i < ground_.size(); ++i)
    if (flat & (Subset{1} << i)) g.labels.push_back(ground_.labels[i]);
  std::vector<Subset> fl;
  for (Subset f : flats_)
    if (subset_le(f, flat)) fl.push_back(compress_bits(f, flat));
  return validate(std::move(g), std::move(fl));
}

Matroid Matroid::contraction(Subset flat) const {
  if (!is_flat(flat)) throw NotAFlat(subset_pretty(ground_, flat) + " is not a flat");
  const Subset rest = full_set() & ~flat;
  GroundSet g;
  for (int i = 0; i < ground_.size(); ++i)
    if (rest & (Subset{1} << i)) g.labels.push_back(ground_.labels[i]);
  std::vector<Subset> fl;
  for (Subset f : flats_)
    if (subset_le(flat, f)) fl.push_back(compress_bits(f & ~flat, rest));
  return validate(std::move(g), std::move(fl));
}

bool Matroid::is_connected_flat(Subset flat) const {
  if (flat == 0 || !is_flat(flat))
    throw NotAFlat(subset_pretty(ground_, flat) + " is not a nonempty flat");
  const int r = rank_of_flat(flat);
  if (card(flat) == 1) return true;
  // Fix the lowest element on one side to halve the enumeration.
  const Subset low = flat & -flat;
  const Subset others = flat & ~low;
  std::map<Subset, int> memo;
  auto rk = [&](Subset s) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    int v = rank_of(s);
    memo.emplace(s, v);
    return v;
  };
  // Iterate sub-masks of others; a = low | sub must stay proper.
  for (Subset sub = others; ; sub = (sub - 1) & others) {
    Subset a = low | sub;
    if (a != flat) {
      if (rk(a) + rk(flat & ~a) == r) return false;
    }
    if (sub == 0) break;
  }
  return true;
}

std::vector<Subset> Matroid::connected_flats() const {
  std::vector<Subset> out;
  for (Subset f : flats_)
    if (f != 0 && is_connected_flat(f)) out.push_back(f);
  return out;
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  GroundSet g = a.ground();
  for (const auto& l : b.ground().labels) {
    if (g.index_of(l) >= 0) throw LabelCollision("duplicate label '" + l + "' in direct sum");
    g.labels.push_back(l);
  }
  const int shift = a.ground_size();
  std::vector<Subset> fl;
  fl.reserve(a.flats().size() * b.flats().size());
  for (Subset fa : a.flats())
    for (Subset fb : b.flats()) fl.push_back(fa | (fb << shift));
  return Matroid::validate(std::move(g), std::move(fl));
}

Matroid reorder_ground(const Matroid& m, const std::vector<int>& order) {
  const int n = m.ground_size();
  if (static_cast<int>(order.size()) != n) throw InputError("ground order has wrong length");
  std::vector<bool> seen(n, false);
  for (int old : order) {
    if (old < 0 || old >= n || seen[old]) throw InputError("ground order is not a permutation");
    seen[old] = true;
  }
  GroundSet g;
  for (int i = 0; i < n; ++i) g.labels.push_back(m.ground().labels[order[i]]);
  std::vector<Subset> fl;
  fl.reserve(m.flats().size());
  for (Subset f : m.flats()) {
    Subset nf = 0;
    for (int i = 0; i < n; ++i)
      if (f & (Subset{1} << order[i])) nf |= Subset{1} << i;
    fl.push_back(nf);
  }
  return Matroid::validate(std::move(g), std::move(fl));
}

Matroid relabel_sequential(const Matroid& m) {
  GroundSet g;
  for (int i = 0; i < m.ground_size(); ++i) g.labels.push_back(std::to_string(i));
  return Matroid::validate(std::move(g), m.flats());
}

std::string canonical_form(const Matroid& m) {
  const int n = m.ground_size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<Subset> fl;
    fl.reserve(m.flats().size());
    for (Subset f : m.flats()) {
      Subset nf = 0;
      for (int i = 0; i < n; ++i)
        if (f & (Subset{1} << perm[i])) nf |= Subset{1} << i;
      fl.push_back(nf);
    }
    std::sort(fl.begin(), fl.end(), canon_less);
    std::string enc = std::to_string(n) + ":";
    for (Subset f : fl) enc += std::to_string(f) + ",";
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace bshell
