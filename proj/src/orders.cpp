#include "bshell/orders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace bshell {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::NC: return "NC";
    case Provenance::NL: return "NL";
    case Provenance::EL: return "EL";
    case Provenance::USER: return "USER";
  }
  return "?";
}

std::vector<Subset> NLLabeling::atom_sequence() const {
  std::vector<Subset> out;
  out.reserve(entries.size());
  for (const auto& [flat, atom] : entries) out.push_back(atom);
  return out;
}

namespace {

inline int atom_key(Subset atom) { return min_element(atom); }

inline bool atom_less(Subset a, Subset b) { return atom_key(a) < atom_key(b); }

int compare_atom_sequences(const std::vector<Subset>& a, const std::vector<Subset>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (atom_key(a[i]) != atom_key(b[i])) return atom_key(a[i]) < atom_key(b[i]) ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

Subset label_flat(const Matroid& m, const NestedSet& n, Subset x) {
  for (Subset a : m.atoms()) {
    if (!subset_le(a, x)) continue;
    bool blocked = false;
    for (Subset y : n.flats)
      if (subset_lt(y, x) && subset_le(a, y)) { blocked = true; break; }
    if (!blocked) return a;
  }
  throw Error("no label atom exists; input is not a nested set of a building set");
}

NLLabeling nl_labeling(const Matroid& m, const NestedSet& n) {
  std::map<Subset, Subset> label;
  std::set<int> used_keys;
  for (Subset x : n.flats) {
    label[x] = label_flat(m, n, x);
    if (!used_keys.insert(atom_key(label[x])).second)
      throw Error("label atoms are not distinct; input is not nested");
  }

  NLLabeling out;
  out.facet = n;
  std::vector<Subset> remaining = n.flats;
  while (!remaining.empty()) {
    // Pluck the inclusion-minimal flat with the smallest label; labels are
    // distinct atoms, so the choice is unique.
    Subset best = 0;
    bool have = false;
    for (Subset x : remaining) {
      bool is_min = true;
      for (Subset y : remaining)
        if (subset_lt(y, x)) { is_min = false; break; }
      if (!is_min) continue;
      if (!have || atom_less(label[x], label[best])) { best = x; have = true; }
    }
    out.entries.emplace_back(best, label[best]);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
  }
  return out;
}

std::vector<int> descents(const NLLabeling& l) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < l.entries.size(); ++i)
    if (atom_key(l.entries[i].second) > atom_key(l.entries[i + 1].second))
      out.push_back(static_cast<int>(i) + 1);
  return out;
}

FacetOrder nl_order(const BuildingSet& b) { return nl_order(b, facets(b)); }

FacetOrder nl_order(const BuildingSet& b, const std::vector<NestedSet>& fs) {
  std::vector<std::pair<std::vector<Subset>, size_t>> keyed;
  keyed.reserve(fs.size());
  for (size_t i = 0; i < fs.size(); ++i)
    keyed.emplace_back(nl_labeling(b.matroid, fs[i]).atom_sequence(), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return compare_atom_sequences(x.first, y.first) < 0;
  });
  for (size_t i = 0; i + 1 < keyed.size(); ++i)
    if (compare_atom_sequences(keyed[i].first, keyed[i + 1].first) == 0)
      throw Error("NL-labelings are not injective on facets");
  FacetOrder out;
  out.provenance = Provenance::NL;
  for (const auto& [seq, idx] : keyed) out.facets.push_back(fs[idx]);
  return out;
}

namespace {

// Candidates X in B with A <= X <= top; returns the inclusion-maximal one
// and insists it is unique.
Subset unique_maximal_member_between(const BuildingSet& b, Subset atom, Subset top,
                                     bool* ok) {
  std::vector<Subset> cand;
  for (Subset x : b.members)
    if (subset_le(atom, x) && subset_le(x, top)) cand.push_back(x);
  std::vector<Subset> maximal;
  for (Subset x : cand) {
    bool dominated = false;
    for (Subset y : cand)
      if (subset_lt(x, y)) { dominated = true; break; }
    if (!dominated) maximal.push_back(x);
  }
  *ok = maximal.size() == 1;
  return maximal.empty() ? 0 : maximal[0];
}

}  // namespace

NestedSet construct_n_min(const BuildingSet& b) {
  const Matroid& m = b.matroid;
  const int r = m.rank();
  std::vector<Subset> chosen;
  Subset joined = 0;  // join of the chosen flats, as a flat
  for (int k = 0; k < r; ++k) {
    Subset atom = 0;
    for (Subset a : m.atoms())
      if (!subset_le(a, joined)) { atom = a; break; }
    if (atom == 0) throw Error("ran out of atoms before reaching the rank");
    Subset top = m.join(atom, joined);
    bool ok = false;
    Subset x = unique_maximal_member_between(b, atom, top, &ok);
    if (!ok) throw Error("maximal member between atom and join is not unique");
    chosen.push_back(x);
    joined = m.join(joined, x);
  }
  NestedSet n = make_nested(b, std::move(chosen));
  if (static_cast<int>(n.flats.size()) != r) throw Error("N_min recipe lost a member");
  return n;
}

NestedSet reconstruct_from_labeling(const BuildingSet& b,
                                    const std::vector<Subset>& atom_sequence) {
  const Matroid& m = b.matroid;
  if (static_cast<int>(atom_sequence.size()) != m.rank())
    throw NotALabeling("labeling length differs from rank");
  std::vector<Subset> chosen;
  Subset joined = 0;
  for (Subset atom : atom_sequence) {
    if (!m.is_flat(atom) || m.rank_of_flat(atom) != 1)
      throw NotALabeling("labeling entry is not an atom");
    if (subset_le(atom, joined))
      throw NotALabeling("labeling atom already below the running join");
    Subset top = m.join(atom, joined);
    bool ok = false;
    Subset x = unique_maximal_member_between(b, atom, top, &ok);
    if (!ok) throw NotALabeling("no unique maximal member for a labeling entry");
    if (std::find(chosen.begin(), chosen.end(), x) != chosen.end())
      throw NotALabeling("labeling recipe produced a duplicate flat");
    chosen.push_back(x);
    joined = m.join(joined, x);
  }
  std::sort(chosen.begin(), chosen.end(), canon_less);
  NestedReport rep = check_nested(b, chosen);
  if (!rep.ok) throw NotALabeling("labeling recipe produced a non-nested result");
  NestedSet n{std::move(chosen)};
  if (nl_labeling(m, n).atom_sequence() != atom_sequence)
    throw NotALabeling("input is not the NL-labeling of the reconstructed facet");
  return n;
}

FacetOrder nc_order(const BuildingSet& b, const CubicalFunction& c, int threads) {
  return nc_order(b, c, facets(b), threads);
}

FacetOrder nc_order(const BuildingSet& b, const CubicalFunction& c,
                    const std::vector<NestedSet>& fs, int threads) {
  CubicalReport cub = is_cubical(b, c, fs, threads);
  if (!cub.ok) throw NonCubical("c is not cubical on this building set");
  std::vector<VertexSolution> sols = facet_vertices(b, c, fs, threads);
  std::vector<size_t> idx(fs.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
    return lex_compare(sols[i].point, sols[j].point) > 0;
  });
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (lex_compare(sols[idx[i]].point, sols[idx[i + 1]].point) == 0)
      throw DuplicateVertices("two facets share a vertex");
  FacetOrder out;
  out.provenance = Provenance::NC;
  for (size_t i : idx) out.facets.push_back(fs[i]);
  return out;
}

FacetOrder order_by_gamma(const BuildingSet& b, const CubicalFunction& c,
                          const RatVec& gamma) {
  if (static_cast<int>(gamma.size()) != b.matroid.ground_size())
    throw InputError("gamma has wrong dimension");
  const std::vector<NestedSet> fs = facets(b);
  std::vector<VertexSolution> sols = facet_vertices(b, c, fs, 1);
  std::vector<std::pair<Rat, size_t>> keyed;
  for (size_t i = 0; i < fs.size(); ++i)
    keyed.emplace_back(inner_product(sols[i].point, gamma), i);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  FacetOrder out;
  out.provenance = Provenance::USER;
  for (const auto& [ip, i] : keyed) out.facets.push_back(fs[i]);
  return out;
}

FacetOrder el_order(const Matroid& m) {
  // Maximal chains of the lattice, each labeled by the smallest atom below
  // the upper end of a cover but not below the lower end.
  struct Chain {
    std::vector<Subset> flats;  // proper nonempty flats plus the top
    std::vector<Subset> labels;
  };
  std::vector<Chain> chains;
  const int bottom = m.flat_index(0);

  std::vector<Subset> flats_stack;
  std::vector<Subset> labels_stack;
  std::function<void(int)> rec = [&](int at) {
    if (m.upper_covers()[at].empty()) {
      chains.push_back({flats_stack, labels_stack});
      return;
    }
    for (int up : m.upper_covers()[at]) {
      Subset lower = m.flats()[at], upper = m.flats()[up];
      Subset lab = 0;
      for (Subset a : m.atoms())
        if (subset_le(a, upper) && !subset_le(a, lower)) { lab = a; break; }
      flats_stack.push_back(upper);
      labels_stack.push_back(lab);
      rec(up);
      flats_stack.pop_back();
      labels_stack.pop_back();
    }
  };
  rec(bottom);

  std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    return compare_atom_sequences(a.labels, b.labels) < 0;
  });
  for (size_t i = 0; i + 1 < chains.size(); ++i)
    if (compare_atom_sequences(chains[i].labels, chains[i + 1].labels) == 0)
      throw Error("EL label sequences are not distinct");

  FacetOrder out;
  out.provenance = Provenance::EL;
  for (auto& ch : chains) {
    std::sort(ch.flats.begin(), ch.flats.end(), canon_less);
    out.facets.push_back(NestedSet{std::move(ch.flats)});
  }
  return out;
}

namespace {

std::vector<std::vector<Subset>> codim1_faces(const BuildingSet& b,
                                              const std::vector<NestedSet>& fs) {
  std::set<std::vector<Subset>> faces;
  for (const NestedSet& n : fs) {
    std::vector<Subset> red = reduced(b, n);
    for (size_t drop = 0; drop < red.size(); ++drop) {
      std::vector<Subset> face;
      for (size_t i = 0; i < red.size(); ++i)
        if (i != drop) face.push_back(red[i]);
      faces.insert(face);
    }
  }
  return {faces.begin(), faces.end()};
}

}  // namespace

OrderComparison compare_orders(const FacetOrder& a, const FacetOrder& o,
                               const BuildingSet& b) {
  auto sorted_set = [](const FacetOrder& f) {
    std::vector<std::vector<Subset>> s;
    for (const auto& n : f.facets) s.push_back(n.flats);
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sorted_set(a) != sorted_set(o))
    throw MismatchedFacetSets("orders are over different facet sets");

  OrderComparison cmp;
  cmp.equal = a.facets == o.facets;
  cmp.same_minimum = !a.facets.empty() && a.facets.front() == o.facets.front();
  cmp.locally_equivalent = true;
  cmp.weakly_locally_equivalent = true;
  for (const auto& face : codim1_faces(b, a.facets)) {
    std::vector<const NestedSet*> ra, ro;
    auto contains_face = [&](const NestedSet& n) {
      for (Subset x : face)
        if (!n.contains(x)) return false;
      return true;
    };
    for (const auto& n : a.facets)
      if (contains_face(n)) ra.push_back(&n);
    for (const auto& n : o.facets)
      if (contains_face(n)) ro.push_back(&n);
    if (!ra.empty() && !ro.empty() && !(*ra.front() == *ro.front()))
      cmp.weakly_locally_equivalent = false;
    bool same_seq = ra.size() == ro.size();
    for (size_t i = 0; same_seq && i < ra.size(); ++i) same_seq = *ra[i] == *ro[i];
    if (!same_seq) cmp.locally_equivalent = false;
  }
  return cmp;
}

}  // namespace bshell
