#include <doctest.h>

#include "bshell/generators.hpp"
#include "bshell/search.hpp"
#include "bshell/shelling.hpp"
#include "test_util.hpp"

using namespace bshell;
using namespace bshell::testutil;

namespace {

CubicalFunction broom_32_c(const BuildingSet& b) {
  CubicalFunction c;
  for (Subset x : b.members) c.values[x] = Rat(card(x)) * Rat(4 - card(x));
  return c;
}

RatVec vec(std::vector<long> xs) {
  RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("the printed broom NC order is a shelling order") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  FacetOrder o = nc_order(bM, broom_32_c(bM));
  ShellingReport rep = check_shelling(bM, o.facets);
  CHECK(rep.verdict);
  CHECK_FALSE(rep.first_violation.has_value());
  CHECK(independent_shelling_ok(bM, o.facets));
}

TEST_CASE("zero-dimensional complexes accept any order") {
  // single facet
  BuildingSet b11 = maximal_building_set(uniform_matroid(1, 1));
  CHECK(check_shelling(b11, facets(b11)).verdict);
  // reduced facets are points: minimal building set of the broom
  Matroid m = broom_matroid();
  BuildingSet bm = minimal_building_set(m);
  auto fs = facets(bm);
  std::reverse(fs.begin(), fs.end());
  CHECK(check_shelling(bm, fs).verdict);
}

TEST_CASE("the non-lexicographic gamma order fails with disjoint first facets") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  CubicalFunction c = broom_32_c(bM);
  FacetOrder o = order_by_gamma(bM, c, vec({1, 100, 101, -1000}));
  CHECK(o.facets[0] == nested_of(bM, {"2", "0,2", "0,1,2,3"}));
  CHECK(o.facets[1] == nested_of(bM, {"1", "0,1", "0,1,2,3"}));
  ShellingReport rep = check_shelling(bM, o.facets);
  CHECK_FALSE(rep.verdict);
  REQUIRE(rep.first_violation.has_value());
  CHECK(rep.first_violation->first == 1);
  CHECK(rep.first_violation->second == 0);
  CHECK_FALSE(independent_shelling_ok(bM, o.facets));
  // yet the complex itself is shellable
  CHECK(brute_force_shellable(bM, o.facets));
}

TEST_CASE("checker agrees with the independent oracle on permuted orders") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  std::vector<NestedSet> fs = facets(bM);
  // a deterministic sample of orderings, including adversarial rotations
  for (int shift = 0; shift < static_cast<int>(fs.size()); ++shift) {
    std::vector<NestedSet> order = fs;
    std::rotate(order.begin(), order.begin() + shift, order.end());
    CHECK(check_shelling(bM, order).verdict == independent_shelling_ok(bM, order));
  }
  std::vector<NestedSet> rev = fs;
  std::reverse(rev.begin(), rev.end());
  CHECK(check_shelling(bM, rev).verdict == independent_shelling_ok(bM, rev));
}

TEST_CASE("checker agrees with the oracle on every ordering of a small complex") {
  // <= 7 facets: Boolean_3 order complex has 6 facets
  Matroid m = boolean_matroid(3);
  BuildingSet bM = maximal_building_set(m);
  std::vector<NestedSet> fs = facets(bM);
  REQUIRE(fs.size() == 6);
  std::sort(fs.begin(), fs.end(),
            [](const NestedSet& a, const NestedSet& c) { return a.flats < c.flats; });
  int both_true = 0, both_false = 0;
  do {
    bool mine = check_shelling(bM, fs).verdict;
    bool oracle = independent_shelling_ok(bM, fs);
    REQUIRE(mine == oracle);
    (mine ? both_true : both_false)++;
  } while (std::next_permutation(fs.begin(), fs.end(),
                                 [](const NestedSet& a, const NestedSet& c) {
                                   return a.flats < c.flats;
                                 }));
  CHECK(both_true > 0);
  CHECK(both_false > 0);
}

TEST_CASE("not-pure inputs are rejected") {
  std::vector<std::vector<int>> bad = {{0, 1}, {2}};
  CHECK_THROWS_AS(check_shelling_reduced(bad), NotPure);
}

TEST_CASE("verify_theorem1 on the broom") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  CHECK(verify_theorem1(bM, broom_32_c(bM)).verdict);

  BuildingSet b11 = maximal_building_set(uniform_matroid(1, 1));
  CubicalFunction c11;
  c11.values[1] = 1;
  CHECK(verify_theorem1(b11, c11).verdict);

  CubicalFunction zero;
  for (Subset x : bM.members) zero.values[x] = 0;
  CHECK_THROWS_AS(verify_theorem1(bM, zero), NonCubical);
}

TEST_CASE("local equivalence checks") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  FacetOrder nc = nc_order(bM, broom_32_c(bM));
  FacetOrder el = el_order(m);

  CHECK(check_local_equivalence(nc, nc, bM, false).ok);
  CHECK(check_local_equivalence(nc, nc, bM, true).ok);

  // NC and EL differ as orders but agree on every codimension-1 star minimum
  auto weak = check_local_equivalence(nc, el, bM, true);
  CHECK(weak.ok);

  // an adversarial order differing at one codimension-1 star
  FacetOrder swapped = nc;
  std::swap(swapped.facets[7], swapped.facets[8]);  // {2,123} and {3,123}
  auto strict = check_local_equivalence(nc, swapped, bM, false);
  CHECK_FALSE(strict.ok);
  CHECK(strict.witness_face.has_value());
  auto weak2 = check_local_equivalence(nc, swapped, bM, true);
  CHECK(weak2.ok);  // minima agree: position 7 is not a star minimum

  // swapping the first two facets breaks a weak minimum
  FacetOrder first_swapped = nc;
  std::swap(first_swapped.facets[0], first_swapped.facets[1]);
  CHECK_FALSE(check_local_equivalence(nc, first_swapped, bM, true).ok);
}

TEST_CASE("search harness on the broom sweep") {
  SearchSpec spec;
  spec.families = {"broom-all-orders"};
  SearchResult res = search_nl_shelling(spec, 17, -1, 1);
  // 24 ground orders x 9 building sets of the broom
  CHECK(res.checked == 24 * 9);
  CHECK_FALSE(res.budget_exceeded);
  for (const Json& f : res.findings) CHECK(replay_finding(f));

  SearchResult zero = search_nl_shelling(spec, 17, 0, 1);
  CHECK(zero.checked == 0);
  CHECK(zero.findings.empty());

  SearchResult capped = search_nl_shelling(spec, 17, 5, 1);
  CHECK(capped.checked == 5);
  CHECK(capped.budget_exceeded);
}

TEST_CASE("rank-1 instances are trivially shellable in the search") {
  SearchSpec spec;
  spec.families = {"uniform(1,"};
  spec.max_n = 3;
  SearchResult res = search_nl_shelling(spec, 1, -1, 1);
  CHECK(res.checked > 0);
  CHECK(res.violations == 0);
}
