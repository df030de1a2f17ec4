#include <doctest.h>

#include "bshell/generators.hpp"
#include "bshell/geometry.hpp"
#include "test_util.hpp"

using namespace bshell;
using namespace bshell::testutil;

namespace {

CubicalFunction broom_31_c(const Matroid& m) {
  CubicalFunction c;
  c.values[sub(m, "0")] = 3;
  c.values[sub(m, "1")] = 1;
  c.values[sub(m, "2")] = 1;
  c.values[sub(m, "3")] = 1;
  c.values[sub(m, "1,2,3")] = -3;
  return c;
}

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

TEST_CASE("gram matrices of broom facets") {
  Matroid m = broom_matroid();
  BuildingSet bm = minimal_building_set(m);
  auto g = gram_matrix(nested_of(bm, {"0", "1", "1,2,3"}));
  CHECK(g == std::vector<std::vector<Rat>>{{1, 0, 0}, {0, 1, 1}, {0, 1, 3}});

  BuildingSet b11 = maximal_building_set(uniform_matroid(1, 1));
  CHECK(gram_matrix(facets(b11)[0]) == std::vector<std::vector<Rat>>{{1}});

  BuildingSet bM = maximal_building_set(m);
  auto g2 = gram_matrix(nested_of(bM, {"0", "0,1", "0,1,2,3"}));
  CHECK(g2 == std::vector<std::vector<Rat>>{{1, 1, 1}, {1, 2, 2}, {1, 2, 4}});
}

TEST_CASE("solve_linear detects singular systems") {
  CHECK_THROWS_AS(solve_linear({{1, 1}, {1, 1}}, {1, 2}), SingularGram);
  CHECK(solve_linear({{2, 0}, {0, 4}}, {1, 1}) == RatVec{Rat(1, 2), Rat(1, 4)});
}

TEST_CASE("vertices of the maximal broom complex") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  CubicalFunction c = broom_32_c(bM);

  VertexSolution v1 = vertex(bM, nested_of(bM, {"0", "0,1", "0,1,2,3"}), c);
  CHECK(v1.point == vec({3, 1, -2, -2}));
  CHECK(v1.interior);

  VertexSolution v2 = vertex(bM, nested_of(bM, {"3", "1,2,3", "0,1,2,3"}), c);
  CHECK(v2.point == vec({-3, 0, 0, 3}));

  VertexSolution v3 = vertex(bM, nested_of(bM, {"1", "0,1", "0,1,2,3"}), c);
  CHECK(v3.point == vec({1, 3, -2, -2}));
}

TEST_CASE("vertices of the minimal broom complex lie in the stated affine plane") {
  Matroid m = broom_matroid();
  BuildingSet bm = minimal_building_set(m);
  CubicalFunction c = broom_31_c(m);

  std::vector<RatVec> expect = {vec({3, 1, -2, -2}), vec({3, -2, 1, -2}),
                                vec({3, -2, -2, 1})};
  auto sols = facet_vertices(bm, c, facets(bm), 1);
  REQUIRE(sols.size() == 3);
  for (const auto& sol : sols) {
    CHECK(std::find(expect.begin(), expect.end(), sol.point) != expect.end());
    CHECK(sol.point[0] == 3);
    CHECK(sol.point[0] + sol.point[1] + sol.point[2] + sol.point[3] == 0);
    CHECK(sol.interior);
  }
}

TEST_CASE("cubicality checks") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  CHECK(is_cubical(bM, broom_32_c(bM)).ok);

  CubicalFunction zero;
  for (Subset x : bM.members) zero.values[x] = 0;
  auto rep = is_cubical(bM, zero);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());

  BuildingSet bm = minimal_building_set(m);
  CHECK(is_cubical(bm, broom_31_c(m)).ok);
}

TEST_CASE("default_cubical returns verified functions deterministically") {
  Matroid m = broom_matroid();
  for (const BuildingSet& b : {minimal_building_set(m), maximal_building_set(m)}) {
    CubicalFunction c = default_cubical(b, 7);
    CHECK(is_cubical(b, c).ok);
    CHECK(default_cubical(b, 7).values == c.values);
  }
  // rank-1: single facet, no positivity constraints, anything verifies
  BuildingSet b11 = maximal_building_set(uniform_matroid(1, 1));
  CHECK(is_cubical(b11, default_cubical(b11, 0)).ok);
}

TEST_CASE("restricted cubical functions") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  CubicalFunction c = broom_32_c(bM);

  BuildingSet p0 = product_building_set(bM, sub(m, "0"));
  CubicalFunction r0 = restrict_cubical(bM, sub(m, "0"), c, p0);
  CHECK(r0.at(sub(m, "1")) == Rat(4) - Rat(3));  // c_01 - c_0
  CHECK(is_cubical(p0, r0).ok);

  // a value carried over unchanged: member below Z
  BuildingSet p123 = product_building_set(bM, sub(m, "1,2,3"));
  CubicalFunction r123 = restrict_cubical(bM, sub(m, "1,2,3"), c, p123);
  CHECK(r123.at(sub(m, "1")) == c.at(sub(m, "1")));
  CHECK(is_cubical(p123, r123).ok);

  // vertex equality: v_{tau_Z(N)} under tau_Z(c) equals v_N under c
  for (Subset z : bM.members) {
    if (bM.is_maximal_member(z)) continue;
    BuildingSet p = product_building_set(bM, z);
    CubicalFunction rc = restrict_cubical(bM, z, c, p);
    CHECK(is_cubical(p, rc).ok);
    for (const NestedSet& n : facets(bM)) {
      if (!n.contains(z)) continue;
      NestedSet img = link_image(bM, z, n, p);
      CHECK(vertex(p, img, rc).point == vertex(bM, n, c).point);
    }
  }
}

TEST_CASE("lexicographic vectors on the broom") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  CubicalFunction c = broom_32_c(bM);

  CHECK(is_lexicographic_vector(bM, c, vec({1000, 100, 10, 1})).ok);

  auto bad = is_lexicographic_vector(bM, c, vec({1, 100, 101, -1000}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.counterexample.has_value());

  BuildingSet b11 = maximal_building_set(uniform_matroid(1, 1));
  CubicalFunction c11;
  c11.values[1] = 5;
  CHECK(is_lexicographic_vector(b11, c11, RatVec{Rat(2)}).ok);
}

TEST_CASE("gram invertibility and vertex distinctness across small instances") {
  for (Matroid m : {broom_matroid(), boolean_matroid(3)}) {
    for (const BuildingSet& b : enumerate_building_sets(m, 1 << 16)) {
      CubicalFunction c = default_cubical(b, 1);
      auto fs = facets(b);
      auto sols = facet_vertices(b, c, fs, 1);  // vertex() would throw on singular grams
      for (size_t i = 0; i < sols.size(); ++i)
        for (size_t j = i + 1; j < sols.size(); ++j)
          CHECK(sols[i].point != sols[j].point);
    }
  }
}
