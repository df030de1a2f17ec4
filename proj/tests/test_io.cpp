#include <doctest.h>

#include "bshell/generators.hpp"
#include "bshell/io.hpp"
#include "test_util.hpp"

using namespace bshell;
using namespace bshell::testutil;

TEST_CASE("matroid JSON round trip") {
  for (const Matroid& m : {broom_matroid(), uniform_matroid(2, 4),
                           graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}})}) {
    Json j = matroid_to_json(m);
    Matroid back = matroid_from_json(j);
    CHECK(back.ground().labels == m.ground().labels);
    CHECK(back.flats() == m.flats());
    CHECK(matroid_to_json(back) == j);
  }
}

TEST_CASE("matroid JSON rejects malformed input") {
  CHECK_THROWS_AS(matroid_from_json(Json::parse(R"({"ground": ["0"]})")), InputError);
  CHECK_THROWS_AS(
      matroid_from_json(Json::parse(R"({"ground": ["0"], "flats": [["zzz"]]})")),
      InputError);
  // valid JSON, invalid matroid
  CHECK_THROWS_AS(
      matroid_from_json(Json::parse(R"({"ground": ["0"], "flats": [["0"]]})")), HasLoops);
}

TEST_CASE("building-set JSON round trip") {
  Matroid m = broom_matroid();
  BuildingSet b = minimal_building_set(m);
  Json j = building_to_json(b);
  BuildingSet back = building_from_json(m, j);
  CHECK(back.members == b.members);
  CHECK(building_to_json(back) == j);
}

TEST_CASE("c-vector JSON uses exact rational strings") {
  Matroid m = broom_matroid();
  BuildingSet b = minimal_building_set(m);
  CubicalFunction c;
  c.values[sub(m, "0")] = 3;
  c.values[sub(m, "1")] = Rat(1, 2);
  c.values[sub(m, "2")] = 1;
  c.values[sub(m, "3")] = 1;
  c.values[sub(m, "1,2,3")] = -3;
  Json j = cubical_to_json(m, c);
  CHECK(j["c"]["0"] == "3");
  CHECK(j["c"]["1"] == "1/2");
  CHECK(j["c"]["1,2,3"] == "-3");
  CubicalFunction back = cubical_from_json(m, j);
  CHECK(back.values == c.values);
}

TEST_CASE("rational parsing") {
  CHECK(rat_to_string(rat_from_string("4/6")) == "2/3");
  CHECK(rat_to_string(rat_from_string("-12")) == "-12");
  CHECK_THROWS_AS(rat_from_string("a/b"), InputError);
  CHECK_THROWS_AS(rat_from_string("1/0"), InputError);
  CHECK_THROWS_AS(rat_from_string(""), InputError);
}

TEST_CASE("facet and order reports") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  auto fs = facets(bM);
  Json fj = facets_to_json(bM, fs);
  CHECK(fj["full"].size() == 9);
  CHECK(fj["reduced"].size() == 9);

  CubicalFunction c;
  for (Subset x : bM.members) c.values[x] = Rat(card(x)) * Rat(4 - card(x));
  RatVec gamma = {1000, 100, 10, 1};
  FacetOrder o = nc_order(bM, c);
  Json rep = order_report_to_json(bM, o, &c, &gamma);
  CHECK(rep["provenance"] == "NC");
  CHECK(rep["facets"].size() == 9);
  CHECK(rep["facets"][0]["inner_product"] == "3078");
  CHECK(rep["facets"][8]["inner_product"] == "-2997");

  NestedSet back = facet_from_json(bM, rep["facets"][0]["facet"]);
  CHECK(back == o.facets[0]);
}

TEST_CASE("vertex report carries lambda, point and interior flag") {
  Matroid m = broom_matroid();
  BuildingSet bM = maximal_building_set(m);
  CubicalFunction c;
  for (Subset x : bM.members) c.values[x] = Rat(card(x)) * Rat(4 - card(x));
  auto sols = facet_vertices(bM, c, facets(bM), 1);
  Json rep = vertex_report_to_json(bM, sols);
  CHECK(rep.size() == 9);
  Json entry = rep["0|0,1|0,1,2,3"];
  CHECK(entry["point"] == Json::array({"3", "1", "-2", "-2"}));
  CHECK(entry["interior"] == true);
}
