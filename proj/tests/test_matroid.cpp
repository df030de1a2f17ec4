#include <doctest.h>

#include "bshell/generators.hpp"
#include "bshell/matroid.hpp"
#include "test_util.hpp"

using namespace bshell;
using namespace bshell::testutil;

TEST_CASE("broom matroid validates with rank 3") {
  Matroid m = broom_matroid();
  CHECK(m.flats().size() == 10);
  CHECK(m.rank() == 3);
  CHECK(m.rank_of_flat(sub(m, "0,1")) == 2);
  CHECK(m.rank_of_flat(sub(m, "1,2,3")) == 2);
  CHECK(m.atoms().size() == 4);
}

TEST_CASE("smallest loopless matroid U_{1,1}") {
  Matroid m = uniform_matroid(1, 1);
  CHECK(m.flats().size() == 2);
  CHECK(m.rank() == 1);
}

TEST_CASE("broom without 123 fails the cover-partition axiom") {
  Matroid broom = broom_matroid();
  std::vector<Subset> flats;
  for (Subset f : broom.flats())
    if (f != sub(broom, "1,2,3")) flats.push_back(f);
  CHECK_THROWS_AS(Matroid::validate(broom.ground(), flats), CoverPartitionViolation);
}

TEST_CASE("flat-list validation errors") {
  GroundSet g{{"0", "1"}};
  // missing empty set: loops
  CHECK_THROWS_AS(Matroid::validate(g, {0b11, 0b01}), HasLoops);
  // missing ground set
  CHECK_THROWS_AS(Matroid::validate(g, {0b00, 0b01}), NotALattice);
  // not intersection closed on three elements
  GroundSet g3{{"0", "1", "2"}};
  CHECK_THROWS_AS(Matroid::validate(g3, {0b000, 0b011, 0b110, 0b111}), NotALattice);
}

TEST_CASE("closure on the broom") {
  Matroid m = broom_matroid();
  CHECK(m.closure(sub(m, "1,2")) == sub(m, "1,2,3"));
  CHECK(m.closure(0) == 0);
  CHECK(m.closure(sub(m, "0,1")) == sub(m, "0,1"));
}

TEST_CASE("rank of subsets on the broom") {
  Matroid m = broom_matroid();
  CHECK(m.rank_of(sub(m, "0,1,2,3")) == 3);
  CHECK(m.rank_of(0) == 0);
  CHECK(m.rank_of(sub(m, "1,2,3")) == 2);
}

TEST_CASE("join and meet on the broom") {
  Matroid m = broom_matroid();
  CHECK(m.join(sub(m, "0"), sub(m, "1")) == sub(m, "0,1"));
  CHECK(m.join({sub(m, "1,2,3")}) == sub(m, "1,2,3"));
  CHECK(m.join(sub(m, "0,1"), sub(m, "2")) == sub(m, "0,1,2,3"));
  CHECK(m.meet(sub(m, "0,1"), sub(m, "0,2")) == sub(m, "0"));
}

TEST_CASE("restriction of the broom") {
  Matroid m = broom_matroid();
  Matroid r = m.restriction(sub(m, "1,2,3"));
  CHECK(r.ground().labels == std::vector<std::string>{"1", "2", "3"});
  CHECK(r.flats().size() == 5);  // U_{2,3}
  CHECK(r.rank() == 2);

  Matroid whole = m.restriction(m.full_set());
  CHECK(whole.flats() == m.flats());

  Matroid b2 = m.restriction(sub(m, "0,1"));
  CHECK(b2.flats().size() == 4);  // Boolean on {0,1}
}

TEST_CASE("contraction of the broom") {
  Matroid m = broom_matroid();
  Matroid c1 = m.contraction(sub(m, "1"));
  CHECK(c1.ground().labels == std::vector<std::string>{"0", "2", "3"});
  CHECK(c1.flats() == subs(c1, {"", "0", "2,3", "0,2,3"}));

  Matroid c_empty = m.contraction(0);
  CHECK(c_empty.flats() == m.flats());

  Matroid c0 = m.contraction(sub(m, "0"));
  CHECK(c0.flats() == subs(c0, {"", "1", "2", "3", "1,2,3"}));
}

TEST_CASE("direct sum flats are exactly the pairwise unions") {
  Matroid m = broom_matroid();
  Matroid r = m.restriction(sub(m, "1"));
  Matroid c = m.contraction(sub(m, "1"));
  Matroid s = direct_sum(r, c);
  CHECK(s.flats().size() == r.flats().size() * c.flats().size());
  CHECK(s.flats() == subs(s, {"", "1", "0", "2,3", "0,1", "1,2,3", "0,2,3", "0,1,2,3"}));

  Matroid empty = Matroid::validate(GroundSet{}, {0});
  Matroid same = direct_sum(m, empty);
  CHECK(same.flats() == m.flats());

  GroundSet ga{{"a"}}, gb{{"b"}};
  Matroid u1 = Matroid::validate(ga, {0, 1});
  Matroid u2 = Matroid::validate(gb, {0, 1});
  Matroid b2 = direct_sum(u1, u2);
  CHECK(b2.flats().size() == 4);

  CHECK_THROWS_AS(direct_sum(m, m), LabelCollision);
}

TEST_CASE("connectivity of flats") {
  Matroid m = broom_matroid();
  CHECK(m.is_connected_flat(sub(m, "1,2,3")));
  CHECK(m.is_connected_flat(sub(m, "0")));
  CHECK_FALSE(m.is_connected_flat(sub(m, "0,1,2,3")));
  CHECK(m.connected_flats() == subs(m, {"0", "1", "2", "3", "1,2,3"}));
}

TEST_CASE("rank increases along covers and maximal chains have full length") {
  for (const Matroid& m : {broom_matroid(), uniform_matroid(2, 4), uniform_matroid(3, 5)}) {
    for (size_t i = 0; i < m.flats().size(); ++i)
      for (int k : m.upper_covers()[i])
        CHECK(m.rank_of_flat(m.flats()[k]) == m.rank_of_flat(m.flats()[i]) + 1);
    // walk any maximal chain greedily
    int at = m.flat_index(0), len = 0;
    while (!m.upper_covers()[at].empty()) {
      at = m.upper_covers()[at][0];
      ++len;
    }
    CHECK(len == m.rank());
  }
}

TEST_CASE("closure is idempotent, extensive and monotone") {
  for (const Matroid& m : {broom_matroid(), uniform_matroid(3, 5)}) {
    const Subset full = m.full_set();
    for (Subset s = 0; s <= full; ++s) {
      Subset cl = m.closure(s);
      CHECK(subset_le(s, cl));
      CHECK(m.closure(cl) == cl);
    }
    for (Subset s = 0; s <= full; ++s)
      for (Subset t = s; t <= full; ++t)
        if (subset_le(s, t)) CHECK(subset_le(m.closure(s), m.closure(t)));
  }
}

TEST_CASE("parallel elements: atoms are rank-1 flats, not singletons") {
  // U_{1,2}: two parallel elements, a single atom {0,1}
  GroundSet g{{"0", "1"}};
  Matroid m = Matroid::validate(g, {0b00, 0b11});
  CHECK(m.atoms().size() == 1);
  CHECK(m.atoms()[0] == 0b11);
  CHECK(m.atom_of(1) == 0b11);
}

TEST_CASE("reorder_ground permutes labels and flats consistently") {
  Matroid m = broom_matroid();
  Matroid p = reorder_ground(m, {2, 1, 3, 0});
  CHECK(p.ground().labels == std::vector<std::string>{"2", "1", "3", "0"});
  CHECK(p.flats().size() == m.flats().size());
  CHECK(p.is_flat(sub(p, "1,2,3")));
  CHECK(p.is_flat(sub(p, "0,1")));
  CHECK(canonical_form(p) == canonical_form(m));
}

TEST_CASE("graphic matroid of the triangle is U_{2,3}") {
  Matroid t = graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(t.flats().size() == 5);
  CHECK(t.rank() == 2);
  CHECK(canonical_form(t) == canonical_form(uniform_matroid(2, 3)));
}
