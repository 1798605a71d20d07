#include <set>
#include <vector>

#include "doctest.h"
#include "factorlab/box_primary.hpp"
#include "factorlab/engine.hpp"
#include "factorlab/length_system.hpp"

using namespace factorlab;

TEST_CASE("box atoms are the edge pairs") {
  BoxPrimary m(8);
  CHECK(m.cancellative());
  for (int i = 0; i < m.atom_count(); ++i) {
    Element a = m.atom(i);
    CHECK((a[0] == 1 || a[1] == 1));
  }
  CHECK(m.atom_count() == 15);  // (1,1)..(1,8) and (2,1)..(8,1)
  CHECK(m.contains(Element{3, 5}));
  CHECK_FALSE(m.contains(Element{0, 4}));
  CHECK_FALSE(m.contains(Element{9, 1}));
}

TEST_CASE("recorded length sets inside the box") {
  BoxPrimary m(12);
  Engine e(m);
  CHECK(e.lengths(Element{1, 5}) == std::set<std::int64_t>{1});
  CHECK(e.lengths(Element{2, 2}) == std::set<std::int64_t>{2});
  CHECK(e.lengths(Element{3, 3}) == std::set<std::int64_t>{2, 3});
  std::set<std::int64_t> expect;
  for (std::int64_t l = 2; l <= 6; ++l) expect.insert(l);
  CHECK(e.lengths(Element{6, 6}) == expect);
}

TEST_CASE("every k within the box lands in the union at 2") {
  BoxPrimary m(12);
  Engine e(m);
  UnionResult u = e.union_of_lengths(2, 12);
  std::set<std::int64_t> expect;
  for (std::int64_t l = 2; l <= 12; ++l) expect.insert(l);
  CHECK(u.values == expect);
  CHECK_FALSE(u.exact);  // the untruncated monoid continues past any box
}

TEST_CASE("absorption bounds agree with the exhaustive search") {
  BoxPrimary m(8);
  for (std::int64_t x = 1; x <= 6; ++x) {
    for (std::int64_t y = 1; y <= 6; ++y) {
      Element a{x, y};
      CHECK(m.strong_primary_bound(a) == std::max(x, y) + 1);
      CHECK(m.strong_primary_bound(a) == m.strong_primary_bound_brute(a));
    }
  }
  CHECK_THROWS_AS(m.strong_primary_bound(Element{0, 0}), ScopeError);
  // sup of the lengths never beats the absorption bound
  Engine e(m);
  for (std::int64_t x = 1; x <= 8; ++x) {
    for (std::int64_t y = 1; y <= 8; ++y) {
      const auto& L = e.lengths(Element{x, y});
      CHECK(*L.rbegin() <= m.strong_primary_bound(Element{x, y}));
    }
  }
}

TEST_CASE("descriptor parsing and naming") {
  CHECK(parse_system_descriptor("C4") == LengthSystemKind::C4);
  CHECK(parse_system_descriptor("C22") == LengthSystemKind::C22);
  CHECK(system_descriptor_name(LengthSystemKind::C33) == "C33");
  CHECK_THROWS_AS(parse_system_descriptor("C99"), std::invalid_argument);
}

TEST_CASE("membership shapes per family") {
  using V = std::vector<std::int64_t>;
  // singletons belong everywhere, the empty set nowhere
  for (auto k : {LengthSystemKind::C1, LengthSystemKind::C3, LengthSystemKind::C4,
                 LengthSystemKind::C23, LengthSystemKind::C33}) {
    CHECK(system_member(k, V{0}));
    CHECK(system_member(k, V{7}));
    CHECK_FALSE(system_member(k, V{}));
  }
  // C1/C2 admit singletons only
  CHECK_FALSE(system_member(LengthSystemKind::C2, V{2, 3}));
  // C3 and C22 admit the intervals [2k+y, 3k+y] (plus singletons), so a
  // width-2 interval starts at 4 or later
  CHECK(system_member(LengthSystemKind::C3, V{2, 3}));
  CHECK(system_member(LengthSystemKind::C3, V{4, 5, 6}));
  CHECK_FALSE(system_member(LengthSystemKind::C3, V{2, 3, 4}));
  CHECK_FALSE(system_member(LengthSystemKind::C3, V{1, 2}));
  CHECK_FALSE(system_member(LengthSystemKind::C3, V{2, 4}));
  CHECK(system_member(LengthSystemKind::C22, V{2, 3}));
  CHECK_FALSE(system_member(LengthSystemKind::C22, V{2, 3, 4}));
  // C4 adds the difference-2 progressions with min >= 2
  CHECK(system_member(LengthSystemKind::C4, V{2, 4}));
  CHECK(system_member(LengthSystemKind::C4, V{3, 5}));
  CHECK_FALSE(system_member(LengthSystemKind::C4, V{2, 5}));
  CHECK_FALSE(system_member(LengthSystemKind::C4, V{1, 3}));
}

TEST_CASE("member listings below a cap") {
  CHECK(system_members(LengthSystemKind::C3, 20).size() == 84);
  CHECK(system_members(LengthSystemKind::C4, 20).size() == 156);
  CHECK(system_members(LengthSystemKind::C23, 20).size() == 164);
  CHECK(system_members(LengthSystemKind::C33, 20).size() == 138);
  // the C4 family is contained in the C23 family
  for (const auto& s : system_members(LengthSystemKind::C4, 20)) {
    CHECK(system_member(LengthSystemKind::C23, s));
  }
}

TEST_CASE("families are closed under sumsets") {
  using V = std::vector<std::int64_t>;
  CHECK(sumset_sorted(V{2, 3}, V{2, 4}) == V{4, 5, 6, 7});
  CHECK(sumset_sorted(V{0}, V{5}) == V{5});
  for (auto k : {LengthSystemKind::C3, LengthSystemKind::C4}) {
    auto members = system_members(k, 8);
    for (const auto& a : members) {
      for (const auto& b : members) {
        CHECK_MESSAGE(system_member(k, sumset_sorted(a, b)), "family closure");
      }
    }
  }
}

TEST_CASE("the system as a monoid factors its own members") {
  LengthSystemMonoid m(LengthSystemKind::C4);
  CHECK_FALSE(m.cancellative());
  REQUIRE(m.atom_count() == 4);
  CHECK(m.atom(0) == Element{1});
  CHECK(m.atom(1) == Element{2, 3});
  CHECK(m.atom(2) == Element{2, 4});
  CHECK(m.atom(3) == Element{3, 4, 5});
  Engine e(m);
  // {2,3,4} = {2,3}+... no: {1}+{1}+... check a concrete split: {4,5,6,7} = {2,3}+{2,4}
  CHECK(e.factorization_count(Element{4, 5, 6, 7}) > 0);
  CHECK(m.identity() == Element{0});
  CHECK_THROWS_AS(LengthSystemMonoid(LengthSystemKind::C4, 5), std::invalid_argument);
}

TEST_CASE("atom tables of all seven families") {
  using T = std::vector<Element>;
  struct Row {
    LengthSystemKind kind;
    T atoms;
  };
  const Row rows[] = {
      {LengthSystemKind::C1, {{1}}},
      {LengthSystemKind::C2, {{1}}},
      {LengthSystemKind::C3, {{1}, {2, 3}}},
      {LengthSystemKind::C22, {{1}, {2, 3}}},
      {LengthSystemKind::C4, {{1}, {2, 3}, {2, 4}, {3, 4, 5}}},
      {LengthSystemKind::C23, {{1}, {2, 3}, {2, 4}, {3, 4, 5}, {3, 4, 5, 6}, {4, 5, 6, 7, 8}}},
      {LengthSystemKind::C33, {{1}, {2, 3}, {2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6, 7}}},
  };
  for (const Row& r : rows) {
    LengthSystemMonoid m(r.kind);
    REQUIRE_MESSAGE(m.atom_count() == static_cast<int>(r.atoms.size()),
                    system_descriptor_name(r.kind));
    for (int i = 0; i < m.atom_count(); ++i) CHECK(m.atom(i) == r.atoms[i]);
  }
}
