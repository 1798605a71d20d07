#include <set>
#include <vector>

#include "doctest.h"
#include "factorlab/block_monoid.hpp"
#include "factorlab/engine.hpp"
#include "oracles.hpp"

using namespace factorlab;

namespace {

BlockMonoid block_cn(int n) { return BlockMonoid::over_group(AbelianGroup(std::vector<int>{n})); }

}  // namespace

TEST_CASE("factorizations of the C3 witness") {
  BlockMonoid b = block_cn(3);
  Engine e(b);
  Element a{0, 3, 3};  // (1)^3 (2)^3
  auto zs = e.factorizations(a);
  REQUIRE(zs.size() == 2);
  CHECK(factorization_str(b, zs[0]) == "(2)^3 (1)^3");
  CHECK(factorization_str(b, zs[1]) == "(1)(2)^3");
  CHECK(factorization_length(zs[0]) == 2);
  CHECK(factorization_length(zs[1]) == 3);
  CHECK(e.factorization_count(a) == 2);
  CHECK(e.lengths(a) == std::set<std::int64_t>{2, 3});
  CHECK(e.catenary_degree(a) == 3);
  CHECK(delta_set(e.lengths(a)) == std::set<std::int64_t>{1});
  CHECK(elasticity(e.lengths(a)) == Rational(3, 2));
}

TEST_CASE("identity element has the empty factorization only") {
  BlockMonoid b = block_cn(3);
  Engine e(b);
  CHECK(e.factorization_count(b.identity()) == 1);
  CHECK(e.lengths(b.identity()) == std::set<std::int64_t>{0});
  CHECK(e.catenary_degree(b.identity()) == 0);
}

TEST_CASE("distance cancels the common part") {
  Factorization x{{1, 2}, {2, 1}};
  Factorization y{{1, 2}, {3, 2}};
  CHECK(factorization_distance(x, x) == 0);
  CHECK(factorization_distance(x, y) == 2);  // remainders (2,1) vs (3,2)
  Factorization p{{1, 3}};
  Factorization q{{2, 1}, {3, 1}};
  CHECK(factorization_distance(p, q) == 3);
}

TEST_CASE("length sets agree with the full factorization listing") {
  BlockMonoid b = block_cn(4);
  Engine e(b);
  for (const Element& a : b.scope_elements(8)) {
    std::set<std::int64_t> via_listing;
    for (const auto& z : e.factorizations(a)) via_listing.insert(factorization_length(z));
    CHECK(via_listing == e.lengths(a));
    CHECK(e.factorization_count(a) ==
          testing_oracles::additive_factorization_count(b, a));
  }
}

TEST_CASE("set helpers") {
  CHECK(delta_set({2, 4, 5, 9}) == std::set<std::int64_t>{1, 2, 4});
  CHECK(delta_set({3}).empty());
  CHECK(delta_set({}).empty());
  CHECK(elasticity({0}) == Rational(1));
  CHECK(elasticity({}) == Rational(1));
  CHECK(elasticity({2, 5}) == Rational(5, 2));
  CHECK(is_interval({2, 3, 4}));
  CHECK(is_interval({7}));
  CHECK_FALSE(is_interval({2, 4}));
  CHECK(is_interval({}));
}

TEST_CASE("unions of length sets with certified scopes") {
  struct Row {
    int n;
    std::int64_t k;
    std::set<std::int64_t> values;
  };
  const Row rows[] = {
      {3, 2, {2, 3}},    {3, 3, {2, 3, 4}},    {3, 4, {3, 4, 5, 6}},
      {4, 2, {2, 3, 4}}, {4, 3, {2, 3, 4, 5}}, {5, 2, {2, 3, 4, 5}},
      {6, 2, {2, 3, 4, 5, 6}},
  };
  for (const Row& r : rows) {
    BlockMonoid b = block_cn(r.n);
    Engine e(b);
    auto u = e.union_of_lengths(r.k, r.k * b.max_atom_length());
    CHECK_MESSAGE(u.values == r.values, "C", r.n, " k=", r.k);
    CHECK(u.exact);
  }
  // C2xC2: unions match C3's, a scope too small loses the certificate
  BlockMonoid b22 = BlockMonoid::over_group(AbelianGroup(std::vector<int>{2, 2}));
  Engine e22(b22);
  CHECK(e22.union_of_lengths(2, 6).values == std::set<std::int64_t>{2, 3});
  CHECK(e22.union_of_lengths(2, 6).exact);
  CHECK_FALSE(e22.union_of_lengths(2, 5).exact);
  CHECK(e22.union_of_lengths(0, 1).values == std::set<std::int64_t>{0});
  CHECK(e22.union_of_lengths(1, 1).values == std::set<std::int64_t>{1});
}

TEST_CASE("tame degree of the order-two atom over C3") {
  BlockMonoid b = block_cn(3);
  Engine e(b);
  REQUIRE(b.atom_name(1) == "(1)(2)");
  auto t = e.tame_degree(1, 9);
  CHECK_FALSE(t.empty_scope);
  CHECK(t.value == 3);
  CHECK(t.witness_element == Element{0, 3, 3});
  CHECK(t.witness_from == Factorization{{2, 1}, {3, 1}});
  CHECK(t.witness_to == Factorization{{1, 3}});
}
