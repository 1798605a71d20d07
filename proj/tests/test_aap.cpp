#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "factorlab/aap.hpp"

using namespace factorlab;
using S = std::set<std::int64_t>;
using V = std::vector<std::int64_t>;

TEST_CASE("single-class fit picks the cheapest anchor") {
  ProgressionFit f = fit_aap(S{2, 3, 5}, 1);
  REQUIRE(f.ok);
  CHECK(f.y == 2);
  CHECK(f.bound == 2);
  CHECK(f.core_max == 1);
  CHECK(f.head.empty());
  CHECK(f.core == V{0, 1});
  CHECK(f.tail == V{3});
}

TEST_CASE("mixed residues are rejected for a single class") {
  CHECK_FALSE(fit_aap(S{2, 5}, 2).ok);
  CHECK_FALSE(fit_aap(S{}, 1).ok);
}

TEST_CASE("plain progressions fit with bound zero") {
  ProgressionFit f = fit_aap(S{2, 4, 6}, 2);
  REQUIRE(f.ok);
  CHECK(f.bound == 0);
  CHECK(f.y == 2);
  CHECK(f.core == V{0, 2, 4});
  CHECK(f.head.empty());
  CHECK(f.tail.empty());

  ProgressionFit s = fit_aap(S{7}, 3);
  REQUIRE(s.ok);
  CHECK(s.bound == 0);
}

TEST_CASE("multi-period membership is decided exactly") {
  CHECK_FALSE(fit_aamp(S{0, 1, 3}, 3, S{0, 3}, 0));
  CHECK(fit_aamp(S{0, 1, 3}, 3, S{0, 1, 3}, 0));
  // a residue outside y + period + dZ is fatal no matter the bound
  CHECK_FALSE(fit_aamp(S{0, 1, 3}, 3, S{0, 3}, 5));
  CHECK(fit_aamp(S{0, 1, 3, 4, 6}, 3, S{0, 1, 3}, 0));
  CHECK(fit_aamp(S{2, 4, 5}, 1, S{0, 1}, 2));
  CHECK_FALSE(fit_aamp(S{2, 4, 5}, 1, S{0, 1}, 1));
}

TEST_CASE("multi-period preconditions") {
  CHECK_THROWS_AS(fit_aamp(S{1, 2}, 0, S{0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(fit_aamp(S{1, 2}, 2, S{0}, 0), std::invalid_argument);      // missing d
  CHECK_THROWS_AS(fit_aamp(S{1, 2}, 2, S{0, 2, 5}, 0), std::invalid_argument);  // 5 > d
}

TEST_CASE("minimal multi-period bound and certificate") {
  PeriodFit f = fit_aamp_min(S{2, 4, 5}, 1);
  REQUIRE(f.ok);
  CHECK(f.bound == 2);
  CHECK(f.period == S{0, 1});
  CHECK(fit_aamp(S{2, 4, 5}, 1, f.period, f.bound));
  CHECK_FALSE(fit_aamp(S{2, 4, 5}, 1, f.period, f.bound - 1));

  PeriodFit g = fit_aamp_min(S{2, 4, 6}, 2);
  REQUIRE(g.ok);
  CHECK(g.bound == 0);
  CHECK(g.period == S{0, 2});
}

TEST_CASE("random sets certify their own minimal bounds") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    S L;
    int size = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < size; ++i) L.insert(2 + static_cast<std::int64_t>(rng() % 12));
    std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 4);
    PeriodFit f = fit_aamp_min(L, d);
    REQUIRE(f.ok);
    CHECK(fit_aamp(L, d, f.period, f.bound));
    if (f.bound > 0) CHECK_FALSE(fit_aamp(L, d, f.period, f.bound - 1));
    // the single-class fit can never beat the multi-period minimum
    ProgressionFit single = fit_aap(L, d);
    if (single.ok) CHECK(f.bound <= single.bound);
    // any admissible period fits once the bound swallows the whole spread
    S full;
    for (std::int64_t r = 0; r <= d; ++r) full.insert(r);
    std::int64_t spread = *L.rbegin() - *L.begin();
    CHECK(fit_aamp(L, d, full, spread));
  }
}
