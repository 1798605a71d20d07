#include <stdexcept>

#include "doctest.h"
#include "factorlab/monoid_spec.hpp"

using namespace factorlab;
using nlohmann::ordered_json;

namespace {

std::unique_ptr<PresentedMonoid> from(const char* text) {
  return make_monoid(ordered_json::parse(text));
}

}  // namespace

TEST_CASE("every kind constructs") {
  CHECK(from(R"({"kind":"block","group":[3],"g0":"all"})")->family() == "block");
  CHECK(from(R"({"kind":"block","group":[2,2],"g0":"nonzero"})")->atom_count() == 4);
  CHECK(from(R"({"kind":"block","group":[4],"g0":[[1],[3]]})")->atom_count() == 3);
  CHECK(from(R"({"kind":"numerical","generators":[2,3]})")->family() == "numerical");
  CHECK(from(R"({"kind":"affine","generators":[[2,0],[1,1],[0,2]]})")->family() == "affine");
  CHECK(from(R"({"kind":"power0","max_value":4})")->family() == "power0");
  CHECK(from(R"({"kind":"box_primary","bound":6})")->family() == "box_primary");
  CHECK(from(R"({"kind":"length_system","descriptor":"C4"})")->family() == "length_system");
  CHECK(from(R"({"kind":"krull","group":[3],"primes":{"p":[1],"q":[2]}})")->family() == "krull");
  auto p = from(R"({"kind":"product","factors":[
      {"kind":"numerical","generators":[2,3]},
      {"kind":"numerical","generators":[3,5]}]})");
  CHECK(p->family() == "product");
  CHECK(p->atom_count() == 4);
}

TEST_CASE("defaults fill in") {
  // g0 defaults to the whole group
  CHECK(from(R"({"kind":"block","group":[3]})")->atom_count() == 4);
}

TEST_CASE("malformed specs name the offending field") {
  CHECK_THROWS_WITH_AS(from(R"({"group":[3]})"),
                       doctest::Contains("kind"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(from(R"({"kind":"blok"})"),
                       doctest::Contains("kind"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(from(R"({"kind":"block"})"),
                       doctest::Contains("group"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(from(R"({"kind":"block","group":[3],"g0":"some"})"),
                       doctest::Contains("g0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(from(R"({"kind":"numerical","generators":[]})"),
                       doctest::Contains("generator"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(from(R"({"kind":"power0","max_value":40})"),
                       doctest::Contains("max_value"), std::invalid_argument);
  CHECK_THROWS_AS(from(R"({"kind":"krull","group":[3],"primes":{}})"), std::invalid_argument);
}

TEST_CASE("element literals route through the family parser") {
  auto b = from(R"({"kind":"block","group":[3]})");
  Element a = b->parse_element(ordered_json::parse("[[[1],3],[[2],3]]"));
  CHECK(b->element_repr(a) == "(1)^3(2)^3");
  auto n = from(R"({"kind":"numerical","generators":[2,3]})");
  CHECK(n->parse_element(ordered_json::parse("6")) == Element{6});
  CHECK_THROWS_AS(n->parse_element(ordered_json::parse("1")), std::invalid_argument);
}

TEST_CASE("descriptions are stable strings") {
  CHECK(from(R"({"kind":"block","group":[3]})")->describe() ==
        "zero-sum multisets over 3 support elements of C3");
  CHECK(from(R"({"kind":"numerical","generators":[2,3]})")->describe() ==
        "numerical monoid <2,3>");
}
