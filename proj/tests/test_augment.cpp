#include <doctest.h>

#include "auglink/augment.hpp"
#include "fixtures.hpp"

using namespace auglink;

TEST_CASE("augment adds one circle per region") {
  SUBCASE("figure eight") {
    AugmentedStructure a = augment(parse_pd(fixtures::figure8()));
    CHECK(a.circles.size() == 2);
    CHECK(a.circles[0].n == 2);
    CHECK(a.circles[1].n == 2);
  }
  SUBCASE("trefoil") {
    AugmentedStructure a = augment(parse_pd(fixtures::trefoil()));
    CHECK(a.circles.size() == 1);
    CHECK(a.circles[0].n == 3);
  }
  SUBCASE("no crossings") {
    Diagram d;  // never produced by parse_pd; direct construction
    d.connected = true;
    CHECK_THROWS_AS(augment(d), AugmentError);
  }
  SUBCASE("disconnected") {
    CHECK_THROWS_AS(augment(parse_pd(fixtures::split_two_trefoils())), AugmentError);
  }
}

TEST_CASE("flatten reduces regions mod 2") {
  AugmentedStructure a = flatten(augment(parse_pd(fixtures::dt67())));
  REQUIRE(a.circles.size() == 2);
  int even = a.circles[0].n % 2 == 0 ? 0 : 1;
  CHECK(a.parity[even] == 0);
  CHECK(a.parity[1 - even] == 1);
  CHECK(std::abs(a.removed_full_twists[even]) == 3);
  CHECK(std::abs(a.removed_full_twists[1 - even]) == 3);

  SUBCASE("idempotent") {
    AugmentedStructure f2 = flatten(a);
    CHECK(f2.parity == a.parity);
    CHECK(f2.removed_full_twists == a.removed_full_twists);
  }
  SUBCASE("round trip recovers the crossing counts") {
    for (size_t i = 0; i < a.circles.size(); ++i)
      CHECK(a.circles[i].n == 2 * std::abs(a.removed_full_twists[i]) + a.parity[i]);
  }
}

TEST_CASE("filling slopes") {
  CrossingCircle c;
  c.n = 3;
  CHECK(c.filling_slope() == std::make_pair(1, 3));
  c.n = 0;
  CHECK(c.filling_slope() == std::make_pair(1, 0));
  c.n = 6;
  CHECK(c.filling_slope() == std::make_pair(1, 6));
}

TEST_CASE("augmentation invariants over the corpus") {
  for (const auto& pd : {fixtures::figure8(), fixtures::dt23(), fixtures::p222(),
                         fixtures::p333(), fixtures::granny(), fixtures::borromean()}) {
    Diagram d = parse_pd(pd);
    AugmentedStructure a = augment(d);
    CHECK(static_cast<int>(a.circles.size()) == a.twist.t);
    AugmentedStructure f = flatten(a);
    for (size_t i = 0; i < f.circles.size(); ++i) {
      CHECK(f.parity[i] == f.circles[i].n % 2);
      CHECK(f.circles[i].n == 2 * std::abs(f.removed_full_twists[i]) + f.parity[i]);
    }
  }
}
