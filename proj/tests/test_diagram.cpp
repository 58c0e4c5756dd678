#include <doctest.h>

#include "auglink/twist.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace auglink;

TEST_CASE("trefoil parses with the expected counts") {
  Diagram d = parse_pd(fixtures::trefoil());
  CHECK(d.num_crossings() == 3);
  CHECK(d.num_edges == 6);
  CHECK(d.faces.size() == 5);
  CHECK(d.connected);
  CHECK(d.is_knot());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_pd(""), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,4,2]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,1,1,2] X[2,3,3,4]"), ParseError);  // edge 1 three times
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
  // Swapping one tuple's rotation makes the trefoil non-spherical.
  CHECK_THROWS_AS(parse_pd("X[1,4,2,3] X[3,6,4,5] X[5,2,1,6]"), ParseError);
}

TEST_CASE("disconnected diagrams are flagged, not fatal") {
  Diagram d = parse_pd(fixtures::split_two_trefoils());
  CHECK_FALSE(d.connected);
  CHECK(d.num_components == 2);
}

TEST_CASE("face counts and degree sums") {
  Diagram tre = parse_pd(fixtures::trefoil());
  Diagram f8 = parse_pd(fixtures::figure8());
  CHECK(f8.faces.size() == 6);
  int deg_sum = 0;
  for (const auto& f : f8.faces) deg_sum += f.degree();
  CHECK(deg_sum == 2 * f8.num_edges);
  int bigons = 0;
  for (const auto& f : tre.faces) bigons += f.is_bigon();
  CHECK(bigons == 3);
}

TEST_CASE("serialization round trip") {
  for (const auto& pd : {fixtures::trefoil(), fixtures::figure8(), fixtures::p333()}) {
    Diagram d = parse_pd(pd);
    std::string s = serialize_pd(d);
    Diagram d2 = parse_pd(s);
    CHECK(serialize_pd(d2) == s);
    CHECK(d2.crossings == d.crossings);
  }
}

TEST_CASE("twist regions of the standard fixtures") {
  SUBCASE("trefoil: one cyclic region of three crossings") {
    TwistAnalysis ta = twist_regions(parse_pd(fixtures::trefoil()));
    CHECK(ta.t == 1);
    CHECK(ta.h == 3);
    CHECK(ta.regions[0].cyclic);
  }
  SUBCASE("figure eight: two regions of two") {
    TwistAnalysis ta = twist_regions(parse_pd(fixtures::figure8()));
    CHECK(ta.t == 2);
    CHECK(ta.h == 2);
    CHECK(ta.regions[0].n == 2);
    CHECK(ta.regions[1].n == 2);
    CHECK(ta.all_alternating);
  }
  SUBCASE("no bigons: every crossing its own region") {
    Diagram d = parse_pd(fixtures::borromean());
    TwistAnalysis ta = twist_regions(d);
    CHECK(ta.t == d.num_crossings());
    CHECK(ta.h == 1);
  }
  SUBCASE("double twist bands are alternating linear chains") {
    TwistAnalysis ta = twist_regions(parse_pd(fixtures::dt67()));
    CHECK(ta.t == 2);
    CHECK(ta.h == 6);
    CHECK(ta.all_alternating);
    for (const auto& r : ta.regions) CHECK_FALSE(r.cyclic);
  }
}

TEST_CASE("primeness") {
  CHECK(is_prime(parse_pd(fixtures::trefoil())).prime);
  CHECK(is_prime(parse_pd(fixtures::figure8())).prime);

  SUBCASE("granny knot has a two-edge cut") {
    PrimeResult r = is_prime(parse_pd(fixtures::granny()));
    REQUIRE_FALSE(r.prime);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == PrimeWitness::TwoEdgeCut);
    CHECK(r.witness->e1 == 6);
    CHECK(r.witness->e2 == 12);
    CHECK(r.witness->side_a.size() == 3);
  }
  SUBCASE("one-crossing curl is nugatory") {
    PrimeResult r = is_prime(parse_pd(fixtures::curl()));
    REQUIRE_FALSE(r.prime);
    CHECK(r.witness->kind == PrimeWitness::NugatoryCrossing);
  }
}

TEST_CASE("twist-reducedness") {
  CHECK(is_twist_reduced(parse_pd(fixtures::figure8())).reduced);
  CHECK(is_twist_reduced(parse_pd(fixtures::trefoil())).reduced);  // one region: vacuous
  SUBCASE("flype-able diagram is caught with a witness") {
    Diagram d = parse_pd(fixtures::ring_fig8());
    TwistAnalysis ta = twist_regions(d);
    TwistReducedResult r = is_twist_reduced(d, ta);
    REQUIRE_FALSE(r.reduced);
    REQUIRE(r.witness.has_value());
    CHECK(ta.crossing_region[r.witness->c1] != ta.crossing_region[r.witness->c2]);
  }
}

TEST_CASE("hypothesis reports") {
  SUBCASE("figure eight fails on height") {
    HypothesisReport h = check_hypotheses(parse_pd(fixtures::figure8()));
    CHECK(h.connected);
    CHECK(h.prime);
    CHECK(h.twist_reduced);
    CHECK(h.t == 2);
    CHECK(h.h == 2);
    CHECK_FALSE(h.hypotheses_met);
  }
  SUBCASE("double twist with six and seven crossings meets every hypothesis") {
    HypothesisReport h = check_hypotheses(parse_pd(fixtures::dt67()));
    CHECK(h.hypotheses_met);
    CHECK(h.h == 6);
    CHECK(h.t == 2);
    CHECK(h.is_knot);
  }
  SUBCASE("split diagram fails connectivity") {
    HypothesisReport h = check_hypotheses(parse_pd(fixtures::split_two_trefoils()));
    CHECK_FALSE(h.connected);
    CHECK_FALSE(h.hypotheses_met);
  }
}

TEST_CASE("euler and degree-sum invariants across the corpus") {
  for (const auto& pd :
       {fixtures::trefoil(), fixtures::figure8(), fixtures::curl(), fixtures::granny(),
        fixtures::dt22(), fixtures::ring_fig8(), fixtures::p222(), fixtures::p333(),
        fixtures::p234(), fixtures::p2222(), fixtures::borromean(), fixtures::dt67(),
        fixtures::dt66(), fixtures::p666()}) {
    Diagram d = parse_pd(pd);
    int euler = d.num_crossings() - d.num_edges + static_cast<int>(d.faces.size());
    CHECK(euler == 2);
    int deg = 0;
    for (const auto& f : d.faces) deg += f.degree();
    CHECK(deg == 2 * d.num_edges);
    CHECK(static_cast<int>(d.faces.size()) == oracles::face_count_reversed(d));
  }
}

TEST_CASE("oracle agreement on diagrams with at most ten crossings") {
  for (const auto& pd :
       {fixtures::trefoil(), fixtures::figure8(), fixtures::curl(), fixtures::granny(),
        fixtures::dt22(), fixtures::ring_fig8(), fixtures::p222(), fixtures::p333(),
        fixtures::p234(), fixtures::p2222(), fixtures::borromean()}) {
    Diagram d = parse_pd(pd);
    CAPTURE(pd);
    CHECK(is_prime(d).prime == oracles::prime_bruteforce(d));
    CHECK(is_twist_reduced(d).reduced == oracles::twist_reduced_bruteforce(d));
    // Region partitions agree.
    TwistAnalysis ta = twist_regions(d);
    auto reg = oracles::regions_bruteforce(d);
    for (int a = 0; a < d.num_crossings(); ++a)
      for (int b = 0; b < d.num_crossings(); ++b)
        CHECK((ta.crossing_region[a] == ta.crossing_region[b]) == (reg[a] == reg[b]));
  }
}
