#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nsurf/slope.hpp"

using namespace nsurf;

TEST_CASE("curve classification") {
  CHECK(slope_from_curve({1, 1, 1}, 0).cls == CurveClass::Trivial);
  CHECK_THROWS_AS(slope_from_curve({2, 2, 2}, 0), Error);   // two trivial curves
  CHECK_THROWS_AS(slope_from_curve({2, 1, 1}, 0), Error);   // mixed system
  CHECK_THROWS_AS(slope_from_curve({4, 0, 6}, 0), Error);   // two parallel copies

  auto s = slope_from_curve({2, 0, 5}, 0);
  REQUIRE(s.cls == CurveClass::Essential);
  CHECK(s.slope->p == 7);
  CHECK(s.slope->q == 5);
  CHECK(s.slope->arcs == ArcTriple{2, 0, 5});

  auto adj = slope_from_curve({1, 0, 1}, 0);
  REQUIRE(adj.cls == CurveClass::Essential);
  CHECK(adj.slope->p == 2);
  CHECK(adj.slope->q == 1);
  // distance one to both edge slopes its representative crosses once
  CHECK(slope_distance(*adj.slope, edge_slope(0, 0)) == 1);
  CHECK(slope_distance(*adj.slope, edge_slope(0, 2)) == 1);
}

TEST_CASE("round trip between pairs and arc triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-12, 12);
  int done = 0;
  while (done < 200) {
    int p = d(rng), q = d(rng);
    if (p == 0 && q == 0) continue;
    Int g = boost::multiprecision::gcd(Int(std::abs(p)), Int(std::abs(q)));
    if (g != 1) continue;
    Slope s = make_slope(0, p, q);
    auto back = slope_from_curve(s.arcs, 0);
    REQUIRE(back.cls == CurveClass::Essential);
    CHECK(back.slope->p == s.p);
    CHECK(back.slope->q == s.q);
    ++done;
  }
}

TEST_CASE("slope distance formula") {
  CHECK(slope_distance(edge_slope(0, 0), edge_slope(0, 1)) == 1);
  Slope g = make_slope(0, 7, 5);
  CHECK(slope_distance(g, g) == 0);
  CHECK(slope_distance(make_slope(0, 1, 0), make_slope(0, 2, 3)) == 3);
  Slope other = make_slope(1, 1, 0);
  CHECK_THROWS_AS(slope_distance(g, other), Error);
}

TEST_CASE("distance bilinearity on homology classes") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int it = 0; it < 200; ++it) {
    Int a = d(rng), b = d(rng), c = d(rng), e = d(rng), f = d(rng), g = d(rng), m = std::abs(d(rng));
    // <alpha, beta+gamma> = |a(d+f') - b(c+e')| style identities hold at the
    // class level; verify determinant bilinearity directly.
    Int lhs = abs(a * (e + g) - b * (c + f));
    (void)lhs;
    // |ad-bc| is linear in each argument up to sign; check the stated forms:
    CHECK(abs(a * (e + g) - b * (c + f)) == abs((a * e - b * c) + (a * g - b * f)));
    CHECK(abs(a * (m * e) - b * (m * c)) == m * abs(a * e - b * c));
  }
}

TEST_CASE("complementary slopes") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {7, 5}, {2, -1}, {3, 2}}) {
    Slope g = make_slope(0, p, q);
    Slope c = complementary_slope(g);
    // arc-level: the two representatives sum to a constant triple
    Int k0 = g.arcs[0] + c.arcs[0];
    CHECK(g.arcs[1] + c.arcs[1] == k0);
    CHECK(g.arcs[2] + c.arcs[2] == k0);
    Slope cc = complementary_slope(c);
    CHECK(cc.p == g.p);
    CHECK(cc.q == g.q);
  }
  // the complement of an edge slope makes the sum vertex-linking
  Slope e1 = edge_slope(0, 0);
  Slope c1 = complementary_slope(e1);
  CHECK(e1.arcs[0] + c1.arcs[0] == 1);
  CHECK(e1.arcs[1] + c1.arcs[1] == 1);
  CHECK(e1.arcs[2] + c1.arcs[2] == 1);
}

TEST_CASE("slope lengths") {
  CHECK(slope_length(make_slope(0, 7, 5)) == 14);  // arcs (2,0,5)
  for (int k = 0; k < 3; ++k) CHECK(slope_length(edge_slope(0, k)) == 2);
  // length grows without bound along a Dehn twist family
  Int prev = 0;
  for (int k = 1; k <= 12; ++k) {
    Int len = slope_length(make_slope(0, 1, k));
    CHECK(len > prev);
    prev = len;
  }
}

TEST_CASE("short slope enumeration is complete") {
  CHECK(enumerate_short_slopes(0, Rat(0)).empty());
  auto three = enumerate_short_slopes(0, Rat(2));
  CHECK(three.size() == 3);  // exactly the edge slopes
  for (const auto& s : three) CHECK(slope_length(s) == 2);

  for (int bound : {2, 4, 6, 10, 14}) {
    auto fast = enumerate_short_slopes(0, Rat(bound));
    // oracle: scan primitive pairs within a generous box
    std::set<std::pair<Int, Int>> expect;
    for (int p = 0; p <= 20; ++p)
      for (int q = -20; q <= 20; ++q) {
        if (p == 0 && q != 1) continue;
        if (p == 0 && q == 0) continue;
        Int g = boost::multiprecision::gcd(Int(p), Int(std::abs(q)));
        if (g != 1) continue;
        Slope s = make_slope(0, p, q);
        if (slope_length(s) <= bound) expect.insert({s.p, s.q});
      }
    std::set<std::pair<Int, Int>> got;
    for (const auto& s : fast) got.insert({s.p, s.q});
    CHECK(got == expect);
  }
}
