#include <catch2/catch_amalgamated.hpp>

#include "nsurf/fixtures.hpp"
#include "nsurf/normal.hpp"
#include "oracles.hpp"

using namespace nsurf;

TEST_CASE("matching equation counts") {
  CHECK(matching_system(fixtures::solid_torus()).rows.size() == 3);
  CHECK(matching_system(fixtures::unglued_tetrahedron()).rows.empty());
  // torus x interval: 6 tets, 4 boundary faces, 10 interior face classes
  CHECK(matching_system(fixtures::torus_times_interval()).rows.size() == 30);
}

TEST_CASE("vertex links lie in the kernel") {
  for (const Triangulation& t :
       {fixtures::solid_torus(), fixtures::torus_times_interval(), creased_cell()}) {
    MatchingSystem ms = matching_system(t);
    for (int c = 0; c < t.vertex_class_count(); ++c) {
      NormalVector link = vertex_link(t, c);
      CHECK(ms.in_kernel(link));
      CHECK(is_admissible(link, t, ms));
    }
  }
}

TEST_CASE("admissibility") {
  Triangulation t = fixtures::solid_torus();
  MatchingSystem ms = matching_system(t);
  CHECK(is_admissible(zero_vector(t), t, ms));

  NormalVector two_quads = zero_vector(t);
  two_quads[quad_coord(0, 0)] = 1;
  two_quads[quad_coord(0, 1)] = 1;
  CHECK_FALSE(is_admissible(two_quads, t, ms));

  NormalVector wrong_len(3, 0);
  CHECK_THROWS_AS(is_admissible(wrong_len, t, ms), Error);
}

TEST_CASE("haken sum") {
  Triangulation t = fixtures::solid_torus();
  NormalVector link = vertex_link(t, 0);
  CHECK(haken_sum(link, zero_vector(t), t) == link);

  NormalVector a = zero_vector(t), b = zero_vector(t);
  a[quad_coord(0, 0)] = 1;
  b[quad_coord(0, 2)] = 1;
  CHECK_THROWS_AS(haken_sum(a, b, t), Error);
}

TEST_CASE("carrier membership is support containment") {
  Triangulation t = fixtures::solid_torus();
  NormalVector link = vertex_link(t, 0);
  CHECK(in_carrier(link, link));
  CHECK(in_carrier(zero_vector(t), link));
  NormalVector big = link;
  big[quad_coord(0, 1)] = 2;
  CHECK(in_carrier(link, big));
  CHECK_FALSE(in_carrier(big, link));
}

TEST_CASE("decompose_over finds integer decompositions") {
  Triangulation t = fixtures::unglued_tetrahedron();
  std::vector<NormalVector> basis;
  for (int i = 0; i < 7; ++i) {
    NormalVector e = zero_vector(t);
    e[i] = 1;
    basis.push_back(e);
  }
  NormalVector v = zero_vector(t);
  v[0] = 2;
  v[5] = 3;
  auto dec = decompose_over(v, basis);
  REQUIRE(dec.has_value());
  NormalVector sum = zero_vector(t);
  for (const auto& term : *dec)
    for (size_t i = 0; i < sum.size(); ++i)
      sum[i] += term.multiplicity * basis[term.basis_index][i];
  CHECK(sum == v);

  // a basis element decomposes as itself
  auto dec1 = decompose_over(basis[3], basis);
  REQUIRE(dec1.has_value());
  CHECK(dec1->size() == 1);
  CHECK(dec1->at(0).multiplicity == 1);
}

TEST_CASE("slope constraint normalisation") {
  Triangulation t = fixtures::solid_torus();
  Slope g = make_slope(0, 2, -1);  // arcs with one zero slot
  SlopeConstraint c = make_slope_constraint(t, g);
  CHECK(boost::multiprecision::gcd(c.r, c.s) == 1);
  CHECK(g.arcs[c.zero_slot] == 0);
}
