#include <catch2/catch_amalgamated.hpp>

#include "nsurf/filling.hpp"
#include "nsurf/fixtures.hpp"
#include "nsurf/surface.hpp"

using namespace nsurf;

TEST_CASE("zero vector reconstructs to the empty surface") {
  Triangulation t = fixtures::solid_torus();
  SurfaceGeometry sg = reconstruct(zero_vector(t), t);
  CHECK(sg.components.empty());
  CHECK(sg.chi == 0);
  CHECK(sg.weight == 0);
}

TEST_CASE("vertex link of the solid torus is a trivial-boundary disk") {
  Triangulation t = fixtures::solid_torus();
  SurfaceGeometry sg = reconstruct(vertex_link(t, 0), t);
  REQUIRE(sg.connected());
  const auto& c = sg.components[0];
  CHECK(c.chi == 1);
  CHECK(c.orientable);
  CHECK(c.boundary_curves == 1);
  CHECK(c.vertex_linking);
  Classification cl = classify(sg);
  CHECK(cl.is_disk);
  REQUIRE(sg.curves.size() == 1);
  CHECK(sg.curves[0].trivial);
  CHECK(sg.curves[0].arcs == ArcTriple{1, 1, 1});
}

TEST_CASE("meridian disk of the one-tet solid torus") {
  Triangulation t = fixtures::solid_torus();
  SurfaceGeometry sg = reconstruct(one_tet_meridian_vector(), t);
  REQUIRE(sg.connected());
  Classification cl = classify(sg);
  CHECK(cl.is_disk);
  CHECK_FALSE(sg.components[0].vertex_linking);
  REQUIRE(sg.curves.size() == 1);
  CHECK_FALSE(sg.curves[0].trivial);
  REQUIRE(sg.curves[0].slope.has_value());
  CHECK(sg.curves[0].slope->p == 2);
  CHECK(sg.curves[0].slope->q == -1);
  CHECK(sg.curves[0].arcs == ArcTriple{2, 1, 0});
  CHECK(sg.weight == 6);
  CHECK(sg.boundary_length == 6);
  CHECK(sg.curves[0].length == 6);
}

TEST_CASE("the quad Mobius band at the core") {
  Triangulation t = fixtures::solid_torus();
  NormalVector q = zero_vector(t);
  q[quad_coord(0, 1)] = 1;  // quad {02|13}
  REQUIRE(is_admissible(q, t));
  SurfaceGeometry sg = reconstruct(q, t);
  REQUIRE(sg.connected());
  Classification cl = classify(sg);
  CHECK(cl.is_mobius);
  CHECK_FALSE(sg.components[0].orientable);
  CHECK(sg.components[0].crosscaps == 1);
  REQUIRE(sg.curves.size() == 1);
  REQUIRE(sg.curves[0].slope.has_value());
  CHECK(sg.curves[0].arcs == ArcTriple{0, 1, 0});
}

TEST_CASE("boundary-parallel annulus around an edge") {
  Triangulation t = fixtures::solid_torus();
  NormalVector a = zero_vector(t);
  a[tri_coord(0, 1)] = 1;
  a[tri_coord(0, 2)] = 1;
  a[quad_coord(0, 2)] = 1;  // quad {03|12}
  REQUIRE(is_admissible(a, t));
  SurfaceGeometry sg = reconstruct(a, t);
  REQUIRE(sg.connected());
  Classification cl = classify(sg);
  CHECK(cl.is_annulus);
  CHECK(sg.curves.size() == 2);
  for (const auto& cv : sg.curves) {
    REQUIRE(cv.slope.has_value());
    CHECK(cv.arcs == ArcTriple{0, 0, 1});
  }
}

TEST_CASE("additivity of chi, weight and boundary length under haken sum") {
  Triangulation t = fixtures::solid_torus();
  NormalVector link = vertex_link(t, 0);
  NormalVector mer = one_tet_meridian_vector();
  NormalVector sum = haken_sum(link, mer, t);
  SurfaceGeometry s1 = reconstruct(link, t), s2 = reconstruct(mer, t), s12 = reconstruct(sum, t);
  CHECK(s12.chi == s1.chi + s2.chi);
  CHECK(s12.weight == s1.weight + s2.weight);
  CHECK(s12.boundary_length == s1.boundary_length + s2.boundary_length);

  NormalVector dbl = haken_sum(mer, mer, t);
  SurfaceGeometry sd = reconstruct(dbl, t);
  CHECK(sd.chi == 2 * s2.chi);
  CHECK(sd.components.size() == 2);
}

TEST_CASE("components are admissible and sum to the vector") {
  Triangulation t = fixtures::solid_torus();
  NormalVector v = haken_sum(vertex_link(t, 0), one_tet_meridian_vector(), t);
  SurfaceGeometry sg = reconstruct(v, t);
  NormalVector total = zero_vector(t);
  for (const auto& c : sg.components) {
    CHECK(is_admissible(c.vector, t));
    for (size_t i = 0; i < total.size(); ++i) total[i] += c.vector[i];
  }
  CHECK(total == v);
}

TEST_CASE("unglued tetrahedron pieces are disks") {
  Triangulation t = fixtures::unglued_tetrahedron();
  for (int i = 0; i < 7; ++i) {
    NormalVector v = zero_vector(t);
    v[i] = 1;
    SurfaceGeometry sg = reconstruct(v, t);
    REQUIRE(sg.connected());
    CHECK(sg.components[0].chi == 1);
    CHECK(sg.components[0].boundary_curves == 1);
  }
}

TEST_CASE("connected sums split with a connected part (reduced-form lemma consequence)") {
  // For a connected admissible v admitting any splitting v = F + G, the
  // reduced-form lemma forces some splitting with both parts connected.
  Triangulation t = fixtures::solid_torus();
  MatchingSystem ms = matching_system(t);
  NormalVector v = haken_sum(one_tet_meridian_vector(), one_tet_meridian_vector(), t);
  // 2 x meridian is disconnected, use a connected multiple instead: the
  // Mobius core doubled is the torus-boundary-parallel annulus... verify on a
  // connected example: quad 1 doubled.
  NormalVector q2 = zero_vector(t);
  q2[quad_coord(0, 1)] = 2;
  REQUIRE(is_admissible(q2, t, ms));
  SurfaceGeometry sg = reconstruct(q2, t);
  if (sg.connected()) {
    bool found_connected_split = false;
    NormalVector half = zero_vector(t);
    half[quad_coord(0, 1)] = 1;
    auto s1 = reconstruct(half, t);
    if (s1.connected()) found_connected_split = true;
    CHECK(found_connected_split);
  }
  (void)v;
}
