#pragma once

#include <string>

#include "nsurf/filling.hpp"
#include "nsurf/prism.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {
namespace fixtures {

inline Triangulation unglued_tetrahedron() {
  return Triangulation(1, std::vector<std::array<GluingSlot, 4>>(1));
}

inline Triangulation solid_torus() { return one_tet_solid_torus(); }

// One-vertex torus as a 2-complex: square with identified sides, cut along a
// diagonal.
inline Complex2 torus_complex() {
  Complex2 c2;
  c2.triangles = 2;
  auto link = [&](int t0, int s0, int t1, int s1, bool swap) {
    c2.glue[{t0, s0}] = Complex2::Glue2{t1, s1, swap};
    c2.glue[{t1, s1}] = Complex2::Glue2{t0, s0, swap};
  };
  link(0, Complex2::slot_of(0, 1), 1, Complex2::slot_of(1, 2), true);
  link(0, Complex2::slot_of(1, 2), 1, Complex2::slot_of(0, 2), false);
  link(0, Complex2::slot_of(0, 2), 1, Complex2::slot_of(0, 1), false);
  return c2;
}

// T^2 x I with one vertex in each boundary component; six tetrahedra.
inline Triangulation torus_times_interval() {
  PrismBlock pb = build_prism_block(torus_complex(), /*wrap=*/false);
  return Triangulation(static_cast<int>(pb.table.size()), pb.table);
}

// A two-tetrahedron one-vertex knot-manifold with an empty zero-efficiency
// audit and fundamental surfaces of negative Euler characteristic (found by
// exhaustive search over two-tetrahedron gluing tables; see tools/fixturegen).
inline const char* knot_manifold_json() {
  return R"({"tets":2,"gluings":[[[1,0,[1,2,3,0]],[1,1,[0,3,1,2]],[1,2,[0,3,1,2]],[1,0,[1,2,3,0]]],[[0,3,[3,0,1,2]],[0,1,[0,2,3,1]],[0,2,[0,2,3,1]],[0,0,[3,0,1,2]]]]})";
}

inline Triangulation knot_manifold() {
  return Triangulation::from_json(nlohmann::json::parse(knot_manifold_json()));
}

}  // namespace fixtures
}  // namespace nsurf
