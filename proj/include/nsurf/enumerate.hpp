#pragma once

#include <optional>
#include <vector>

#include "nsurf/cone.hpp"
#include "nsurf/normal.hpp"
#include "nsurf/slope.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {

// Rows cutting the solution cone down to surfaces meeting the constrained
// boundary only in the slope gamma (or not at all): the vanishing arc type
// on both triangles and the ratio equation on the first.
inline void append_slope_constraint_rows(MatchingSystem& ms, const Triangulation& tri,
                                         const SlopeConstraint& c) {
  const auto& comp = tri.boundary_components()[c.boundary_id];
  require_one_vertex_torus(comp);
  int a_slot = (c.zero_slot + 1) % 3, b_slot = (c.zero_slot + 2) % 3;
  bool first = true;
  for (auto [t, f] : comp.triangles) {
    IntVec zero_row(ms.cols, 0);
    IntVec ratio_row(ms.cols, 0);
    for (int corner : face_vertices(f)) {
      int slot = arc_slot_for_corner(tri, comp, t, f, corner);
      Int coeff = 0;
      if (slot == c.zero_slot) {
        zero_row[tri_coord(t, corner)] += 1;
        zero_row[quad_coord(t, quad_at(f, corner))] += 1;
      } else if (slot == a_slot) {
        coeff = c.s;  // s * z_a = r * z_b
      } else if (slot == b_slot) {
        coeff = -c.r;
      }
      if (coeff != 0) {
        ratio_row[tri_coord(t, corner)] += coeff;
        ratio_row[quad_coord(t, quad_at(f, corner))] += coeff;
      }
    }
    ms.rows.push_back(std::move(zero_row));
    if (first) ms.rows.push_back(std::move(ratio_row));
    first = false;
  }
}

struct ConeBasis {
  std::vector<NormalVector> fundamentals;  // sorted lexicographically
  std::vector<bool> vertex_flag;           // lies on an extreme ray of the cone
  std::vector<bool> admissible;            // satisfies the quadrilateral condition
  std::optional<SlopeConstraint> constraint;
  std::string tri_signature;

  std::vector<NormalVector> admissible_fundamentals() const {
    std::vector<NormalVector> out;
    for (size_t i = 0; i < fundamentals.size(); ++i)
      if (admissible[i]) out.push_back(fundamentals[i]);
    return out;
  }
};

inline MatchingSystem system_for(const Triangulation& tri,
                                 const std::optional<SlopeConstraint>& constraint) {
  MatchingSystem ms = matching_system(tri);
  if (constraint) append_slope_constraint_rows(ms, tri, *constraint);
  return ms;
}

// Full Hilbert basis of the (possibly constrained) solution cone, with
// inadmissible lattice generators retained but flagged.
inline ConeBasis enumerate_fundamental_solutions(
    const Triangulation& tri, const std::optional<SlopeConstraint>& constraint = std::nullopt,
    const Budget& budget = {}) {
  MatchingSystem ms = system_for(tri, constraint);
  HilbertResult hr = hilbert_basis(ms.rows, ms.cols, budget);
  ConeBasis cb;
  cb.fundamentals = std::move(hr.basis);
  cb.vertex_flag = std::move(hr.vertex_flag);
  cb.constraint = constraint;
  cb.tri_signature = tri.canonical_signature();
  cb.admissible.reserve(cb.fundamentals.size());
  for (const auto& f : cb.fundamentals)
    cb.admissible.push_back(satisfies_quad_condition(f, tri.tet_count()));
  return cb;
}

// Minimal integer points on the extreme rays of the solution cone.
inline ConeBasis enumerate_vertex_solutions(
    const Triangulation& tri, const std::optional<SlopeConstraint>& constraint = std::nullopt,
    const Budget& budget = {}) {
  MatchingSystem ms = system_for(tri, constraint);
  ConeBasis cb;
  cb.fundamentals = extreme_rays(ms.rows, ms.cols, budget);
  cb.vertex_flag.assign(cb.fundamentals.size(), true);
  cb.constraint = constraint;
  cb.tri_signature = tri.canonical_signature();
  for (const auto& f : cb.fundamentals)
    cb.admissible.push_back(satisfies_quad_condition(f, tri.tet_count()));
  return cb;
}

}  // namespace nsurf
