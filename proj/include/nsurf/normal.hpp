#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "nsurf/slope.hpp"
#include "nsurf/triangulation.hpp"
#include "nsurf/types.hpp"

namespace nsurf {

// Standard coordinates: 7 per tetrahedron, [tri0,tri1,tri2,tri3,q01,q02,q03]
// where quad j separates {0,j+1} from the other two vertices.
using NormalVector = IntVec;

inline int tri_coord(int tet, int vertex) { return 7 * tet + vertex; }
inline int quad_coord(int tet, int quad) { return 7 * tet + 4 + quad; }

// Quad type whose partition contains the pair {a,b}.
inline int quad_with_pair(int a, int b) {
  if (a == 0 || b == 0) return (a == 0 ? b : a) - 1;
  return 5 - a - b;  // partner pair is {0, 6-a-b}
}

// The quad inducing an arc at `corner` of `face` pairs the corner with the
// vertex opposite the face.
inline int quad_at(int face, int corner) { return quad_with_pair(corner, face); }

struct MatchingSystem {
  int cols = 0;
  std::vector<IntVec> rows;

  bool in_kernel(const IntVec& v) const {
    for (const auto& r : rows) {
      Int s = 0;
      for (int i = 0; i < cols; ++i)
        if (r[i] != 0) s += r[i] * v[i];
      if (s != 0) return false;
    }
    return true;
  }
};

// One equation per (interior face class, arc type): pieces inducing the arc
// from the two sides agree.
inline MatchingSystem matching_system(const Triangulation& tri) {
  MatchingSystem ms;
  ms.cols = 7 * tri.tet_count();
  for (const auto& fc : tri.interior_faces()) {
    for (int corner : face_vertices(fc.face0)) {
      IntVec row(ms.cols, 0);
      row[tri_coord(fc.tet0, corner)] += 1;
      row[quad_coord(fc.tet0, quad_at(fc.face0, corner))] += 1;
      int c1 = fc.perm[corner];
      row[tri_coord(fc.tet1, c1)] -= 1;
      row[quad_coord(fc.tet1, quad_at(fc.face1, c1))] -= 1;
      ms.rows.push_back(std::move(row));
    }
  }
  return ms;
}

inline void require_length(const NormalVector& v, const Triangulation& tri) {
  require(static_cast<int>(v.size()) == 7 * tri.tet_count(), ErrorCode::LengthMismatch,
          "vector length does not match 7t");
}

inline bool satisfies_quad_condition(const NormalVector& v, int tet_count) {
  for (int t = 0; t < tet_count; ++t) {
    int nz = 0;
    for (int q = 0; q < 3; ++q)
      if (v[quad_coord(t, q)] != 0) ++nz;
    if (nz > 1) return false;
  }
  return true;
}

inline bool is_admissible(const NormalVector& v, const Triangulation& tri,
                          const MatchingSystem& ms) {
  require_length(v, tri);
  for (const auto& x : v)
    if (x < 0) return false;
  if (!satisfies_quad_condition(v, tri.tet_count())) return false;
  return ms.in_kernel(v);
}

inline bool is_admissible(const NormalVector& v, const Triangulation& tri) {
  return is_admissible(v, tri, matching_system(tri));
}

inline bool quad_compatible(const NormalVector& u, const NormalVector& v, int tet_count) {
  for (int t = 0; t < tet_count; ++t) {
    int nz = 0;
    for (int q = 0; q < 3; ++q)
      if (u[quad_coord(t, q)] != 0 || v[quad_coord(t, q)] != 0) ++nz;
    if (nz > 1) return false;
  }
  return true;
}

// Geometric sum of compatible normal surfaces is coordinatewise addition.
inline NormalVector haken_sum(const NormalVector& u, const NormalVector& v,
                              const Triangulation& tri) {
  require_length(u, tri);
  require_length(v, tri);
  require(quad_compatible(u, v, tri.tet_count()), ErrorCode::QuadIncompatible,
          "summands meet a tetrahedron in distinct quad types");
  return vec_add(u, v);
}

inline NormalVector zero_vector(const Triangulation& tri) {
  return NormalVector(7 * tri.tet_count(), 0);
}

// Link of a vertex class: one triangle per (tet, corner) instance.
inline NormalVector vertex_link(const Triangulation& tri, int vertex_class) {
  NormalVector v = zero_vector(tri);
  for (int t = 0; t < tri.tet_count(); ++t)
    for (int c = 0; c < 4; ++c)
      if (tri.vertex_class_of(t, c) == vertex_class) v[tri_coord(t, c)] += 1;
  return v;
}

inline std::vector<int> support(const NormalVector& v) {
  std::vector<int> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

// Carrier membership at the support level: the minimal face of the projective
// solution space containing f consists of the solutions supported inside
// support(f).
inline bool in_carrier(const NormalVector& g, const NormalVector& f) {
  require(g.size() == f.size(), ErrorCode::LengthMismatch, "vector lengths differ");
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0 && f[i] == 0) return false;
  return true;
}

// ---- slope constraints (module bounds uses these to cut the cone) ---------

struct SlopeConstraint {
  int boundary_id = 0;
  Slope gamma;
  int zero_slot = -1;  // arc slot forced to vanish
  Int r = 0, s = 0;    // remaining arc slots in ratio r/s

  std::string str() const { return gamma.str(); }
};

inline SlopeConstraint make_slope_constraint(const Triangulation& tri, const Slope& gamma) {
  const auto& comps = tri.boundary_components();
  require(gamma.boundary_id >= 0 && gamma.boundary_id < static_cast<int>(comps.size()),
          ErrorCode::BoundaryMismatch, "no such boundary component");
  require_one_vertex_torus(comps[gamma.boundary_id]);
  SlopeConstraint c;
  c.boundary_id = gamma.boundary_id;
  c.gamma = gamma;
  int zero_slot = -1;
  for (int k = 0; k < 3; ++k)
    if (gamma.arcs[k] == 0) zero_slot = k;
  require(zero_slot >= 0, ErrorCode::InternalError, "slope has no vanishing arc type");
  c.zero_slot = zero_slot;
  int a = (zero_slot + 1) % 3, b = (zero_slot + 2) % 3;
  // z_a / z_b = r / s with r,s coprime.
  c.r = gamma.arcs[a];
  c.s = gamma.arcs[b];
  Int g = boost::multiprecision::gcd(c.r, c.s);
  if (g > 1) {
    c.r /= g;
    c.s /= g;
  }
  return c;
}

// ---- integer decompositions ------------------------------------------------

struct DecompositionTerm {
  int basis_index;
  Int multiplicity;
};

// Bounded depth-first search for v = sum n_i * basis_i with nonnegative
// integer multiplicities.  Summands are automatically quad-compatible with v
// because their supports sit inside support(v).
inline std::optional<std::vector<DecompositionTerm>> decompose_over(
    const NormalVector& v, const std::vector<NormalVector>& basis, const Budget& budget = {}) {
  // Candidates ordered by descending coordinate sum for fast descent.
  std::vector<int> cand;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!vec_is_zero(basis[i]) && vec_le(basis[i], v)) cand.push_back(static_cast<int>(i));
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    Int la = vec_l1(basis[a]), lb = vec_l1(basis[b]);
    if (la != lb) return la > lb;
    return basis[a] > basis[b];
  });

  // For each failed residual, the least candidate position it failed from;
  // failure from position k implies failure from any later position.
  std::map<IntVec, size_t> dead;
  std::vector<DecompositionTerm> acc;
  std::function<bool(const IntVec&, size_t)> go = [&](const IntVec& rest, size_t k) -> bool {
    if (vec_is_zero(rest)) return true;
    if (k == cand.size()) return false;
    budget.charge();
    auto it = dead.find(rest);
    if (it != dead.end() && it->second <= k) return false;
    const auto& b = basis[cand[k]];
    // Max multiplicity by coordinatewise division.
    Int mmax = -1;
    for (size_t i = 0; i < rest.size(); ++i)
      if (b[i] != 0) {
        Int m = rest[i] / b[i];
        if (mmax < 0 || m < mmax) mmax = m;
      }
    if (mmax < 0) mmax = 0;
    for (Int m = mmax; m >= 0; --m) {
      IntVec r2(rest.size());
      bool ok = true;
      for (size_t i = 0; i < rest.size(); ++i) {
        r2[i] = rest[i] - m * b[i];
        if (r2[i] < 0) ok = false;
      }
      if (!ok) continue;
      if (m > 0) acc.push_back({cand[k], m});
      if (go(r2, k + 1)) return true;
      if (m > 0) acc.pop_back();
    }
    auto [pos, inserted] = dead.try_emplace(rest, k);
    if (!inserted && k < pos->second) pos->second = k;
    return false;
  };
  try {
    if (!go(v, 0)) return std::nullopt;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ResourceBudgetExceeded)
      fail(ErrorCode::DecompositionBudgetExceeded, "decomposition search budget exhausted");
    throw;
  }
  return acc;
}

}  // namespace nsurf
