#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nsurf/cone.hpp"
#include "nsurf/normal.hpp"
#include "nsurf/prism.hpp"
#include "nsurf/slope.hpp"
#include "nsurf/surface.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {

// The one-tetrahedron solid torus: faces <a,b,c> and <b,c,d> identified.
inline Triangulation one_tet_solid_torus() {
  std::vector<std::array<GluingSlot, 4>> table(1);
  Perm4 p(1, 2, 3, 0);
  table[0][3] = Gluing{0, 0, p};
  table[0][0] = Gluing{0, 3, p.inverse()};
  return Triangulation(1, std::move(table));
}

// Creased 3-cell: the degenerate layering along the Mobius band's boundary
// edge.  Constructible for completeness; the filling machinery never uses it.
inline Triangulation creased_cell() {
  std::vector<std::array<GluingSlot, 4>> table(1);
  Perm4 p(3, 1, 2, 0);
  table[0][3] = Gluing{0, 0, p};
  table[0][0] = Gluing{0, 3, p.inverse()};
  return Triangulation(1, std::move(table));
}

// Meridian data of the one-tetrahedron solid torus, in terms of its own
// boundary edge classes in canonical order: the disk crosses them (1, 2, 3)
// times and its vector is tri0 + tri3 + quad{01|23}.
inline NormalVector one_tet_meridian_vector() {
  NormalVector v(7, 0);
  v[tri_coord(0, 0)] = 1;
  v[tri_coord(0, 3)] = 1;
  v[quad_coord(0, 0)] = 1;
  return v;
}

enum class LstBaseCase { Generic, DiagonalAdjacent, EdgeSlope };

struct LayeringPlan {
  std::vector<int> flip_slots;          // descent order (filling order)
  std::array<Int, 3> base_triple;       // meridian crossings when the base attaches
  LstBaseCase base_case = LstBaseCase::Generic;
};

// Farey descent of a meridian crossing triple down to the one-tetrahedron
// pattern {1,2,3}.  The degenerate classes {1,1,2} and {0,1,1} take one and
// two extra layers; the paper's creased-cell and Mobius-band alternatives are
// not used.
inline LayeringPlan lst_layering_plan(std::array<Int, 3> n) {
  LayeringPlan plan;
  auto multiset_is = [&](Int a, Int b, Int c) {
    std::array<Int, 3> s = n;
    std::sort(s.begin(), s.end());
    return s[0] == a && s[1] == b && s[2] == c;
  };
  if (multiset_is(1, 1, 2)) plan.base_case = LstBaseCase::DiagonalAdjacent;
  if (multiset_is(0, 1, 1)) plan.base_case = LstBaseCase::EdgeSlope;
  auto flip = [&](int i) {
    Int mx = std::max(n[(i + 1) % 3], n[(i + 2) % 3]);
    n[i] = 2 * mx - n[i];
    plan.flip_slots.push_back(i);
  };
  for (;;) {
    if (multiset_is(1, 2, 3)) break;
    if (multiset_is(1, 1, 2)) {
      int s = n[0] == 1 ? 0 : 1;
      flip(s);
      continue;
    }
    if (multiset_is(0, 1, 1)) {
      int s = n[0] == 0 ? 0 : (n[1] == 0 ? 1 : 2);
      flip(s);
      continue;
    }
    // generic: flip the slot carrying the sum of the other two
    int s = -1;
    for (int i = 0; i < 3; ++i)
      if (n[i] == n[(i + 1) % 3] + n[(i + 2) % 3]) s = i;
    require(s >= 0, ErrorCode::InternalError, "triple is not a slope crossing triple");
    flip(s);
  }
  plan.base_triple = n;
  return plan;
}

// Arcs induced by a tetrahedron's coordinates at a corner of one of its faces.
inline Int arcs_at(const IntVec& tet7, int face, int corner) {
  return tet7[corner] + tet7[4 + quad_at(face, corner)];
}

// Extend a normal surface across a layered tetrahedron glued along faces
// `p` and `q`; A and B give the surface's arc counts at the corners of p and
// q as seen from the glued partners.
inline IntVec layered_extension(int p, int q, const std::array<Int, 4>& A,
                                const std::array<Int, 4>& B) {
  int u = -1, v = -1;
  for (int x = 0; x < 4; ++x)
    if (x != p && x != q) (u == -1 ? u : v) = x;
  require(A[u] + A[v] == B[u] + B[v], ErrorCode::InternalError,
          "arc counts disagree across the layered edge");
  IntVec out(7, 0);
  out[u] = std::min(A[u], B[u]);
  out[v] = std::min(A[v], B[v]);
  out[q] = A[q];
  out[p] = B[p];
  Int du = A[u] - B[u];
  if (du > 0) out[4 + quad_with_pair(u, p)] = du;
  Int dv = A[v] - B[v];
  if (dv > 0) out[4 + quad_with_pair(v, p)] = dv;
  return out;
}

struct LayeredSolidTorus {
  Triangulation tri;
  std::vector<int> layer_slots;     // slots flipped, in build order from the base
  std::array<Int, 3> boundary_triple;  // meridian crossings of the boundary edges, slot order
  LstBaseCase base_case = LstBaseCase::Generic;
  NormalVector meridian;            // meridian disk vector
  // boundary edge classes in slot order
  std::array<int, 3> slot_edge_class{-1, -1, -1};

  int layers() const { return tri.tet_count() - 1; }
};

namespace detail_fill {

// Current boundary-edge handle during layering: a (tet, edge) instance per slot.
struct SlotState {
  std::array<std::pair<int, int>, 3> instance;  // (tet, edge index)
  std::array<Int, 3> value;
};

inline int class_of(const Triangulation& t, std::pair<int, int> inst) {
  return t.edge_class_of(inst.first, inst.second);
}

// Arc counts of a partially-built surface at the corners of the face glued to
// (tet, face): evaluated on the partner tetrahedron's coordinates.
inline std::array<Int, 4> partner_arcs(const Triangulation& tri,
                                       const std::vector<IntVec>& tet_coords, int tet, int face) {
  const auto& slot = tri.gluing(tet, face);
  require(slot.has_value(), ErrorCode::InternalError, "expected a glued face");
  std::array<Int, 4> arcs{0, 0, 0, 0};
  for (int c : face_vertices(face)) {
    int pc = slot->perm[c];
    arcs[c] = arcs_at(tet_coords[slot->tet], slot->face, pc);
  }
  return arcs;
}

}  // namespace detail_fill

struct FillRecord {
  int original_boundary_id;
  Slope slope;
  int tet_begin, tet_end;         // LST range [begin, end)
  std::vector<int> layer_slots;
  LstBaseCase base_case;
  std::vector<IntVec> lst_coords;  // meridian disk coordinates per LST tet
};

struct FilledManifold {
  Triangulation tri;
  Triangulation base;             // the unfilled manifold
  std::vector<FillRecord> fillings;

  NormalVector meridian_vector(size_t i) const {
    NormalVector v = NormalVector(7 * tri.tet_count(), 0);
    const auto& f = fillings[i];
    for (int t = f.tet_begin; t < f.tet_end; ++t)
      for (int k = 0; k < 7; ++k) v[7 * t + k] = f.lst_coords[t - f.tet_begin][k];
    return v;
  }

  // Boundary component of the filled triangulation corresponding to an
  // unfilled component of the base, or -1 if that component was filled.
  int boundary_id_of_original(int original_id) const {
    for (const auto& f : fillings)
      if (f.original_boundary_id == original_id) return -1;
    const auto& comp = base.boundary_components()[original_id];
    auto [t, fc] = comp.triangles[0];
    return tri.boundary_component_of_face(t, fc);
  }
};

namespace detail_fill {

// Attach the base one-tet solid torus onto the two boundary triangles of a
// one-vertex torus whose edges carry meridian values {1,2,3} (slot order per
// `state`).  Returns the candidate tables (usually both mirror choices work).
inline std::vector<std::vector<std::array<GluingSlot, 4>>> base_attachments(
    const Triangulation& cur, const SlotState& state) {
  // Base boundary faces are 1 and 2 with side classes: face 1 carries
  // (A,B,C) opposite corners (0? ...) -- sides: {23}=A opp 0, {03}=C opp 2,
  // {02}=B opp 3; face 2: {13}=B opp 0, {03}=C opp 1, {01}=A opp 3.
  // Meridian values: A=1, B=2, C=3.
  struct BaseFace {
    int face;
    // corner -> meridian value of the opposite side
    std::map<int, Int> opp_value;
  };
  std::vector<BaseFace> bf = {
      {1, {{0, Int(1)}, {2, Int(3)}, {3, Int(2)}}},
      {2, {{0, Int(2)}, {1, Int(3)}, {3, Int(1)}}},
  };

  // Locate the current boundary triangles and the value opposite each corner.
  int comp_id = -1;
  const Triangulation& T = cur;
  for (const auto& comp : T.boundary_components()) {
    int slot_cls = class_of(T, state.instance[0]);
    if (comp.edge_slot(slot_cls) >= 0) comp_id = comp.id;
  }
  require(comp_id >= 0, ErrorCode::InternalError, "lost the boundary component while layering");
  const auto& comp = T.boundary_components()[comp_id];
  require(comp.one_vertex_torus, ErrorCode::InternalError, "boundary degenerated while layering");

  auto value_of_class = [&](int cls) -> Int {
    for (int s = 0; s < 3; ++s)
      if (class_of(T, state.instance[s]) == cls) return state.value[s];
    fail(ErrorCode::InternalError, "boundary edge class missing from slot state");
  };

  struct TriInfo {
    int tet, face;
    std::map<int, Int> opp_value;  // corner -> value of opposite side
  };
  std::vector<TriInfo> tris;
  for (auto [t, f] : comp.triangles) {
    TriInfo ti{t, f, {}};
    for (int c : face_vertices(f)) {
      int a = -1, b = -1;
      for (int x : face_vertices(f))
        if (x != c) (a == -1 ? a : b) = x;
      ti.opp_value[c] = value_of_class(T.edge_class_of(t, edge_index(a, b)));
    }
    tris.push_back(ti);
  }

  std::vector<std::vector<std::array<GluingSlot, 4>>> candidates;
  int nb = T.tet_count();
  for (int assign = 0; assign < 2; ++assign) {
    auto table = T.table();
    table.push_back({});
    Perm4 p(1, 2, 3, 0);
    table[nb][3] = Gluing{nb, 0, p};
    table[nb][0] = Gluing{nb, 3, p.inverse()};
    bool ok = true;
    for (int k = 0; k < 2 && ok; ++k) {
      const BaseFace& face = bf[k];
      const TriInfo& target = tris[(k + assign) % 2];
      // corner map by matching opposite-side values
      std::array<int, 4> img{-1, -1, -1, -1};
      for (auto [corner, val] : face.opp_value) {
        int to = -1;
        for (auto [c2, v2] : target.opp_value)
          if (v2 == val) to = c2;
        if (to < 0) {
          ok = false;
          break;
        }
        img[corner] = to;
      }
      if (!ok) break;
      img[face.face] = target.face;
      Perm4 perm(img[0], img[1], img[2], img[3]);
      table[nb][face.face] = Gluing{target.tet, target.face, perm};
      table[target.tet][target.face] = Gluing{nb, face.face, perm.inverse()};
    }
    if (ok) candidates.push_back(std::move(table));
  }
  return candidates;
}

}  // namespace detail_fill

// Meridian-disk coordinates across an LST tet range.  `range` lists the tets
// in attachment order, base last; each non-base tet's faces 0 and 1 are glued
// toward the base side.
inline std::vector<IntVec> transport_meridian(const Triangulation& tri, int begin, int end) {
  int count = end - begin;
  std::vector<IntVec> coords(tri.tet_count(), IntVec(7, 0));
  coords[end - 1] = one_tet_meridian_vector();
  for (int t = end - 2; t >= begin; --t) {
    auto A = detail_fill::partner_arcs(tri, coords, t, 0);
    auto B = detail_fill::partner_arcs(tri, coords, t, 1);
    coords[t] = layered_extension(0, 1, A, B);
  }
  std::vector<IntVec> out;
  for (int t = begin; t < end; ++t) out.push_back(coords[t]);
  (void)count;
  return out;
}

// Triangulated Dehn filling along a nontrivial slope on a one-vertex torus
// boundary: layer per the Farey descent, then close with the one-tet solid
// torus.  The base triangulation's table is untouched on its own range.
inline FilledManifold dehn_fill(const Triangulation& M, int boundary_id, const Slope& alpha) {
  const auto& comps = M.boundary_components();
  require(boundary_id >= 0 && boundary_id < static_cast<int>(comps.size()),
          ErrorCode::BoundaryMismatch, "no such boundary component");
  const auto& comp = comps[boundary_id];
  require_one_vertex_torus(comp);

  detail_fill::SlotState state;
  ArcTriple n = edge_crossings(alpha.arcs);
  for (int s = 0; s < 3; ++s) {
    state.value[s] = n[s];
    state.instance[s] = {comp.edges[s].s0.tet, edge_index(comp.edges[s].s0.u, comp.edges[s].s0.v)};
  }

  LayeringPlan plan = lst_layering_plan({n[0], n[1], n[2]});
  Triangulation cur = M;
  int first_new = M.tet_count();
  for (int s : plan.flip_slots) {
    int cls = detail_fill::class_of(cur, state.instance[s]);
    auto res = cur.layer_on_edge(cls);
    cur = std::move(res.tri);
    state.instance[s] = {res.new_tet, res.new_edge};
    Int mx = std::max(state.value[(s + 1) % 3], state.value[(s + 2) % 3]);
    state.value[s] = 2 * mx - state.value[s];
  }

  auto candidates = detail_fill::base_attachments(cur, state);
  require(!candidates.empty(), ErrorCode::InternalError, "no base attachment matched");
  for (auto& table : candidates) {
    Triangulation filled(static_cast<int>(table.size()), std::move(table));
    if (static_cast<int>(filled.boundary_components().size()) !=
        static_cast<int>(M.boundary_components().size()) - 1)
      continue;
    if (M.orientable() && !filled.orientable()) continue;
    FilledManifold fm{filled, M, {}};
    FillRecord rec;
    rec.original_boundary_id = boundary_id;
    rec.slope = alpha;
    rec.tet_begin = first_new;
    rec.tet_end = filled.tet_count();
    rec.layer_slots = plan.flip_slots;
    rec.base_case = plan.base_case;
    rec.lst_coords = transport_meridian(filled, rec.tet_begin, rec.tet_end);
    fm.fillings.push_back(rec);
    NormalVector mer = fm.meridian_vector(0);
    // The meridian disk must close up against the capped boundary; its own
    // matching holds away from the old boundary faces, which is exactly what
    // cap_off needs.  Validate with the full disk of the standalone torus
    // by checking all equations not involving the old boundary component.
    MatchingSystem ms = matching_system(filled);
    bool good = true;
    for (const auto& fc : filled.interior_faces()) {
      bool touches_m = fc.tet0 < first_new || fc.tet1 < first_new;
      if (touches_m) continue;
      for (int corner : face_vertices(fc.face0)) {
        Int lhs = arcs_at(rec.lst_coords[fc.tet0 - first_new], fc.face0, corner);
        Int rhs = arcs_at(rec.lst_coords[fc.tet1 - first_new], fc.face1, fc.perm[corner]);
        if (lhs != rhs) good = false;
      }
    }
    if (!good) continue;
    return fm;
  }
  fail(ErrorCode::InternalError, "no valid base attachment for the Dehn filling");
}

// Fill a boundary component of an already-filled manifold; records accumulate.
inline FilledManifold dehn_fill(const FilledManifold& fm, int base_boundary_id,
                                const Slope& alpha_on_base) {
  int cur_id = fm.boundary_id_of_original(base_boundary_id);
  require(cur_id >= 0, ErrorCode::BoundaryMismatch, "component already filled");
  Slope a = alpha_on_base;
  a.boundary_id = cur_id;
  FilledManifold next = dehn_fill(fm.tri, cur_id, a);
  FilledManifold out{next.tri, fm.base, fm.fillings};
  FillRecord rec = next.fillings[0];
  rec.original_boundary_id = base_boundary_id;
  rec.slope = alpha_on_base;
  out.fillings.push_back(rec);
  return out;
}

// Standalone minimal layered solid torus realising the given meridian slope
// on its boundary (slot order = canonical boundary edge order).
inline LayeredSolidTorus build_lst(const Slope& meridian) {
  ArcTriple n = edge_crossings(meridian.arcs);
  LayeringPlan plan = lst_layering_plan({n[0], n[1], n[2]});

  Triangulation cur = one_tet_solid_torus();
  // Base boundary edges in canonical order carry meridian values (1,2,3);
  // bind slots so slot s holds the base edge with value base_triple[s].
  detail_fill::SlotState state;
  {
    const auto& comp = cur.boundary_components()[0];
    std::array<Int, 3> canon_value{1, 2, 3};
    for (int s = 0; s < 3; ++s) {
      int which = -1;
      for (int k = 0; k < 3; ++k)
        if (canon_value[k] == plan.base_triple[s]) which = k;
      require(which >= 0, ErrorCode::InternalError, "base triple mismatch");
      state.value[s] = plan.base_triple[s];
      state.instance[s] = {comp.edges[which].s0.tet,
                           edge_index(comp.edges[which].s0.u, comp.edges[which].s0.v)};
    }
  }
  // Undo the descent: apply flips in reverse order.
  for (auto it = plan.flip_slots.rbegin(); it != plan.flip_slots.rend(); ++it) {
    int s = *it;
    int cls = detail_fill::class_of(cur, state.instance[s]);
    auto res = cur.layer_on_edge(cls);
    cur = std::move(res.tri);
    state.instance[s] = {res.new_tet, res.new_edge};
    Int mx = std::max(state.value[(s + 1) % 3], state.value[(s + 2) % 3]);
    state.value[s] = 2 * mx - state.value[s];
  }
  for (int s = 0; s < 3; ++s)
    require(state.value[s] == n[s], ErrorCode::InternalError, "descent did not invert");

  LayeredSolidTorus lst{cur, plan.flip_slots, {n[0], n[1], n[2]}, plan.base_case, {}, {}};
  // Meridian transport from the base (tet 0) outward: tet k is glued toward
  // the base along faces 2 and 3.
  std::vector<IntVec> coords(cur.tet_count(), IntVec(7, 0));
  coords[0] = one_tet_meridian_vector();
  for (int t = 1; t < cur.tet_count(); ++t) {
    auto A = detail_fill::partner_arcs(cur, coords, t, 3);
    auto B = detail_fill::partner_arcs(cur, coords, t, 2);
    coords[t] = layered_extension(3, 2, A, B);
  }
  NormalVector mer(7 * cur.tet_count(), 0);
  for (int t = 0; t < cur.tet_count(); ++t)
    for (int k = 0; k < 7; ++k) mer[7 * t + k] = coords[t][k];
  lst.meridian = mer;
  for (int s = 0; s < 3; ++s)
    lst.slot_edge_class[s] = detail_fill::class_of(cur, state.instance[s]);
  return lst;
}

// ---- capping off and restriction -------------------------------------------

// The vector of v capped off with meridian disks in every filled torus.
// Every boundary curve of v on a filled component must be essential of the
// filling slope.
inline NormalVector cap_off(const NormalVector& v, const FilledManifold& fm) {
  require_length(v, fm.base);
  SurfaceGeometry sg = reconstruct(v, fm.base);
  NormalVector w(7 * fm.tri.tet_count(), 0);
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i];
  for (size_t f = 0; f < fm.fillings.size(); ++f) {
    const auto& rec = fm.fillings[f];
    Int copies = 0;
    for (const auto& cv : sg.curves) {
      if (cv.boundary_component != rec.original_boundary_id) continue;
      require(!cv.trivial, ErrorCode::NotMeridional,
              "surface meets the filled boundary in a trivial curve");
      require(cv.slope.has_value() && cv.slope->p == rec.slope.p && cv.slope->q == rec.slope.q,
              ErrorCode::NotMeridional, "boundary curve slope differs from the filling slope");
      copies += 1;
    }
    for (int t = rec.tet_begin; t < rec.tet_end; ++t)
      for (int k = 0; k < 7; ++k) w[7 * t + k] = copies * rec.lst_coords[t - rec.tet_begin][k];
  }
  require(is_admissible(w, fm.tri), ErrorCode::InternalError, "capped vector is not admissible");
  return w;
}

struct Restriction {
  NormalVector vector;       // in the base manifold
  std::vector<Int> caps;     // meridian disk multiplicities per filling
};

// Restrict a normal vector of the filled manifold to the base, provided it
// meets every layered solid torus in meridian disks only.
inline std::optional<Restriction> restrict_to_base(const NormalVector& w,
                                                   const FilledManifold& fm) {
  require_length(w, fm.tri);
  Restriction out;
  out.vector.assign(7 * fm.base.tet_count(), 0);
  for (int i = 0; i < 7 * fm.base.tet_count(); ++i) out.vector[i] = w[i];
  for (const auto& rec : fm.fillings) {
    Int copies = -1;
    for (int t = rec.tet_begin; t < rec.tet_end; ++t) {
      for (int k = 0; k < 7; ++k) {
        Int have = w[7 * t + k];
        Int unit = rec.lst_coords[t - rec.tet_begin][k];
        if (unit == 0) {
          if (have != 0) return std::nullopt;
          continue;
        }
        if (have % unit != 0) return std::nullopt;
        Int m = have / unit;
        if (copies == -1) copies = m;
        if (copies != m) return std::nullopt;
      }
    }
    if (copies == -1) copies = 0;
    out.caps.push_back(copies);
  }
  if (!is_admissible(out.vector, fm.base)) return std::nullopt;
  return out;
}

struct RewriteTerm {
  NormalVector summand;  // in the base manifold
  Int multiplicity;
  std::vector<Int> caps;
};

// Lemma-style re-writing: decompose the capped surface over the fundamental
// solutions of the filled triangulation and restrict every summand.
inline std::vector<RewriteTerm> rewrite_decomposition(const NormalVector& P,
                                                      const FilledManifold& fm,
                                                      const std::vector<NormalVector>& filled_basis,
                                                      const Budget& budget = {}) {
  NormalVector Ph = cap_off(P, fm);
  auto dec = decompose_over(Ph, filled_basis, budget);
  require(dec.has_value(), ErrorCode::InternalError,
          "capped surface does not decompose over the filled fundamentals");
  std::vector<RewriteTerm> out;
  NormalVector total(P.size(), 0);
  for (const auto& term : *dec) {
    auto r = restrict_to_base(filled_basis[term.basis_index], fm);
    require(r.has_value(), ErrorCode::InternalError,
            "a summand of a capped surface does not cap off");
    for (size_t i = 0; i < total.size(); ++i) total[i] += term.multiplicity * r->vector[i];
    out.push_back(RewriteTerm{r->vector, term.multiplicity, r->caps});
  }
  require(total == P, ErrorCode::InternalError, "re-written summands do not sum to the input");
  return out;
}

// ---- Dehn drilling -----------------------------------------------------------

struct DrillResult {
  Triangulation tri;
  int layers = 0;
  int boundary_b = -1;      // the surviving copy of B
  int boundary_bmu = -1;    // the new component around the drilled curve
  Slope mu_star;            // meridian of the drilled tube, on boundary_bmu
  Slope lambda_star;        // longitude marked by the vertical annulus
  int b_fiber_slot = -1;    // slot of the fiber edge (slope of mu) on boundary_b
};

namespace detail_fill {

// The pinched pair-of-pants: pentagon u,u,v,v,u fanned from the first corner,
// with the two (u,v) sides identified.
inline Complex2 pinched_pants() {
  Complex2 c2;
  c2.triangles = 3;
  auto link = [&](int t0, int s0, int t1, int s1, bool swap) {
    c2.glue[{t0, s0}] = Complex2::Glue2{t1, s1, swap};
    c2.glue[{t1, s1}] = Complex2::Glue2{t0, s0, swap};
  };
  // T1=(P1,P2,P3), T2=(P1,P3,P4), T3=(P1,P4,P5)
  link(0, Complex2::slot_of(1, 2), 2, Complex2::slot_of(1, 2), true);   // x: P2P3 ~ P5P4
  link(0, Complex2::slot_of(0, 2), 1, Complex2::slot_of(0, 1), false);  // d1: P1P3
  link(1, Complex2::slot_of(0, 2), 2, Complex2::slot_of(0, 1), false);  // d2: P1P4
  // free: b' = T1{0,1} (P1P2), c = T2{1,2} (P3P4), b = T3{0,2} (P1P5)
  return c2;
}

}  // namespace detail_fill

// Dehn drilling along a slope mu on a one-vertex torus boundary: layer until
// an edge realises mu, then attach the nine-tetrahedron pinched
// pair-of-pants x S^1 block along that boundary.
inline DrillResult dehn_drill(const Triangulation& M, int boundary_id, const Slope& mu) {
  const auto& comps = M.boundary_components();
  require(boundary_id >= 0 && boundary_id < static_cast<int>(comps.size()),
          ErrorCode::BoundaryMismatch, "no such boundary component");
  require_one_vertex_torus(comps[boundary_id]);

  detail_fill::SlotState state;
  ArcTriple n = edge_crossings(mu.arcs);
  for (int s = 0; s < 3; ++s) {
    state.value[s] = n[s];
    state.instance[s] = {comps[boundary_id].edges[s].s0.tet,
                         edge_index(comps[boundary_id].edges[s].s0.u, comps[boundary_id].edges[s].s0.v)};
  }
  // Layer until mu is an edge slope (one crossing value reaches zero).
  Triangulation cur = M;
  int layers = 0;
  while (state.value[0] != 0 && state.value[1] != 0 && state.value[2] != 0) {
    int s = -1;
    for (int i = 0; i < 3; ++i)
      if (state.value[i] == state.value[(i + 1) % 3] + state.value[(i + 2) % 3]) s = i;
    require(s >= 0, ErrorCode::InternalError, "mu crossing triple is not a slope triple");
    int cls = detail_fill::class_of(cur, state.instance[s]);
    auto res = cur.layer_on_edge(cls);
    cur = std::move(res.tri);
    state.instance[s] = {res.new_tet, res.new_edge};
    Int mx = std::max(state.value[(s + 1) % 3], state.value[(s + 2) % 3]);
    state.value[s] = 2 * mx - state.value[s];
    ++layers;
  }
  int mu_slot = state.value[0] == 0 ? 0 : (state.value[1] == 0 ? 1 : 2);
  int e_mu_class = detail_fill::class_of(cur, state.instance[mu_slot]);

  // Build the block.
  Complex2 r = detail_fill::pinched_pants();
  PrismBlock block = build_prism_block(r, /*wrap=*/true);
  check_prism_winners(r, block);
  int base_tets = cur.tet_count();

  // Identify the boundary component and its triangles after layering.
  int comp_id = -1;
  for (const auto& comp : cur.boundary_components())
    if (comp.edge_slot(e_mu_class) >= 0) comp_id = comp.id;
  require(comp_id >= 0, ErrorCode::InternalError, "lost the drilled boundary while layering");
  const auto& comp = cur.boundary_components()[comp_id];
  require(comp.one_vertex_torus, ErrorCode::InternalError, "drilled boundary degenerated");

  // b' rectangle faces (triangle 0, slot {0,1}) attach onto B's triangles.
  PrismBlock::Rect bp = block.rect(0, Complex2::slot_of(0, 1));

  for (int assign = 0; assign < 2; ++assign) {
    auto table = cur.table();
    for (const auto& row : block.table) {
      std::array<GluingSlot, 4> shifted{};
      for (int f = 0; f < 4; ++f)
        if (row[f]) shifted[f] = Gluing{row[f]->tet + base_tets, row[f]->face, row[f]->perm};
      table.push_back(shifted);
    }

    auto glue_onto = [&](int btet, int bface, std::array<int, 3> labels,
                         std::array<int, 3> to_classes, std::pair<int, int> target) -> bool {
      // labels: block-face vertex labels; to_classes: for each label, the
      // edge class its OPPOSITE side must land on.
      auto [tt, tf] = target;
      std::array<int, 4> img{-1, -1, -1, -1};
      for (int i = 0; i < 3; ++i) {
        int corner = labels[i];
        int want = to_classes[i];
        int to = -1;
        for (int c : face_vertices(tf)) {
          int a = -1, b = -1;
          for (int x : face_vertices(tf))
            if (x != c) (a == -1 ? a : b) = x;
          if (cur.edge_class_of(tt, edge_index(a, b)) == want) to = c;
        }
        if (to < 0) return false;
        if (img[corner] != -1 && img[corner] != to) return false;
        img[corner] = to;
      }
      int bf_global = btet + base_tets;
      img[bface] = tf;
      for (int x = 0; x < 4; ++x)
        if (img[x] == -1) return false;
      Perm4 p(img[0], img[1], img[2], img[3]);
      if (table[bf_global][bface].has_value() || table[tt][tf].has_value()) return false;
      table[bf_global][bface] = Gluing{tt, tf, p};
      table[tt][tf] = Gluing{bf_global, bface, p.inverse()};
      return true;
    };

    // Choose which of B's edges receives b' (deterministic: first non-mu).
    std::array<int, 3> bclasses{};
    for (int s = 0; s < 3; ++s) bclasses[s] = comp.edges[s].edge_class;
    int ea = -1, eb = -1;
    for (int s = 0; s < 3; ++s)
      if (bclasses[s] != e_mu_class) (ea == -1 ? ea : eb) = bclasses[s];

    // lower face (X0,Y0,X1): opposite X0 is the diagonal, opposite Y0 the
    // fiber, opposite X1 the base edge b'.
    bool ok = glue_onto(bp.lower_tet, bp.lower_face, {bp.y0_lower, bp.x1_lower, bp.x0_lower},
                        {e_mu_class, ea, eb},
                        comp.triangles[assign % 2]);
    // upper face (Y0,X1,Y1): opposite X1 is the fiber at Y... sides of the
    // upper triangle: (Y0,X1)=diag, (Y0,Y1)=fiber?  The fiber at Y is
    // (Y0,Y1); opposite X1.  b' top copy is (X1,Y1), opposite Y0.  diag
    // opposite Y1.
    if (ok)
      ok = glue_onto(bp.upper_tet, bp.upper_face, {bp.x1_upper, bp.y0_upper, bp.y1_upper},
                     {e_mu_class, ea, eb},
                     comp.triangles[(assign + 1) % 2]);
    if (!ok) continue;

    Triangulation drilled(static_cast<int>(table.size()), table);
    if (static_cast<int>(drilled.boundary_components().size()) !=
        static_cast<int>(M.boundary_components().size()) + 1)
      continue;
    if (drilled.vertex_class_count() != M.vertex_class_count() + 1) continue;
    if (M.orientable() && !drilled.orientable()) continue;

    DrillResult out{drilled, layers, -1, -1, {}, {}, -1};
    // b torus: rectangle over T3 edge {0,2}; c torus: T2 edge {1,2}.
    PrismBlock::Rect rb = block.rect(2, Complex2::slot_of(0, 2));
    PrismBlock::Rect rc = block.rect(1, Complex2::slot_of(1, 2));
    out.boundary_b = drilled.boundary_component_of_face(rb.lower_tet + base_tets, rb.lower_face);
    out.boundary_bmu = drilled.boundary_component_of_face(rc.lower_tet + base_tets, rc.lower_face);
    require(out.boundary_b >= 0 && out.boundary_bmu >= 0 && out.boundary_b != out.boundary_bmu,
            ErrorCode::InternalError, "drill block boundary did not split as expected");

    const auto& comp_bmu = drilled.boundary_components()[out.boundary_bmu];
    auto [ct, ce] = block.base_edge(1, Complex2::slot_of(1, 2));
    int c_class = drilled.edge_class_of(ct + base_tets, ce);
    auto [vt, vee] = block.fiber_edge(1, 2);  // corner P4 = v of triangle T2
    int v_class = drilled.edge_class_of(vt + base_tets, vee);
    int cslot = comp_bmu.edge_slot(c_class);
    int vslot = comp_bmu.edge_slot(v_class);
    require(cslot >= 0 && vslot >= 0 && cslot != vslot, ErrorCode::InternalError,
            "marked edges missing on the drilled boundary");
    out.mu_star = edge_slope(out.boundary_bmu, cslot);
    out.lambda_star = edge_slope(out.boundary_bmu, vslot);

    const auto& comp_b = drilled.boundary_components()[out.boundary_b];
    auto [ft, fe] = block.fiber_edge(2, 0);  // corner P1 = u of triangle T3
    int fiber_class = drilled.edge_class_of(ft + base_tets, fe);
    out.b_fiber_slot = comp_b.edge_slot(fiber_class);
    require(out.b_fiber_slot >= 0, ErrorCode::InternalError,
            "fiber edge missing on the drilled copy of B");
    return out;
  }
  fail(ErrorCode::InternalError, "no valid attachment found for the drill block");
}

}  // namespace nsurf
