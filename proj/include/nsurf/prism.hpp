#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "nsurf/triangulation.hpp"
#include "nsurf/types.hpp"

namespace nsurf {

// Products of a triangulated surface with S^1 or [0,1], realised by splitting
// each triangle prism into three tetrahedra along a staircase.  The staircase
// of each prism is fixed by a linear order on its corners; orders are chosen
// so that the rectangle diagonals agree across glued edges.

struct Complex2 {
  struct Glue2 {
    int tri = -1;
    int slot = -1;   // 0: edge {0,1}, 1: edge {0,2}, 2: edge {1,2}
    bool swap = false;  // correspondence reverses the lex corner order
  };
  int triangles = 0;
  std::map<std::pair<int, int>, Glue2> glue;  // both directions recorded

  static std::pair<int, int> slot_corners(int slot) {
    switch (slot) {
      case 0: return {0, 1};
      case 1: return {0, 2};
      default: return {1, 2};
    }
  }
  static int slot_of(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0) return b == 1 ? 0 : 1;
    return 2;
  }
};

struct PrismBlock {
  std::vector<std::array<GluingSlot, 4>> table;
  std::vector<std::array<int, 3>> order;  // per triangle: corners in staircase order A,B,C

  int tet_of(int tri, int step) const { return 3 * tri + step; }

  int position_of(int tri, int corner) const {
    for (int i = 0; i < 3; ++i)
      if (order[tri][i] == corner) return i;
    return -1;
  }

  // Rectangle over an edge of a triangle: two triangulated faces plus the
  // (tet, vertex-label) positions of the corners at both levels.
  struct Rect {
    int lower_tet, lower_face;
    int upper_tet, upper_face;
    // tet vertex labels within lower/upper tets
    int x0_lower, y0_lower, x1_lower;  // lower face carries (X0, Y0, X1)
    int y0_upper, x1_upper, y1_upper;  // upper face carries (Y0, X1, Y1)
    int x_corner, y_corner;            // triangle corner labels; X is the staircase winner
  };

  Rect rect(int tri, int slot) const {
    auto [ca, cb] = Complex2::slot_corners(slot);
    int pa = position_of(tri, ca), pb = position_of(tri, cb);
    int x = ca, y = cb;
    if (pa > pb) {
      std::swap(x, y);
      std::swap(pa, pb);
    }
    Rect r;
    r.x_corner = x;
    r.y_corner = y;
    int ta = tet_of(tri, 0), tb = tet_of(tri, 1), tc = tet_of(tri, 2);
    if (pa == 0 && pb == 1) {
      r.lower_tet = ta; r.lower_face = 2; r.x0_lower = 0; r.y0_lower = 1; r.x1_lower = 3;
      r.upper_tet = tb; r.upper_face = 1; r.y0_upper = 0; r.x1_upper = 2; r.y1_upper = 3;
    } else if (pa == 1 && pb == 2) {
      r.lower_tet = tb; r.lower_face = 2; r.x0_lower = 0; r.y0_lower = 1; r.x1_lower = 3;
      r.upper_tet = tc; r.upper_face = 1; r.y0_upper = 0; r.x1_upper = 2; r.y1_upper = 3;
    } else {
      r.lower_tet = ta; r.lower_face = 1; r.x0_lower = 0; r.y0_lower = 2; r.x1_lower = 3;
      r.upper_tet = tc; r.upper_face = 2; r.y0_upper = 0; r.x1_upper = 1; r.y1_upper = 3;
    }
    return r;
  }

  // Vertical fiber edge over a triangle corner, as a (tet, edge) instance.
  std::pair<int, int> fiber_edge(int tri, int corner) const {
    int pos = position_of(tri, corner);
    return {tet_of(tri, pos), edge_index(0, 3)};
  }

  // Base-level copy of a triangle edge.
  std::pair<int, int> base_edge(int tri, int slot) const {
    Rect r = rect(tri, slot);
    return {r.lower_tet, edge_index(r.x0_lower, r.y0_lower)};
  }

  std::pair<int, int> diagonal_edge(int tri, int slot) const {
    Rect r = rect(tri, slot);
    return {r.lower_tet, edge_index(r.y0_lower, r.x1_lower)};
  }
};

namespace detail {

// Gluing that maps an ordered triple of vertex labels of (tet, face) onto an
// ordered triple of (tet', face'): the off-face labels map to each other.
inline void glue_faces(std::vector<std::array<GluingSlot, 4>>& table, int t0, int f0,
                       std::array<int, 3> v0, int t1, int f1, std::array<int, 3> v1) {
  std::array<int, 4> img{-1, -1, -1, -1};
  for (int i = 0; i < 3; ++i) img[v0[i]] = v1[i];
  img[f0] = f1;
  Perm4 p(img[0], img[1], img[2], img[3]);
  require(!table[t0][f0].has_value() && !table[t1][f1].has_value(), ErrorCode::InternalError,
          "prism face glued twice");
  table[t0][f0] = Gluing{t1, f1, p};
  table[t1][f1] = Gluing{t0, f0, p.inverse()};
}

}  // namespace detail

// Build (2-complex) x S^1 (wrap = true) or x [0,1] (wrap = false).
inline PrismBlock build_prism_block(const Complex2& c2, bool wrap) {
  // Choose a diagonal direction per edge class; a direction names the winner
  // corner on each instance.  Every triangle needs an acyclic triple.
  struct Inst {
    int tri, slot;
  };
  std::vector<std::vector<Inst>> classes;
  std::map<std::pair<int, int>, int> class_of;
  std::map<std::pair<int, int>, bool> swapped;  // relative to class representative
  for (int t = 0; t < c2.triangles; ++t)
    for (int s = 0; s < 3; ++s) {
      if (class_of.count({t, s})) continue;
      int id = static_cast<int>(classes.size());
      classes.push_back({{t, s}});
      class_of[{t, s}] = id;
      swapped[{t, s}] = false;
      auto it = c2.glue.find({t, s});
      if (it != c2.glue.end()) {
        class_of[{it->second.tri, it->second.slot}] = id;
        swapped[{it->second.tri, it->second.slot}] = it->second.swap;
        classes[id].push_back({it->second.tri, it->second.slot});
      }
    }

  int nclasses = static_cast<int>(classes.size());
  require(nclasses <= 20, ErrorCode::InternalError, "prism complex too large");
  std::vector<std::array<int, 3>> order(c2.triangles);
  bool found = false;
  for (int mask = 0; mask < (1 << nclasses) && !found; ++mask) {
    bool ok = true;
    std::vector<std::array<int, 3>> ord(c2.triangles);
    for (int t = 0; t < c2.triangles && ok; ++t) {
      // wins[corner] = number of edges whose winner is that corner
      std::array<int, 3> wins{0, 0, 0};
      std::array<int, 3> winner_of_slot{};
      for (int s = 0; s < 3; ++s) {
        auto [a, b] = Complex2::slot_corners(s);
        int cls = class_of[{t, s}];
        bool w_is_lex_low = ((mask >> cls) & 1) == 0;
        if (swapped[{t, s}]) w_is_lex_low = !w_is_lex_low;
        int w = w_is_lex_low ? a : b;
        winner_of_slot[s] = w;
        wins[w]++;
      }
      // transitive tournament has scores {2,1,0}
      std::array<int, 3> by_score{-1, -1, -1};
      for (int c = 0; c < 3; ++c) {
        if (wins[c] > 2 || by_score[2 - wins[c]] != -1) {
          ok = false;
          break;
        }
        by_score[2 - wins[c]] = c;
      }
      if (ok) ord[t] = by_score;
    }
    if (ok) {
      order = ord;
      found = true;
    }
  }
  require(found, ErrorCode::InternalError, "no consistent staircase orientation exists");

  PrismBlock pb;
  pb.order = order;
  pb.table.assign(3 * c2.triangles, {});

  // Intra-prism gluings and the vertical wrap.
  for (int t = 0; t < c2.triangles; ++t) {
    int ta = 3 * t, tb = ta + 1, tc = ta + 2;
    detail::glue_faces(pb.table, ta, 0, {1, 2, 3}, tb, 3, {0, 1, 2});
    detail::glue_faces(pb.table, tb, 0, {1, 2, 3}, tc, 3, {0, 1, 2});
    if (wrap) detail::glue_faces(pb.table, tc, 0, {1, 2, 3}, ta, 3, {0, 1, 2});
  }

  // Rectangles across glued edges.
  for (const auto& [key, g] : c2.glue) {
    auto [t0, s0] = key;
    if (std::make_pair(g.tri, g.slot) < key) continue;
    PrismBlock::Rect r0 = pb.rect(t0, s0);
    PrismBlock::Rect r1 = pb.rect(g.tri, g.slot);
    // The winner corners correspond by construction of the direction search.
    detail::glue_faces(pb.table, r0.lower_tet, r0.lower_face,
                       {r0.x0_lower, r0.y0_lower, r0.x1_lower}, r1.lower_tet, r1.lower_face,
                       {r1.x0_lower, r1.y0_lower, r1.x1_lower});
    detail::glue_faces(pb.table, r0.upper_tet, r0.upper_face,
                       {r0.y0_upper, r0.x1_upper, r0.y1_upper}, r1.upper_tet, r1.upper_face,
                       {r1.y0_upper, r1.x1_upper, r1.y1_upper});
  }
  return pb;
}

// Sanity wrapper: winners must correspond across glued instances.
inline void check_prism_winners(const Complex2& c2, const PrismBlock& pb) {
  for (const auto& [key, g] : c2.glue) {
    auto r0 = pb.rect(key.first, key.second);
    auto r1 = pb.rect(g.tri, g.slot);
    auto [a0, b0] = Complex2::slot_corners(key.second);
    auto [a1, b1] = Complex2::slot_corners(g.slot);
    int img_of_x0 = -1;
    if (r0.x_corner == a0) img_of_x0 = g.swap ? b1 : a1;
    else img_of_x0 = g.swap ? a1 : b1;
    require(img_of_x0 == r1.x_corner, ErrorCode::InternalError,
            "staircase winners disagree across a glued edge");
  }
}

}  // namespace nsurf
