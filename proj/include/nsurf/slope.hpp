#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nsurf/triangulation.hpp"
#include "nsurf/types.hpp"

namespace nsurf {

// Arc coordinates on a one-vertex torus boundary: z[k] counts the arcs (in
// either triangle; the matching around the three edges forces the two
// triangles to agree) that avoid the k-th canonical boundary edge.  A
// connected essential curve has min(z) = 0 and gcd(z) = 1; the vertex-linking
// curve is (1,1,1).
using ArcTriple = std::array<Int, 3>;

inline Int gcd3(const ArcTriple& z) {
  Int g = 0;
  for (const auto& x : z) g = boost::multiprecision::gcd(g, x);
  return g;
}

// Intersection counts with the three boundary edges: a curve crosses edge k
// once for every arc avoiding one of the other two edges.
inline ArcTriple edge_crossings(const ArcTriple& z) {
  return {z[1] + z[2], z[0] + z[2], z[0] + z[1]};
}

struct Slope {
  int boundary_id = 0;
  Int p = 0, q = 0;  // primitive pair in the (first, second) boundary edge basis
  ArcTriple arcs{0, 0, 0};

  bool operator==(const Slope& o) const {
    return boundary_id == o.boundary_id && p == o.p && q == o.q;
  }
  bool operator<(const Slope& o) const {
    if (boundary_id != o.boundary_id) return boundary_id < o.boundary_id;
    if (p != o.p) return p < o.p;
    return q < o.q;
  }

  std::string str() const {
    return p.str() + "/" + q.str() + "@B" + std::to_string(boundary_id);
  }
};

// Arc coordinates of the normal representative of the slope p/q.  The basis
// identifies edge slopes e1 = 1/0, e2 = 0/1, e3 = 1/1.
inline ArcTriple slope_arcs(const Int& p, const Int& q) {
  Int n1 = abs(q), n2 = abs(p), n3 = abs(p - q);
  return {(n2 + n3 - n1) / 2, (n1 + n3 - n2) / 2, (n1 + n2 - n3) / 2};
}

inline Slope make_slope(int boundary_id, Int p, Int q) {
  Int g = boost::multiprecision::gcd(abs(p), abs(q));
  require(g == 1, ErrorCode::DisconnectedCurve, "slope pair is not primitive");
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  Slope s;
  s.boundary_id = boundary_id;
  s.p = p;
  s.q = q;
  s.arcs = slope_arcs(p, q);
  return s;
}

enum class CurveClass { Essential, Trivial };

struct CurveSlope {
  CurveClass cls;
  std::optional<Slope> slope;  // present for essential curves
};

// Classify a connected normal curve given by its arc triple.
inline CurveSlope slope_from_curve(const ArcTriple& z, int boundary_id) {
  Int mn = std::min({z[0], z[1], z[2]});
  if (z[0] == z[1] && z[1] == z[2]) {
    require(z[0] == 1, ErrorCode::DisconnectedCurve, "trivial curve system is not a single curve");
    return CurveSlope{CurveClass::Trivial, std::nullopt};
  }
  require(mn == 0, ErrorCode::DisconnectedCurve,
          "curve mixes trivial and essential components");
  require(gcd3(z) == 1, ErrorCode::DisconnectedCurve, "arc triple is not primitive");
  ArcTriple n = edge_crossings(z);
  Int p = n[1];
  Int q = (z[2] > 0) ? n[0] : -n[0];
  Slope s = make_slope(boundary_id, p, q);
  require(s.arcs == z, ErrorCode::InternalError, "arc triple does not encode a slope");
  return CurveSlope{CurveClass::Essential, s};
}

inline Slope edge_slope(int boundary_id, int edge_slot) {
  ArcTriple z{0, 0, 0};
  z[edge_slot] = 1;
  return *slope_from_curve(z, boundary_id).slope;
}

// Geometric intersection number |ad - bc|.
inline Int slope_distance(const Slope& a, const Slope& b) {
  require(a.boundary_id == b.boundary_id, ErrorCode::BoundaryMismatch,
          "slopes live on different boundary components");
  return abs(a.p * b.q - a.q * b.p);
}

// The unique slope whose normal representative sums with this one to
// vertex-linking curves: arcwise, the complement to the constant triple.
inline Slope complementary_slope(const Slope& g) {
  Int m = std::max({g.arcs[0], g.arcs[1], g.arcs[2]});
  ArcTriple w{m - g.arcs[0], m - g.arcs[1], m - g.arcs[2]};
  auto cs = slope_from_curve(w, g.boundary_id);
  require(cs.cls == CurveClass::Essential, ErrorCode::InternalError, "complement degenerated");
  return *cs.slope;
}

// Edge-intersection length of the normal representative.
inline Int slope_length(const Slope& g) { return 2 * (g.arcs[0] + g.arcs[1] + g.arcs[2]); }

// All slopes of length at most `bound`, by breadth-first traversal of the
// diagonal-flip (Farey) neighbours of the three edge slopes.  Length is
// monotone along the traversal frontier, which prunes it to a finite search.
inline std::vector<Slope> enumerate_short_slopes(int boundary_id, const Rat& bound) {
  std::vector<Slope> out;
  if (bound < 0) return out;
  std::set<std::pair<Int, Int>> seen;
  std::vector<Slope> frontier;
  for (int k = 0; k < 3; ++k) frontier.push_back(edge_slope(boundary_id, k));
  while (!frontier.empty()) {
    std::vector<Slope> next;
    for (const Slope& s : frontier) {
      if (seen.count({s.p, s.q})) continue;
      seen.insert({s.p, s.q});
      if (Rat(slope_length(s)) > bound) continue;
      out.push_back(s);
      // Farey neighbours: flip each slot of the crossing triple.
      ArcTriple n = edge_crossings(s.arcs);
      for (int i = 0; i < 3; ++i) {
        ArcTriple m = n;
        Int mx = std::max(n[(i + 1) % 3], n[(i + 2) % 3]);
        m[i] = 2 * mx - n[i];
        ArcTriple z{(m[1] + m[2] - m[0]) / 2, (m[0] + m[2] - m[1]) / 2, (m[0] + m[1] - m[2]) / 2};
        if (z[0] < 0 || z[1] < 0 || z[2] < 0) continue;
        if (gcd3(z) != 1 || std::min({z[0], z[1], z[2]}) != 0) continue;
        if (z[0] == z[1] && z[1] == z[2]) continue;
        auto cs = slope_from_curve(z, boundary_id);
        next.push_back(*cs.slope);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Slope& a, const Slope& b) {
    auto la = slope_length(a), lb = slope_length(b);
    if (la != lb) return la < lb;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  });
  return out;
}

// ---- boundary-component arc bookkeeping -----------------------------------

inline void require_one_vertex_torus(const BoundaryComponent& comp) {
  require(comp.one_vertex_torus, ErrorCode::NotOneVertexTorus,
          "boundary component is not a one-vertex torus");
}

// For a boundary triangle of a one-vertex torus, the arc type of an arc
// cutting a given corner is the slot (0..2) of the boundary edge avoided by
// the arc, i.e. the edge class of the side opposite that corner.
inline int arc_slot_for_corner(const Triangulation& tri, const BoundaryComponent& comp, int tet,
                               int face, int corner) {
  auto vs = face_vertices(face);
  int a = -1, b = -1;
  for (int x : vs)
    if (x != corner) (a == -1 ? a : b) = x;
  int cls = tri.edge_class_of(tet, edge_index(a, b));
  int slot = comp.edge_slot(cls);
  require(slot >= 0, ErrorCode::InternalError, "corner's opposite edge not on this boundary");
  return slot;
}

}  // namespace nsurf
