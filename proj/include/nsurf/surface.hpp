#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "nsurf/normal.hpp"
#include "nsurf/slope.hpp"
#include "nsurf/triangulation.hpp"
#include "nsurf/types.hpp"

namespace nsurf {

struct ComponentInfo {
  int chi = 0;
  bool orientable = true;
  int genus = 0;      // when orientable
  int crosscaps = 0;  // when non-orientable
  int boundary_curves = 0;
  bool vertex_linking = false;
  bool closed = false;
  NormalVector vector;
  Int weight = 0;
  Int boundary_length = 0;
};

struct BoundaryCurveInfo {
  int boundary_component = -1;
  int surface_component = -1;
  ArcTriple arcs{0, 0, 0};  // meaningful on one-vertex torus boundaries
  bool on_one_vertex_torus = false;
  bool trivial = false;
  std::optional<Slope> slope;
  Int length = 0;
};

struct SurfaceGeometry {
  std::vector<ComponentInfo> components;
  std::vector<BoundaryCurveInfo> curves;
  int chi = 0;
  Int weight = 0;
  Int boundary_length = 0;
  bool connected() const { return components.size() == 1; }
};

struct Classification {
  bool is_sphere = false;
  bool is_disk = false;
  bool is_annulus = false;
  bool is_mobius = false;
  bool is_torus = false;
  bool is_klein = false;
  bool is_planar = false;  // orientable, genus 0, with boundary
  int genus = 0;
  int crosscaps = 0;
};

inline Classification classify(const ComponentInfo& c) {
  Classification r;
  r.genus = c.genus;
  r.crosscaps = c.crosscaps;
  r.is_sphere = c.orientable && c.chi == 2;
  r.is_disk = c.orientable && c.chi == 1 && c.boundary_curves == 1;
  r.is_annulus = c.orientable && c.chi == 0 && c.boundary_curves == 2;
  r.is_mobius = !c.orientable && c.chi == 0 && c.boundary_curves == 1;
  r.is_torus = c.orientable && c.chi == 0 && c.boundary_curves == 0;
  r.is_klein = !c.orientable && c.chi == 0 && c.boundary_curves == 0;
  r.is_planar = c.orientable && c.genus == 0 && c.boundary_curves >= 1;
  return r;
}

// Requires a connected surface.
inline Classification classify(const SurfaceGeometry& sg) {
  require(sg.connected(), ErrorCode::InternalError, "classification needs a connected surface");
  return classify(sg.components[0]);
}

namespace detail {

struct PieceTable {
  // per tet: triangle counts, active quad type (-1 none) and count
  std::vector<std::array<long, 4>> tri;
  std::vector<int> quad_type;
  std::vector<long> quad;
  std::vector<std::array<long, 4>> tri_base;  // piece id of first copy
  std::vector<long> quad_base;
  long total = 0;
};

inline long to_long(const Int& x) {
  require(x <= Int(1) << 40, ErrorCode::ResourceBudgetExceeded,
          "vector coordinates too large to reconstruct");
  return x.convert_to<long>();
}

struct Piece {
  int tet;
  int type;  // 0..3 triangle at vertex, 4+q quad
  long copy;
};

struct UF {
  std::vector<int> parent, parity;
  std::vector<bool> conflict;
  explicit UF(int n) : parent(n), parity(n, 0), conflict(n, false) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= p;
    return {r, parity[x]};
  }
  void unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != rel) conflict[ra] = true;
      return;
    }
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ rel;
    if (conflict[rb]) conflict[ra] = true;
  }
};

}  // namespace detail

class SurfaceBuilder {
 public:
  SurfaceBuilder(const NormalVector& v, const Triangulation& tri) : v_(v), tri_(tri) {
    require(is_admissible(v, tri), ErrorCode::NotAdmissible,
            "vector is not an admissible normal solution");
    build_pieces();
  }

  SurfaceGeometry run() {
    SurfaceGeometry sg;
    if (pt_.total == 0) return sg;
    glue_arcs();
    compute_points();
    assemble(sg);
    return sg;
  }

 private:
  const NormalVector& v_;
  const Triangulation& tri_;
  detail::PieceTable pt_;
  std::vector<detail::Piece> pieces_;

  // arc identity: (tet, face, corner, index). Each glued pair or free arc
  // becomes one edge of the surface complex.
  struct ArcRef {
    int tet, face, corner;
    long index;
    bool operator<(const ArcRef& o) const {
      return std::tie(tet, face, corner, index) < std::tie(o.tet, o.face, o.corner, o.index);
    }
    bool operator==(const ArcRef& o) const {
      return tet == o.tet && face == o.face && corner == o.corner && index == o.index;
    }
  };

  detail::UF piece_uf_{0};
  long glued_pairs_ = 0;
  long free_arcs_ = 0;
  std::vector<std::pair<ArcRef, ArcRef>> arc_pairs_;
  std::vector<ArcRef> free_list_;

  // edge points: key -> union-find over flattened (class, position)
  std::vector<long> class_weight_;
  std::vector<long> class_offset_;
  detail::UF point_uf_{0};

  void build_pieces() {
    int t = tri_.tet_count();
    pt_.tri.resize(t);
    pt_.quad_type.assign(t, -1);
    pt_.quad.assign(t, 0);
    pt_.tri_base.resize(t);
    pt_.quad_base.assign(t, 0);
    for (int i = 0; i < t; ++i) {
      for (int c = 0; c < 4; ++c) {
        pt_.tri[i][c] = detail::to_long(v_[tri_coord(i, c)]);
        pt_.tri_base[i][c] = pt_.total;
        pt_.total += pt_.tri[i][c];
        for (long j = 0; j < pt_.tri[i][c]; ++j) pieces_.push_back({i, c, j});
      }
      for (int q = 0; q < 3; ++q)
        if (v_[quad_coord(i, q)] != 0) {
          pt_.quad_type[i] = q;
          pt_.quad[i] = detail::to_long(v_[quad_coord(i, q)]);
        }
      pt_.quad_base[i] = pt_.total;
      pt_.total += pt_.quad[i];
      for (long j = 0; j < pt_.quad[i]; ++j) pieces_.push_back({i, 4 + pt_.quad_type[i], j});
    }
    piece_uf_ = detail::UF(static_cast<int>(pt_.total));
  }

  long arc_count(int tet, int face, int corner) const {
    long n = pt_.tri[tet][corner];
    if (pt_.quad_type[tet] >= 0 && quad_at(face, corner) == pt_.quad_type[tet]) n += pt_.quad[tet];
    return n;
  }

  // Piece carrying the arc at the given position (0-based, counted from the
  // corner vertex outward).
  long arc_piece(int tet, int face, int corner, long i) const {
    long xc = pt_.tri[tet][corner];
    if (i < xc) return pt_.tri_base[tet][corner] + i;
    long k = i - xc;
    int q = pt_.quad_type[tet];
    int a = q + 1;  // quad pairs {0, a}
    bool corner_on_zero_side = (corner == 0 || corner == a);
    long copy = corner_on_zero_side ? k : pt_.quad[tet] - 1 - k;
    return pt_.quad_base[tet] + copy;
  }

  // Position (1-based, from vertex u where u<v) of a piece's corner on edge
  // {u,v} of its tetrahedron.
  long corner_position(long piece_id, int u, int v) const {
    const auto& p = pieces_[piece_id];
    long xu = pt_.tri[p.tet][u], xv = pt_.tri[p.tet][v];
    long y = 0;
    if (pt_.quad_type[p.tet] >= 0) {
      int a = pt_.quad_type[p.tet] + 1;
      bool sep = ((u == 0 || u == a) && !(v == 0 || v == a)) ||
                 ((v == 0 || v == a) && !(u == 0 || u == a));
      if (sep) y = pt_.quad[p.tet];
    }
    long w = xu + xv + y;
    if (p.type < 4) {
      if (p.type == u) return p.copy + 1;
      require(p.type == v, ErrorCode::InternalError, "triangle does not meet the edge");
      return w - p.copy;
    }
    int a = p.type - 4 + 1;
    bool u_on_zero_side = (u == 0 || u == a);
    return u_on_zero_side ? xu + p.copy + 1 : xu + (y - p.copy);
  }

  long edge_weight(int edge_class) const {
    const auto& info = tri_.edge_classes()[edge_class];
    int t = info.rep_tet, e = info.rep_edge;
    int u = kEdgeVerts[e][0], v = kEdgeVerts[e][1];
    long w = pt_.tri[t][u] + pt_.tri[t][v];
    if (pt_.quad_type[t] >= 0) {
      int a = pt_.quad_type[t] + 1;
      bool su = (u == 0 || u == a), sv = (v == 0 || v == a);
      if (su != sv) w += pt_.quad[t];
    }
    return w;
  }

  void glue_arcs() {
    for (const auto& fc : tri_.interior_faces()) {
      bool self = fc.tet0 == fc.tet1 && fc.face0 == fc.face1;
      for (int corner : face_vertices(fc.face0)) {
        int c1 = fc.perm[corner];
        if (self) {
          // The identification pairs corner with perm[corner]; visit each
          // unordered pair once, and reject fixed corners carrying arcs.
          if (c1 == corner) {
            require(arc_count(fc.tet0, fc.face0, corner) == 0, ErrorCode::InternalError,
                    "arc glued to itself (face self-identification fixing a corner)");
            continue;
          }
          if (c1 < corner) continue;
        }
        long n0 = arc_count(fc.tet0, fc.face0, corner);
        long n1 = arc_count(fc.tet1, fc.face1, c1);
        require(n0 == n1, ErrorCode::InternalError, "matching violated during reconstruction");
        for (long i = 0; i < n0; ++i) {
          ArcRef a{fc.tet0, fc.face0, corner, i};
          ArcRef b{fc.tet1, fc.face1, c1, i};
          arc_pairs_.push_back({a, b});
          ++glued_pairs_;
          piece_uf_.unite(static_cast<int>(arc_piece(a.tet, a.face, a.corner, a.index)),
                          static_cast<int>(arc_piece(b.tet, b.face, b.corner, b.index)), 0);
        }
      }
    }
    for (auto [t, f] : tri_.boundary_faces()) {
      for (int corner : face_vertices(f)) {
        long n = arc_count(t, f, corner);
        for (long i = 0; i < n; ++i) {
          free_list_.push_back(ArcRef{t, f, corner, i});
          ++free_arcs_;
        }
      }
    }
  }

  long point_index(int tet, int u, int v, long pos_from_u) const {
    // position measured from u; convert to the class representative direction.
    int e = edge_index(u, v);
    int cls = tri_.edge_class_of(tet, e);
    long w = class_weight_[cls];
    long pos = pos_from_u;
    if (u > v) pos = w + 1 - pos;  // express from the lex-lower endpoint
    if (tri_.edge_orientation_of(tet, e) < 0) pos = w + 1 - pos;
    return class_offset_[cls] + pos - 1;
  }

  void compute_points() {
    int nc = tri_.edge_class_count();
    class_weight_.resize(nc);
    class_offset_.resize(nc);
    long total = 0;
    for (int c = 0; c < nc; ++c) {
      class_weight_[c] = edge_weight(c);
      class_offset_[c] = total;
      total += class_weight_[c];
    }
    point_uf_ = detail::UF(static_cast<int>(total));
    for (int c = 0; c < nc; ++c)
      if (tri_.edge_classes()[c].reversible)
        for (long p = 1; p <= class_weight_[c]; ++p)
          point_uf_.unite(static_cast<int>(class_offset_[c] + p - 1),
                          static_cast<int>(class_offset_[c] + class_weight_[c] - p), 0);
    // sanity: every instance sees its class weight
    for (int t = 0; t < tri_.tet_count(); ++t)
      for (int e = 0; e < 6; ++e) {
        int u = kEdgeVerts[e][0], v = kEdgeVerts[e][1];
        long w = pt_.tri[t][u] + pt_.tri[t][v];
        if (pt_.quad_type[t] >= 0) {
          int a = pt_.quad_type[t] + 1;
          bool su = (u == 0 || u == a), sv = (v == 0 || v == a);
          if (su != sv) w += pt_.quad[t];
        }
        require(w == class_weight_[tri_.edge_class_of(t, e)], ErrorCode::InternalError,
                "edge weight disagrees between instances");
      }
  }

  // Cyclic side order (faces) of a piece.
  std::vector<int> cyclic_sides(long piece_id) const {
    const auto& p = pieces_[piece_id];
    if (p.type < 4) {
      std::vector<int> fs;
      for (int f = 0; f < 4; ++f)
        if (f != p.type) fs.push_back(f);
      return fs;
    }
    int a = p.type - 4 + 1;
    std::vector<int> rest;
    for (int x = 1; x < 4; ++x)
      if (x != a) rest.push_back(x);
    return {rest[0], 0, rest[1], a};
  }

  // Endpoint edges (u,v sorted) of the side of `piece` lying on `face`.
  std::pair<std::pair<int, int>, std::pair<int, int>> side_endpoints(long piece_id,
                                                                     int face) const {
    auto sides = cyclic_sides(piece_id);
    int k = -1;
    for (size_t i = 0; i < sides.size(); ++i)
      if (sides[i] == face) k = static_cast<int>(i);
    require(k >= 0, ErrorCode::InternalError, "piece has no side on this face");
    int prev = sides[(k + sides.size() - 1) % sides.size()];
    int next = sides[(k + 1) % sides.size()];
    auto edge_between = [](int f, int g) {
      int u = -1, vv = -1;
      for (int x = 0; x < 4; ++x)
        if (x != f && x != g) (u == -1 ? u : vv) = x;
      return std::make_pair(u, vv);
    };
    return {edge_between(prev, face), edge_between(face, next)};  // (start, end)
  }

  void assemble(SurfaceGeometry& sg) {
    // Orientation parities along glued arcs.
    detail::UF orient(static_cast<int>(pt_.total));
    for (const auto& [a, b] : arc_pairs_) {
      long pa = arc_piece(a.tet, a.face, a.corner, a.index);
      long pb = arc_piece(b.tet, b.face, b.corner, b.index);
      auto [sa, ea] = side_endpoints(pa, a.face);
      auto [sb, eb] = side_endpoints(pb, b.face);
      const auto& slot = tri_.gluing(a.tet, a.face);
      require(slot.has_value(), ErrorCode::InternalError, "paired arc on boundary face");
      const Perm4& sigma = slot->perm;
      auto im = [&](std::pair<int, int> e) {
        int x = sigma[e.first], y = sigma[e.second];
        if (x > y) std::swap(x, y);
        return std::make_pair(x, y);
      };
      auto norm = [](std::pair<int, int> e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e;
      };
      auto sa_im = im(sa), ea_im = im(ea);
      bool oppose;
      if (sa_im == norm(eb) && ea_im == norm(sb)) {
        oppose = true;
      } else {
        require(sa_im == norm(sb) && ea_im == norm(eb), ErrorCode::InternalError,
                "arc endpoints do not correspond under the gluing");
        oppose = false;
      }
      orient.unite(static_cast<int>(pa), static_cast<int>(pb), oppose ? 0 : 1);
    }

    // Surface vertices: identify piece corners at identical edge points.
    // Collect, for every point, one representative piece for component data.
    std::map<long, long> point_piece;   // point root -> piece id
    std::set<long> used_points;
    for (long pid = 0; pid < pt_.total; ++pid) {
      auto sides = cyclic_sides(pid);
      int k = static_cast<int>(sides.size());
      for (int i = 0; i < k; ++i) {
        int f = sides[i], g = sides[(i + 1) % k];
        int u = -1, v = -1;
        for (int x = 0; x < 4; ++x)
          if (x != f && x != g) (u == -1 ? u : v) = x;
        long pos = corner_position(pid, u, v);
        long key = point_index(pieces_[pid].tet, u, v, pos);
        auto [root, par] = point_uf_.find(static_cast<int>(key));
        used_points.insert(root);
        point_piece[root] = pid;
      }
    }

    // Components of the surface.
    std::map<int, int> comp_of_root;
    std::vector<long> piece_comp(pt_.total);
    for (long pid = 0; pid < pt_.total; ++pid) {
      auto [r, par] = piece_uf_.find(static_cast<int>(pid));
      auto it = comp_of_root.find(r);
      if (it == comp_of_root.end()) {
        int id = static_cast<int>(sg.components.size());
        comp_of_root[r] = id;
        sg.components.push_back(ComponentInfo{});
        it = comp_of_root.find(r);
      }
      piece_comp[pid] = it->second;
    }

    // chi = V - E + F per component.
    std::vector<long> vcount(sg.components.size(), 0), ecount(sg.components.size(), 0),
        fcount(sg.components.size(), 0);
    for (long pid = 0; pid < pt_.total; ++pid) fcount[piece_comp[pid]]++;
    for (const auto& [a, b] : arc_pairs_)
      ecount[piece_comp[arc_piece(a.tet, a.face, a.corner, a.index)]]++;
    for (const auto& a : free_list_)
      ecount[piece_comp[arc_piece(a.tet, a.face, a.corner, a.index)]]++;
    for (long root : used_points) vcount[piece_comp[point_piece[root]]]++;

    // weight / boundary length per component via points.
    std::vector<Int> wt(sg.components.size(), Int(0)), blen(sg.components.size(), Int(0));
    {
      std::set<long> seen;
      for (int cls = 0; cls < tri_.edge_class_count(); ++cls) {
        bool on_b = tri_.edge_classes()[cls].on_boundary;
        for (long p = 1; p <= class_weight_[cls]; ++p) {
          auto [root, par] = point_uf_.find(static_cast<int>(class_offset_[cls] + p - 1));
          if (seen.count(root)) continue;
          seen.insert(root);
          int comp = static_cast<int>(piece_comp[point_piece[root]]);
          wt[comp] += 1;
          if (on_b) blen[comp] += 1;
        }
      }
    }

    // Vectors per component; vertex-linking detection.
    for (long pid = 0; pid < pt_.total; ++pid) {
      auto& comp = sg.components[piece_comp[pid]];
      if (comp.vector.empty()) comp.vector = zero_vector(tri_);
      const auto& p = pieces_[pid];
      if (p.type < 4)
        comp.vector[tri_coord(p.tet, p.type)] += 1;
      else
        comp.vector[quad_coord(p.tet, p.type - 4)] += 1;
    }

    // Boundary curves: walk free arcs through shared endpoints.
    trace_boundary_curves(sg, piece_comp);

    for (size_t c = 0; c < sg.components.size(); ++c) {
      auto& comp = sg.components[c];
      comp.chi = static_cast<int>(vcount[c] - ecount[c] + fcount[c]);
      comp.weight = wt[c];
      comp.boundary_length = blen[c];
      long rep = -1;
      for (long pid = 0; pid < pt_.total && rep < 0; ++pid)
        if (piece_comp[pid] == static_cast<long>(c)) rep = pid;
      auto [root, par] = piece_uf_.find(static_cast<int>(rep));
      comp.orientable = !orient.conflict[root];
      comp.closed = comp.boundary_curves == 0;
      if (comp.orientable)
        comp.genus = (2 - comp.chi - comp.boundary_curves) / 2;
      else
        comp.crosscaps = 2 - comp.chi - comp.boundary_curves;
      comp.vertex_linking = is_vertex_linking(c, piece_comp);
      sg.chi += comp.chi;
      sg.weight += comp.weight;
      sg.boundary_length += comp.boundary_length;
    }
  }

  void trace_boundary_curves(SurfaceGeometry& sg, const std::vector<long>& piece_comp) {
    if (free_list_.empty()) return;
    // Endpoint keys of a free arc.
    auto endpoints = [&](const ArcRef& a) {
      long pid = arc_piece(a.tet, a.face, a.corner, a.index);
      auto vs = face_vertices(a.face);
      std::vector<long> keys;
      for (int x : vs) {
        if (x == a.corner) continue;
        long pos = corner_position(pid, std::min(a.corner, x), std::max(a.corner, x));
        keys.push_back(point_index(pieces_[pid].tet, std::min(a.corner, x), std::max(a.corner, x), pos));
      }
      for (auto& k : keys) k = point_uf_.find(static_cast<int>(k)).first;
      return keys;
    };
    std::map<long, std::vector<int>> at_point;
    for (size_t i = 0; i < free_list_.size(); ++i)
      for (long k : endpoints(free_list_[i])) at_point[k].push_back(static_cast<int>(i));
    for (auto& [k, lst] : at_point)
      require(lst.size() == 2, ErrorCode::InternalError,
              "boundary point is not shared by exactly two arcs");
    std::vector<int> curve_of(free_list_.size(), -1);
    int ncurves = 0;
    for (size_t i = 0; i < free_list_.size(); ++i) {
      if (curve_of[i] >= 0) continue;
      int cid = ncurves++;
      std::vector<int> stack{static_cast<int>(i)};
      curve_of[i] = cid;
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (long k : endpoints(free_list_[a]))
          for (int b : at_point[k])
            if (curve_of[b] < 0) {
              curve_of[b] = cid;
              stack.push_back(b);
            }
      }
    }
    sg.curves.resize(ncurves);
    for (size_t i = 0; i < free_list_.size(); ++i) {
      const auto& a = free_list_[i];
      auto& cv = sg.curves[curve_of[i]];
      int bc = tri_.boundary_component_of_face(a.tet, a.face);
      require(bc >= 0, ErrorCode::InternalError, "free arc not on a boundary face");
      if (cv.boundary_component == -1) {
        cv.boundary_component = bc;
        cv.surface_component =
            static_cast<int>(piece_comp[arc_piece(a.tet, a.face, a.corner, a.index)]);
        cv.on_one_vertex_torus = tri_.boundary_components()[bc].one_vertex_torus;
      }
      require(cv.boundary_component == bc, ErrorCode::InternalError,
              "curve crosses boundary components");
      if (cv.on_one_vertex_torus) {
        int slot = arc_slot_for_corner(tri_, tri_.boundary_components()[bc], a.tet, a.face, a.corner);
        cv.arcs[slot] += 1;
      }
      cv.length += 1;  // each arc contributes one endpoint pair / one edge crossing
    }
    for (auto& cv : sg.curves) {
      if (cv.on_one_vertex_torus) {
        // Both triangles contribute arcs to the same triple; halve.
        ArcTriple z{cv.arcs[0] / 2, cv.arcs[1] / 2, cv.arcs[2] / 2};
        require(2 * z[0] == cv.arcs[0] && 2 * z[1] == cv.arcs[1] && 2 * z[2] == cv.arcs[2],
                ErrorCode::InternalError, "odd arc counts on a torus boundary curve");
        cv.arcs = z;
        auto cs = slope_from_curve(z, cv.boundary_component);
        cv.trivial = cs.cls == CurveClass::Trivial;
        cv.slope = cs.slope;
      }
      sg.components[cv.surface_component].boundary_curves += 1;
    }
  }

  bool is_vertex_linking(size_t comp, const std::vector<long>& piece_comp) const {
    // A vertex link consists of one triangle for each (tet, corner) instance
    // of a single vertex class.
    std::map<std::pair<int, int>, long> count;
    for (long pid = 0; pid < pt_.total; ++pid) {
      if (piece_comp[pid] != static_cast<long>(comp)) continue;
      const auto& p = pieces_[pid];
      if (p.type >= 4) return false;
      count[{p.tet, p.type}]++;
    }
    int cls = -1;
    for (const auto& [k, n] : count) {
      if (n != 1) return false;
      int c = tri_.vertex_class_of(k.first, k.second);
      if (cls == -1) cls = c;
      if (c != cls) return false;
    }
    if (cls == -1) return false;
    for (int t = 0; t < tri_.tet_count(); ++t)
      for (int c = 0; c < 4; ++c)
        if (tri_.vertex_class_of(t, c) == cls && !count.count({t, c})) return false;
    return true;
  }
};

inline SurfaceGeometry reconstruct(const NormalVector& v, const Triangulation& tri) {
  return SurfaceBuilder(v, tri).run();
}

}  // namespace nsurf
