#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nsurf/perm.hpp"
#include "nsurf/types.hpp"

#include "json.hpp"

namespace nsurf {

// Tetrahedron faces are indexed by the opposite vertex: face f carries the
// three vertex labels distinct from f.  Edges are indexed 0..5 in lex order
// of their endpoint pairs.
inline constexpr int kEdgeVerts[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline int edge_index(int u, int v) {
  if (u > v) std::swap(u, v);
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[u][v];
}

inline std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> vs{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) vs[k++] = v;
  return vs;
}

// The two faces containing edge {u,v} are the two labels not in {u,v}.
inline std::array<int, 2> faces_of_edge(int u, int v) {
  std::array<int, 2> fs{};
  int k = 0;
  for (int f = 0; f < 4; ++f)
    if (f != u && f != v) fs[k++] = f;
  return fs;
}

struct Gluing {
  int tet = -1;
  int face = -1;
  Perm4 perm;  // maps this tetrahedron's vertex labels to the target's

  bool operator==(const Gluing& o) const {
    return tet == o.tet && face == o.face && perm == o.perm;
  }
};

using GluingSlot = std::optional<Gluing>;

struct EdgeClassInfo {
  int rep_tet = 0;
  int rep_edge = 0;      // 0..5 within rep_tet
  int size = 0;          // number of (tet,edge) instances
  bool on_boundary = false;
  bool reversible = false;  // identified with itself reversing orientation
};

struct VertexClassInfo {
  int rep_tet = 0;
  int rep_vertex = 0;
  int size = 0;
  bool on_boundary = false;
};

struct InteriorFace {
  int tet0, face0;
  int tet1, face1;  // (tet0,face0) <= (tet1,face1); may coincide for a self-gluing
  Perm4 perm;       // from tet0 labels to tet1 labels
};

// One side of a boundary-surface edge: the boundary triangle (tet,face) and
// the oriented endpoints of the edge as vertex labels of that tetrahedron.
struct BoundarySide {
  int tet, face;
  int u, v;
};

struct BoundaryEdge {
  int edge_class;   // 3-d edge class realised by this boundary edge
  BoundarySide s0, s1;  // paired with u<->u, v<->v correspondence
};

struct BoundaryComponent {
  int id = 0;
  std::vector<std::pair<int, int>> triangles;  // (tet,face), sorted
  std::vector<BoundaryEdge> edges;             // sorted by edge class
  int vertex_count = 0;
  int euler = 0;
  bool one_vertex_torus = false;

  int edge_slot(int edge_class) const {
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].edge_class == edge_class) return static_cast<int>(i);
    return -1;
  }
};

class Triangulation {
 public:
  Triangulation(int tets, std::vector<std::array<GluingSlot, 4>> gluings)
      : tet_count_(tets), gluings_(std::move(gluings)) {
    require(tets >= 0, ErrorCode::MalformedTable, "negative tetrahedron count");
    require(static_cast<int>(gluings_.size()) == tets, ErrorCode::MalformedTable,
            "gluing table size mismatch");
    validate();
    compute_edge_classes();
    compute_vertex_classes();
    compute_interior_faces();
    compute_boundary();
    check_orientability();
  }

  int tet_count() const { return tet_count_; }
  const GluingSlot& gluing(int tet, int face) const { return gluings_[tet][face]; }
  const std::vector<std::array<GluingSlot, 4>>& table() const { return gluings_; }

  int edge_class_count() const { return static_cast<int>(edge_classes_.size()); }
  int vertex_class_count() const { return static_cast<int>(vertex_classes_.size()); }
  const std::vector<EdgeClassInfo>& edge_classes() const { return edge_classes_; }
  const std::vector<VertexClassInfo>& vertex_classes() const { return vertex_classes_; }

  int edge_class_of(int tet, int edge) const { return edge_class_of_[tet * 6 + edge]; }
  // Orientation of the instance relative to the class representative: +1 when
  // kEdgeVerts order agrees with the representative's chosen direction.
  int edge_orientation_of(int tet, int edge) const { return edge_orient_of_[tet * 6 + edge]; }
  int vertex_class_of(int tet, int vertex) const { return vertex_class_of_[tet * 4 + vertex]; }

  const std::vector<InteriorFace>& interior_faces() const { return interior_faces_; }
  const std::vector<BoundaryComponent>& boundary_components() const { return boundary_; }
  const std::vector<std::pair<int, int>>& boundary_faces() const { return boundary_faces_; }

  bool boundary_face(int tet, int face) const { return !gluings_[tet][face].has_value(); }

  bool orientable() const { return orientable_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // True when every vertex class lies in the boundary and each boundary
  // component contains exactly one vertex class.
  bool is_minimal_vertex() const {
    for (const auto& v : vertex_classes_)
      if (!v.on_boundary) return false;
    for (const auto& b : boundary_)
      if (b.vertex_count != 1) return false;
    return !boundary_.empty();
  }

  int boundary_component_of_face(int tet, int face) const {
    auto it = boundary_component_of_face_.find({tet, face});
    return it == boundary_component_of_face_.end() ? -1 : it->second;
  }

  // ---- layering -----------------------------------------------------------

  struct LayerResult;

  // Layer a tetrahedron on the boundary edge with the given edge class.
  inline LayerResult layer_on_edge(int edge_class) const;

  // ---- serialization ------------------------------------------------------

  nlohmann::json to_json() const {
    nlohmann::json g = nlohmann::json::array();
    for (int t = 0; t < tet_count_; ++t) {
      nlohmann::json row = nlohmann::json::array();
      for (int f = 0; f < 4; ++f) {
        if (!gluings_[t][f]) {
          row.push_back(nullptr);
        } else {
          const auto& gl = *gluings_[t][f];
          row.push_back(nlohmann::json::array(
              {gl.tet, gl.face,
               nlohmann::json::array({gl.perm[0], gl.perm[1], gl.perm[2], gl.perm[3]})}));
        }
      }
      g.push_back(row);
    }
    return nlohmann::json{{"tets", tet_count_}, {"gluings", g}};
  }

  static Triangulation from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("tets") && j.contains("gluings"),
            ErrorCode::MalformedTable, "expected object with tets/gluings");
    int t = 0;
    try {
      t = j.at("tets").get<int>();
    } catch (...) {
      fail(ErrorCode::MalformedTable, "tets is not an integer");
    }
    const auto& g = j.at("gluings");
    require(g.is_array() && static_cast<int>(g.size()) == t, ErrorCode::MalformedTable,
            "gluings must be an array of length tets");
    std::vector<std::array<GluingSlot, 4>> table(t);
    for (int i = 0; i < t; ++i) {
      const auto& row = g[i];
      require(row.is_array() && row.size() == 4, ErrorCode::MalformedTable,
              "each gluing row must have 4 entries");
      for (int f = 0; f < 4; ++f) {
        const auto& e = row[f];
        if (e.is_null()) continue;
        require(e.is_array() && e.size() == 3 && e[2].is_array() && e[2].size() == 4,
                ErrorCode::MalformedTable, "gluing entry must be [tet, face, [p0,p1,p2,p3]]");
        int bt = e[0].get<int>(), bf = e[1].get<int>();
        Perm4 p(e[2][0].get<int>(), e[2][1].get<int>(), e[2][2].get<int>(), e[2][3].get<int>());
        table[i][f] = Gluing{bt, bf, p};
      }
    }
    return Triangulation(t, std::move(table));
  }

  // Label-invariant signature: the lexicographically least relabelled table
  // over all (start tetrahedron, start permutation) breadth-first labellings.
  std::string canonical_signature() const {
    if (tet_count_ == 0) return "empty";
    std::string best;
    std::vector<Perm4> all_perms;
    {
      std::array<int, 4> v{0, 1, 2, 3};
      do {
        all_perms.emplace_back(v[0], v[1], v[2], v[3]);
      } while (std::next_permutation(v.begin(), v.end()));
    }
    for (int start = 0; start < tet_count_; ++start) {
      for (const Perm4& sp : all_perms) {
        std::string sig = signature_from(start, sp);
        if (best.empty() || sig < best) best = sig;
      }
    }
    return best;
  }

 private:
  int tet_count_;
  std::vector<std::array<GluingSlot, 4>> gluings_;

  std::vector<int> edge_class_of_, edge_orient_of_, vertex_class_of_;
  std::vector<EdgeClassInfo> edge_classes_;
  std::vector<VertexClassInfo> vertex_classes_;
  std::vector<InteriorFace> interior_faces_;
  std::vector<std::pair<int, int>> boundary_faces_;
  std::vector<BoundaryComponent> boundary_;
  std::map<std::pair<int, int>, int> boundary_component_of_face_;
  bool orientable_ = true;
  std::vector<std::string> warnings_;

  void validate() const {
    for (int t = 0; t < tet_count_; ++t) {
      for (int f = 0; f < 4; ++f) {
        const auto& slot = gluings_[t][f];
        if (!slot) continue;
        const auto& gl = *slot;
        require(gl.tet >= 0 && gl.tet < tet_count_ && gl.face >= 0 && gl.face < 4,
                ErrorCode::MalformedTable, "gluing target out of range");
        require(gl.perm[f] == gl.face, ErrorCode::MalformedTable,
                "permutation does not map the glued face onto the target face");
        if (gl.tet == t && gl.face == f) {
          require(!gl.perm.is_identity(), ErrorCode::SelfGluedFaceIdentity,
                  "face glued to itself across the identity correspondence");
        }
        const auto& back = gluings_[gl.tet][gl.face];
        require(back.has_value(), ErrorCode::InvolutionViolation,
                "glued face's partner is marked boundary");
        require(back->tet == t && back->face == f && back->perm == gl.perm.inverse(),
                ErrorCode::InvolutionViolation, "gluing relation is not an involution");
      }
    }
  }

  // Union-find with an orientation parity relative to the root.
  struct ParityUF {
    std::vector<int> parent;
    std::vector<int> parity;  // 0/1 relative to parent
    std::vector<bool> conflict;
    explicit ParityUF(int n) : parent(n), parity(n, 0), conflict(n, false) {
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

  void compute_edge_classes() {
    ParityUF uf(tet_count_ * 6);
    for (int t = 0; t < tet_count_; ++t) {
      for (int f = 0; f < 4; ++f) {
        const auto& slot = gluings_[t][f];
        if (!slot) continue;
        for (int e = 0; e < 6; ++e) {
          int u = kEdgeVerts[e][0], v = kEdgeVerts[e][1];
          if (u == f || v == f) continue;  // edge not on this face
          int iu = slot->perm[u], iv = slot->perm[v];
          int e2 = edge_index(iu, iv);
          int rel = (iu < iv) ? 0 : 1;  // does the image order reverse?
          uf.unite(t * 6 + e, slot->tet * 6 + e2, rel);
        }
      }
    }
    edge_class_of_.assign(tet_count_ * 6, -1);
    edge_orient_of_.assign(tet_count_ * 6, 1);
    std::map<int, int> root_to_class;
    for (int i = 0; i < tet_count_ * 6; ++i) {
      auto [r, p] = uf.find(i);
      auto it = root_to_class.find(r);
      int cls;
      if (it == root_to_class.end()) {
        cls = static_cast<int>(edge_classes_.size());
        root_to_class[r] = cls;
        EdgeClassInfo info;
        info.rep_tet = i / 6;
        info.rep_edge = i % 6;
        info.reversible = uf.conflict[r];
        edge_classes_.push_back(info);
      } else {
        cls = it->second;
      }
      edge_class_of_[i] = cls;
      edge_orient_of_[i] = p ? -1 : 1;
      edge_classes_[cls].size++;
    }
    // Normalize orientation so the lex-least representative carries +1.
    std::vector<int> flip(edge_classes_.size(), 1);
    for (size_t c = 0; c < edge_classes_.size(); ++c) {
      int rep = edge_classes_[c].rep_tet * 6 + edge_classes_[c].rep_edge;
      flip[c] = edge_orient_of_[rep];
    }
    for (int i = 0; i < tet_count_ * 6; ++i) edge_orient_of_[i] *= flip[edge_class_of_[i]];
    for (int t = 0; t < tet_count_; ++t)
      for (int e = 0; e < 6; ++e) {
        int u = kEdgeVerts[e][0], v = kEdgeVerts[e][1];
        for (int f : faces_of_edge(u, v))
          if (!gluings_[t][f]) edge_classes_[edge_class_of_[t * 6 + e]].on_boundary = true;
      }
  }

  void compute_vertex_classes() {
    std::vector<int> parent(tet_count_ * 4);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int t = 0; t < tet_count_; ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& slot = gluings_[t][f];
        if (!slot) continue;
        for (int v = 0; v < 4; ++v) {
          if (v == f) continue;
          int a = find(t * 4 + v), b = find(slot->tet * 4 + slot->perm[v]);
          if (a != b) parent[a] = b;
        }
      }
    vertex_class_of_.assign(tet_count_ * 4, -1);
    std::map<int, int> root_to_class;
    for (int i = 0; i < tet_count_ * 4; ++i) {
      int r = find(i);
      auto it = root_to_class.find(r);
      int cls;
      if (it == root_to_class.end()) {
        cls = static_cast<int>(vertex_classes_.size());
        root_to_class[r] = cls;
        vertex_classes_.push_back(VertexClassInfo{i / 4, i % 4, 0, false});
      } else {
        cls = it->second;
      }
      vertex_class_of_[i] = cls;
      vertex_classes_[cls].size++;
    }
    for (int t = 0; t < tet_count_; ++t)
      for (int f = 0; f < 4; ++f)
        if (!gluings_[t][f])
          for (int v : face_vertices(f)) vertex_classes_[vertex_class_of_[t * 4 + v]].on_boundary = true;
  }

  void compute_interior_faces() {
    for (int t = 0; t < tet_count_; ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& slot = gluings_[t][f];
        if (!slot) {
          boundary_faces_.push_back({t, f});
          continue;
        }
        if (std::make_pair(t, f) <= std::make_pair(slot->tet, slot->face))
          interior_faces_.push_back(InteriorFace{t, f, slot->tet, slot->face, slot->perm});
      }
  }

  // Walk around an edge starting from a boundary face side until the other
  // boundary face side is reached.  `u`, `v` are carried along so the final
  // side records the endpoint correspondence.
  BoundarySide trace_edge(int tet, int leave_face, int u, int v) const {
    for (;;) {
      const auto& slot = gluings_[tet][leave_face];
      if (!slot) return BoundarySide{tet, leave_face, u, v};
      int nt = slot->tet;
      int nu = slot->perm[u], nv = slot->perm[v];
      int entered = slot->face;
      auto fs = faces_of_edge(nu, nv);
      int next = (fs[0] == entered) ? fs[1] : fs[0];
      tet = nt;
      leave_face = next;
      u = nu;
      v = nv;
    }
  }

  void compute_boundary() {
    std::sort(boundary_faces_.begin(), boundary_faces_.end());
    std::map<std::pair<int, int>, int> bf_index;
    for (size_t i = 0; i < boundary_faces_.size(); ++i) bf_index[boundary_faces_[i]] = static_cast<int>(i);

    // Pair up the boundary sides of every boundary edge.
    std::vector<BoundaryEdge> bedges;
    std::set<std::tuple<int, int, int>> seen;  // (tet, face, edge)
    for (auto [t, f] : boundary_faces_) {
      auto vs = face_vertices(f);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          int u = vs[i], v = vs[j];
          int e = edge_index(u, v);
          if (seen.count({t, f, e})) continue;
          auto fs = faces_of_edge(u, v);
          int other = (fs[0] == f) ? fs[1] : fs[0];
          BoundarySide s1 = trace_edge(t, other, u, v);
          int e1 = edge_index(s1.u, s1.v);
          seen.insert({t, f, e});
          seen.insert({s1.tet, s1.face, e1});
          BoundaryEdge be;
          be.edge_class = edge_class_of_[t * 6 + e];
          be.s0 = BoundarySide{t, f, u, v};
          be.s1 = s1;
          bedges.push_back(be);
        }
    }

    // Group boundary faces into components.
    std::vector<int> parent(boundary_faces_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& be : bedges) {
      int a = find(bf_index[{be.s0.tet, be.s0.face}]);
      int b = find(bf_index[{be.s1.tet, be.s1.face}]);
      if (a != b) parent[a] = b;
    }

    std::map<int, int> root_to_comp;
    for (size_t i = 0; i < boundary_faces_.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (!root_to_comp.count(r)) {
        int id = static_cast<int>(boundary_.size());
        root_to_comp[r] = id;
        boundary_.push_back(BoundaryComponent{});
        boundary_.back().id = id;
      }
      int comp = root_to_comp[r];
      boundary_[comp].triangles.push_back(boundary_faces_[i]);
      boundary_component_of_face_[boundary_faces_[i]] = comp;
    }

    for (const auto& be : bedges) {
      int comp = boundary_component_of_face_[{be.s0.tet, be.s0.face}];
      boundary_[comp].edges.push_back(be);
    }

    // Boundary-surface vertices: orbits of triangle corners under the edge
    // pairings.  Corner key: bf_index * 4 + vertex label.
    std::vector<int> vparent(boundary_faces_.size() * 4);
    std::iota(vparent.begin(), vparent.end(), 0);
    std::function<int(int)> vfind = [&](int x) {
      while (vparent[x] != x) x = vparent[x] = vparent[vparent[x]];
      return x;
    };
    auto vkey = [&](int tet, int face, int vert) { return bf_index[{tet, face}] * 4 + vert; };
    for (const auto& be : bedges) {
      for (auto [a, b] : {std::pair{be.s0.u, be.s1.u}, std::pair{be.s0.v, be.s1.v}}) {
        int x = vfind(vkey(be.s0.tet, be.s0.face, a));
        int y = vfind(vkey(be.s1.tet, be.s1.face, b));
        if (x != y) vparent[x] = y;
      }
    }

    for (auto& comp : boundary_) {
      std::sort(comp.triangles.begin(), comp.triangles.end());
      auto class_key = [&](const BoundaryEdge& e) {
        const auto& info = edge_classes_[e.edge_class];
        return std::make_pair(info.rep_tet, info.rep_edge);
      };
      std::sort(comp.edges.begin(), comp.edges.end(),
                [&](const BoundaryEdge& a, const BoundaryEdge& b) { return class_key(a) < class_key(b); });
      std::set<int> verts;
      for (auto [t, f] : comp.triangles)
        for (int v : face_vertices(f)) verts.insert(vfind(vkey(t, f, v)));
      comp.vertex_count = static_cast<int>(verts.size());
      comp.euler = comp.vertex_count - static_cast<int>(comp.edges.size()) +
                   static_cast<int>(comp.triangles.size());
      comp.one_vertex_torus = comp.triangles.size() == 2 && comp.edges.size() == 3 &&
                              comp.vertex_count == 1 && comp.euler == 0;
    }
  }

  void check_orientability() {
    // Consistent tetrahedron orientations require every gluing permutation to
    // be odd.
    std::vector<int> sign(tet_count_, 0);
    orientable_ = true;
    for (int s = 0; s < tet_count_; ++s) {
      if (sign[s] != 0) continue;
      sign[s] = 1;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
          const auto& slot = gluings_[t][f];
          if (!slot) continue;
          int want = -slot->perm.sign() * sign[t];
          if (sign[slot->tet] == 0) {
            sign[slot->tet] = want;
            stack.push_back(slot->tet);
          } else if (sign[slot->tet] != want) {
            orientable_ = false;
          }
        }
      }
    }
    if (!orientable_) warnings_.push_back("triangulation is non-orientable");
  }

  std::string signature_from(int start, const Perm4& sp) const {
    // BFS relabelling: old tet -> (new index, perm old labels -> new labels).
    std::vector<int> new_index(tet_count_, -1);
    std::vector<Perm4> relabel(tet_count_);
    std::vector<int> order;
    new_index[start] = 0;
    relabel[start] = sp;
    order.push_back(start);
    std::string sig;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int t = order[qi];
      Perm4 inv = relabel[t].inverse();
      for (int nf = 0; nf < 4; ++nf) {
        int f = inv[nf];  // face with new label nf
        const auto& slot = gluings_[t][f];
        if (!slot) {
          sig += "b;";
          continue;
        }
        if (new_index[slot->tet] == -1) {
          new_index[slot->tet] = static_cast<int>(order.size());
          // Induced labelling keeps signatures of isomorphic tables equal.
          relabel[slot->tet] = relabel[t] * slot->perm.inverse();
          order.push_back(slot->tet);
        }
        Perm4 p = relabel[slot->tet] * slot->perm * inv;
        sig += std::to_string(new_index[slot->tet]) + "." + std::to_string(relabel[slot->tet][slot->face]) +
               p.str() + ";";
      }
    }
    if (static_cast<int>(order.size()) != tet_count_) {
      // Disconnected: append remaining components deterministically.
      for (int t = 0; t < tet_count_; ++t)
        if (new_index[t] == -1) sig += "|";
    }
    return sig;
  }
};

struct Triangulation::LayerResult {
  Triangulation tri;
  int new_tet;   // index of the layered tetrahedron
  int new_edge;  // its fresh boundary edge is {2,3}
};

inline Triangulation::LayerResult Triangulation::layer_on_edge(int edge_class) const {
  const BoundaryEdge* be = nullptr;
  for (const auto& comp : boundary_)
    for (const auto& e : comp.edges)
      if (e.edge_class == edge_class) be = &e;
  require(be != nullptr, ErrorCode::EdgeNotOnBoundary, "edge class is not a boundary edge");
  require(!(be->s0.tet == be->s1.tet && be->s0.face == be->s1.face),
          ErrorCode::AdjacentTrianglesNotDistinct,
          "the two triangles adjacent along the edge coincide");

  int nt = tet_count_;
  auto table = gluings_;
  table.push_back({});

  auto attach = [&](int my_face, const BoundarySide& s, int other_label) {
    // my_face contains edge {0,1}; vertex 0 -> s.u, 1 -> s.v.
    std::array<int, 4> img{};
    img[0] = s.u;
    img[1] = s.v;
    int w = -1;
    for (int x : face_vertices(s.face))
      if (x != s.u && x != s.v) w = x;
    img[other_label] = w;
    img[my_face] = s.face;
    Perm4 pi(img[0], img[1], img[2], img[3]);
    table[nt][my_face] = Gluing{s.tet, s.face, pi};
    table[s.tet][s.face] = Gluing{nt, my_face, pi.inverse()};
  };
  attach(3, be->s0, 2);
  attach(2, be->s1, 3);

  return LayerResult{Triangulation(nt + 1, std::move(table)), nt, edge_index(2, 3)};
}

}  // namespace nsurf
