#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsurf/enumerate.hpp"
#include "nsurf/normal.hpp"
#include "nsurf/slope.hpp"
#include "nsurf/surface.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {

// Arc types on the boundary: one per (boundary face, corner), faces in
// canonical order, corners ascending.
struct BoundaryArcTypes {
  std::vector<std::tuple<int, int, int>> arcs;  // (tet, face, corner)
  std::map<std::tuple<int, int, int>, int> index;

  explicit BoundaryArcTypes(const Triangulation& tri) {
    for (auto [t, f] : tri.boundary_faces())
      for (int c : face_vertices(f)) {
        index[{t, f, c}] = static_cast<int>(arcs.size());
        arcs.push_back({t, f, c});
      }
  }
};

// The normal boundary operator: entry 1 when the arc type lies in the disk
// type.  A triangle with two faces on the boundary contributes two arc units.
inline std::vector<IntVec> normal_boundary_map(const Triangulation& tri) {
  BoundaryArcTypes at(tri);
  std::vector<IntVec> rows(at.arcs.size(), IntVec(7 * tri.tet_count(), 0));
  for (size_t r = 0; r < at.arcs.size(); ++r) {
    auto [t, f, c] = at.arcs[r];
    rows[r][tri_coord(t, c)] = 1;
    rows[r][quad_coord(t, quad_at(f, c))] = 1;
  }
  return rows;
}

inline MatchingSystem constrained_system(const Triangulation& tri, const SlopeConstraint& c) {
  MatchingSystem ms = matching_system(tri);
  append_slope_constraint_rows(ms, tri, c);
  return ms;
}

enum class AleVariant { Basic, Link1, SpanningCollection, BoundaryConditioned };

inline const char* ale_variant_name(AleVariant v) {
  switch (v) {
    case AleVariant::Basic: return "basic";
    case AleVariant::Link1: return "link1";
    case AleVariant::SpanningCollection: return "spanning";
    case AleVariant::BoundaryConditioned: return "boundary-conditioned";
  }
  return "?";
}

struct AleWitness {
  NormalVector vector;
  Int boundary_length;
  int chi = 0;           // for negative-chi terms
  Int boundary_count;    // |A_k| for annulus/Mobius terms
  bool annulus_term = false;
  Rat ratio;
};

struct AleConstant {
  Rat value = 0;  // 0 by convention when no eligible term exists
  AleVariant variant = AleVariant::Basic;
  std::vector<AleWitness> witnesses;
};

// C = max over eligible members of L(dF)/-chi(F), plus L(dA)/|dA| terms for
// the annulus/Mobius variants.  Hypotheses on the ambient manifold are the
// caller's concern; the constant itself is always computable.
inline AleConstant ale_constant(const std::vector<NormalVector>& collection,
                                const Triangulation& tri, AleVariant variant) {
  AleConstant out;
  out.variant = variant;
  bool annulus_terms =
      variant == AleVariant::Link1 || variant == AleVariant::BoundaryConditioned;
  for (const auto& f : collection) {
    SurfaceGeometry sg = reconstruct(f, tri);
    if (sg.components.empty()) continue;
    int chi = sg.chi;
    Int length = sg.boundary_length;
    if (chi < 0 && length > 0) {
      AleWitness w;
      w.vector = f;
      w.boundary_length = length;
      w.chi = chi;
      w.boundary_count = 0;
      w.ratio = Rat(length, Int(-chi));
      out.witnesses.push_back(w);
    } else if (annulus_terms && sg.connected()) {
      Classification cl = classify(sg.components[0]);
      bool same_component_annulus = false;
      if (cl.is_annulus && sg.curves.size() == 2)
        same_component_annulus =
            sg.curves[0].boundary_component == sg.curves[1].boundary_component;
      if (cl.is_mobius || same_component_annulus) {
        AleWitness w;
        w.vector = f;
        w.boundary_length = length;
        w.chi = 0;
        w.boundary_count = sg.components[0].boundary_curves;
        w.annulus_term = true;
        w.ratio = Rat(length, w.boundary_count);
        out.witnesses.push_back(w);
      }
    }
  }
  for (const auto& w : out.witnesses) out.value = std::max(out.value, w.ratio);
  return out;
}

struct ZeroEfficiencyReport {
  std::vector<NormalVector> nonlinking_spheres;
  std::vector<NormalVector> nonlinking_disks;
  bool clean() const { return nonlinking_spheres.empty() && nonlinking_disks.empty(); }
  bool no_spheres() const { return nonlinking_spheres.empty(); }
};

// Scan the fundamental solutions for non vertex-linking normal spheres and
// disks.  (Every fundamental list contains the vertex solutions, which the
// cited decision procedures show is a sufficient set to scan.)
inline ZeroEfficiencyReport audit_zero_efficiency(const Triangulation& tri,
                                                  const Budget& budget = {}) {
  ZeroEfficiencyReport rep;
  ConeBasis cb = enumerate_fundamental_solutions(tri, std::nullopt, budget);
  for (size_t i = 0; i < cb.fundamentals.size(); ++i) {
    if (!cb.admissible[i]) continue;
    SurfaceGeometry sg = reconstruct(cb.fundamentals[i], tri);
    if (!sg.connected()) continue;
    const auto& comp = sg.components[0];
    if (comp.vertex_linking) continue;
    Classification cl = classify(comp);
    if (cl.is_sphere) rep.nonlinking_spheres.push_back(cb.fundamentals[i]);
    if (cl.is_disk) rep.nonlinking_disks.push_back(cb.fundamentals[i]);
  }
  return rep;
}

}  // namespace nsurf
