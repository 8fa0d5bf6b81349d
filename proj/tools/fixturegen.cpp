// Exhaustive search for small fixture triangulations: two-tetrahedron
// one-vertex knot-manifolds with a clean zero-efficiency audit and at least
// one fundamental surface of negative Euler characteristic.  The chosen table
// is committed as nsurf::fixtures::knot_manifold_json().

#include <iostream>
#include <vector>

#include "nsurf/bounds.hpp"
#include "nsurf/enumerate.hpp"
#include "nsurf/fixtures.hpp"
#include "nsurf/surface.hpp"
#include "nsurf/triangulation.hpp"

using namespace nsurf;

namespace {

std::vector<Perm4> face_perms(int f, int g) {
  // Permutations mapping face f onto face g.
  std::vector<Perm4> out;
  auto vs = face_vertices(f);
  auto ws = face_vertices(g);
  std::sort(ws.begin(), ws.end());
  do {
    std::array<int, 4> img{};
    img[f] = g;
    for (int i = 0; i < 3; ++i) img[vs[i]] = ws[i];
    out.emplace_back(img[0], img[1], img[2], img[3]);
  } while (std::next_permutation(ws.begin(), ws.end()));
  return out;
}

struct Candidate {
  Triangulation tri;
  std::string json;
};

}  // namespace

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  // Faces of two tetrahedra: ids 0..7 = (tet, face).  Exactly two faces stay
  // on the boundary (the one-vertex torus), the rest glue in pairs.
  std::vector<int> faces{0, 1, 2, 3, 4, 5, 6, 7};
  int found = 0;

  std::vector<std::pair<int, int>> free_choices;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) free_choices.push_back({a, b});

  for (auto [fa, fb] : free_choices) {
    std::vector<int> rest;
    for (int x : faces)
      if (x != fa && x != fb) rest.push_back(x);
    // enumerate perfect matchings of `rest`
    std::vector<std::pair<int, int>> pairs(3);
    std::function<void(std::vector<int>, int)> match = [&](std::vector<int> pool, int k) {
      if (pool.empty()) {
        // enumerate permutations per pair
        std::array<std::vector<Perm4>, 3> perm_lists;
        for (int i = 0; i < 3; ++i)
          perm_lists[i] = face_perms(pairs[i].first % 4, pairs[i].second % 4);
        for (const auto& p0 : perm_lists[0])
          for (const auto& p1 : perm_lists[1])
            for (const auto& p2 : perm_lists[2]) {
              std::vector<std::array<GluingSlot, 4>> table(2);
              auto put = [&](std::pair<int, int> pr, const Perm4& p) {
                int t0 = pr.first / 4, f0 = pr.first % 4;
                int t1 = pr.second / 4, f1 = pr.second % 4;
                table[t0][f0] = Gluing{t1, f1, p};
                table[t1][f1] = Gluing{t0, f0, p.inverse()};
              };
              std::array<const Perm4*, 3> ps{&p0, &p1, &p2};
              bool clash = false;
              for (int i = 0; i < 3 && !clash; ++i) {
                int t0 = pairs[i].first / 4, f0 = pairs[i].first % 4;
                int t1 = pairs[i].second / 4, f1 = pairs[i].second % 4;
                if (table[t0][f0].has_value() || table[t1][f1].has_value()) clash = true;
                if (!clash) put(pairs[i], *ps[i]);
              }
              if (clash) return;
              try {
                Triangulation tri(2, table);
                if (!tri.orientable()) continue;
                if (tri.vertex_class_count() != 1) continue;
                const auto& bc = tri.boundary_components();
                if (bc.size() != 1 || !bc[0].one_vertex_torus) continue;
                auto rep = audit_zero_efficiency(tri);
                if (!rep.clean()) continue;
                // need a fundamental surface with chi < 0
                ConeBasis cb = enumerate_fundamental_solutions(tri);
                bool neg = false;
                for (size_t i = 0; i < cb.fundamentals.size(); ++i) {
                  if (!cb.admissible[i]) continue;
                  SurfaceGeometry sg = reconstruct(cb.fundamentals[i], tri);
                  if (sg.chi < 0) neg = true;
                }
                if (!neg) continue;
                ++found;
                std::cout << "HIT " << found << ": " << tri.to_json().dump() << "\n";
                std::cout << "  signature: " << tri.canonical_signature() << "\n";
                if (verbose) {
                  for (size_t i = 0; i < cb.fundamentals.size(); ++i) {
                    if (!cb.admissible[i]) continue;
                    SurfaceGeometry sg = reconstruct(cb.fundamentals[i], tri);
                    std::cout << "  fundamental chi=" << sg.chi << " curves=" << sg.curves.size()
                              << "\n";
                  }
                }
                if (found >= 4) {
                  std::cout << "(stopping after " << found << " hits)\n";
                  return;
                }
              } catch (const Error&) {
                continue;
              }
            }
        return;
      }
      int a = pool[0];
      for (size_t i = 1; i < pool.size(); ++i) {
        int b = pool[i];
        std::vector<int> next;
        for (size_t j = 1; j < pool.size(); ++j)
          if (j != i) next.push_back(pool[j]);
        pairs[k] = {a, b};
        match(next, k + 1);
        if (found >= 4) return;
      }
    };
    match(rest, 0);
    if (found >= 4) break;
  }
  if (found == 0) std::cout << "no two-tetrahedron fixture found\n";
  return 0;
}
