#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "nsurf/normal.hpp"
#include "nsurf/triangulation.hpp"
#include "nsurf/types.hpp"

namespace nsurf {

// ---- exact linear algebra ---------------------------------------------------

inline void make_primitive(IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Rank via fraction-free Gaussian elimination.
inline int int_rank(std::vector<IntVec> m) {
  if (m.empty()) return 0;
  size_t cols = m[0].size();
  int rank = 0;
  size_t col = 0;
  for (size_t row = 0; row < m.size() && col < cols; ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Int a = m[row][col], b = m[r][col];
      Int g = boost::multiprecision::gcd(abs(a), abs(b));
      Int ma = a / g, mb = b / g;
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] * ma - m[row][c] * mb;
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Integer basis of the rational kernel of A (columns of the result, one
// IntVec per basis vector).  Not necessarily saturated; callers normalise at
// the point of use.
inline std::vector<IntVec> kernel_basis(const std::vector<IntVec>& rows, int cols) {
  // Rational RREF.
  std::vector<std::vector<Rat>> m;
  for (const auto& r : rows) {
    std::vector<Rat> rr(cols);
    for (int i = 0; i < cols; ++i) rr[i] = Rat(r[i]);
    m.push_back(std::move(rr));
  }
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rat d = m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] /= d;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<IntVec> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[fc] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][fc];
    Int denom = 1;
    for (const auto& x : v) denom = boost::multiprecision::lcm(denom, denominator(x));
    IntVec iv(cols);
    for (int c = 0; c < cols; ++c) iv[c] = Int(numerator(v[c]) * (denom / denominator(v[c])));
    make_primitive(iv);
    basis.push_back(std::move(iv));
  }
  return basis;
}

// ---- double description -----------------------------------------------------

// Extreme rays of {x >= 0 : rows . x = 0}, as primitive integer vectors,
// sorted lexicographically.
inline std::vector<IntVec> extreme_rays(const std::vector<IntVec>& eq_rows, int cols,
                                        const Budget& budget = {}) {
  auto kb = kernel_basis(eq_rows, cols);
  int d = static_cast<int>(kb.size());
  if (d == 0) return {};

  // Constraint i in kernel coordinates: sum_j kb[j][i] * y_j >= 0.
  auto cval = [&](int i, const IntVec& y) {
    Int s = 0;
    for (int j = 0; j < d; ++j)
      if (kb[j][i] != 0) s += kb[j][i] * y[j];
    return s;
  };

  struct Ray {
    IntVec y;
    std::vector<char> zero;  // per processed constraint
  };
  std::vector<IntVec> lineality;
  for (int j = 0; j < d; ++j) {
    IntVec e(d, 0);
    e[j] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  std::vector<int> processed;

  for (int i = 0; i < cols; ++i) {
    budget.charge();
    // Reduce lineality first if the constraint is nonzero there.
    int l0 = -1;
    for (size_t j = 0; j < lineality.size(); ++j)
      if (cval(i, lineality[j]) != 0) {
        l0 = static_cast<int>(j);
        break;
      }
    if (l0 >= 0) {
      IntVec base = lineality[l0];
      Int vb = cval(i, base);
      if (vb < 0) {
        for (auto& x : base) x = -x;
        vb = -vb;
      }
      std::vector<IntVec> nl;
      for (size_t j = 0; j < lineality.size(); ++j) {
        if (static_cast<int>(j) == l0) continue;
        Int vj = cval(i, lineality[j]);
        IntVec w(d);
        for (int k = 0; k < d; ++k) w[k] = vb * lineality[j][k] - vj * base[k];
        make_primitive(w);
        nl.push_back(std::move(w));
      }
      lineality = std::move(nl);
      for (auto& r : rays) {
        Int vr = cval(i, r.y);
        if (vr != 0) {
          IntVec w(d);
          for (int k = 0; k < d; ++k) w[k] = vb * r.y[k] - vr * base[k];
          make_primitive(w);
          r.y = std::move(w);
        }
        r.zero.push_back(1);
      }
      Ray nr;
      nr.y = std::move(base);
      nr.zero.assign(processed.size(), 1);
      nr.zero.push_back(0);
      rays.push_back(std::move(nr));
      processed.push_back(i);
      continue;
    }

    // Split the ray list.
    std::vector<Int> vals(rays.size());
    bool any_neg = false;
    for (size_t r = 0; r < rays.size(); ++r) {
      vals[r] = cval(i, rays[r].y);
      if (vals[r] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t r = 0; r < rays.size(); ++r) rays[r].zero.push_back(vals[r] == 0 ? 1 : 0);
      processed.push_back(i);
      continue;
    }
    std::vector<Ray> next;
    for (size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] >= 0) {
        Ray nr = rays[r];
        nr.zero.push_back(vals[r] == 0 ? 1 : 0);
        next.push_back(std::move(nr));
      }
    }
    auto adjacent = [&](size_t p, size_t n) {
      std::vector<char> z(processed.size());
      for (size_t k = 0; k < processed.size(); ++k) z[k] = rays[p].zero[k] & rays[n].zero[k];
      for (size_t r = 0; r < rays.size(); ++r) {
        if (r == p || r == n) continue;
        bool contains = true;
        for (size_t k = 0; k < processed.size() && contains; ++k)
          if (z[k] && !rays[r].zero[k]) contains = false;
        if (contains) return false;
      }
      return true;
    };
    for (size_t p = 0; p < rays.size(); ++p) {
      if (vals[p] <= 0) continue;
      for (size_t n = 0; n < rays.size(); ++n) {
        if (vals[n] >= 0) continue;
        budget.charge();
        if (!adjacent(p, n)) continue;
        Ray nr;
        nr.y.resize(d);
        for (int k = 0; k < d; ++k) nr.y[k] = vals[p] * rays[n].y[k] - vals[n] * rays[p].y[k];
        make_primitive(nr.y);
        nr.zero.resize(processed.size() + 1);
        for (size_t k = 0; k < processed.size(); ++k)
          nr.zero[k] = rays[p].zero[k] & rays[n].zero[k];
        nr.zero[processed.size()] = 1;
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    processed.push_back(i);
  }
  require(lineality.empty(), ErrorCode::InternalError, "solution cone has lineality");

  std::vector<IntVec> out;
  for (const auto& r : rays) {
    IntVec x(cols, 0);
    for (int i = 0; i < cols; ++i)
      for (int j = 0; j < d; ++j)
        if (kb[j][i] != 0) x[i] += kb[j][i] * r.y[j];
    bool neg = false, pos = false;
    for (const auto& v : x) {
      if (v < 0) neg = true;
      if (v > 0) pos = true;
    }
    require(!neg && pos, ErrorCode::InternalError, "ray escapes the nonnegative orthant");
    make_primitive(x);
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- Smith normal form (diagonal + column transform) ------------------------

struct SmithResult {
  std::vector<Int> diag;           // s_1 | s_2 | ... (nonzero entries)
  std::vector<IntVec> col_ops;     // W with V_original * W = column-reduced; d x d
};

inline SmithResult smith_diagonal(std::vector<IntVec> m /* n rows, d cols */, int d) {
  SmithResult res;
  res.col_ops.assign(d, IntVec(d, 0));
  for (int i = 0; i < d; ++i) res.col_ops[i][i] = 1;
  size_t n = m.size();
  auto col_swap = [&](int a, int b) {
    for (size_t r = 0; r < n; ++r) std::swap(m[r][a], m[r][b]);
    for (int r = 0; r < d; ++r) std::swap(res.col_ops[r][a], res.col_ops[r][b]);
  };
  auto col_add = [&](int dst, int src, const Int& f) {
    for (size_t r = 0; r < n; ++r) m[r][dst] += f * m[r][src];
    for (int r = 0; r < d; ++r) res.col_ops[r][dst] += f * res.col_ops[r][src];
  };
  auto row_swap = [&](size_t a, size_t b) { std::swap(m[a], m[b]); };
  auto row_add = [&](size_t dst, size_t src, const Int& f) {
    for (int c = 0; c < d; ++c) m[dst][c] += f * m[src][c];
  };

  size_t row = 0;
  int col = 0;
  while (col < d && row < n) {
    // Find a pivot with least absolute value in the remaining block.
    size_t pr = n;
    int pc = -1;
    Int best = 0;
    for (size_t r = row; r < n; ++r)
      for (int c = col; c < d; ++c)
        if (m[r][c] != 0 && (pc == -1 || abs(m[r][c]) < best)) {
          best = abs(m[r][c]);
          pr = r;
          pc = c;
        }
    if (pc == -1) break;
    row_swap(row, pr);
    col_swap(col, pc);
    bool clean = true;
    for (size_t r = row + 1; r < n; ++r)
      if (m[r][col] != 0) {
        row_add(r, row, -(m[r][col] / m[row][col]));
        if (m[r][col] != 0) clean = false;
      }
    for (int c = col + 1; c < d; ++c)
      if (m[row][c] != 0) {
        col_add(c, col, -(m[row][c] / m[row][col]));
        if (m[row][c] != 0) clean = false;
      }
    if (!clean) continue;  // remainders left; repeat with smaller pivot
    res.diag.push_back(abs(m[row][col]));
    ++row;
    ++col;
  }
  return res;
}

// ---- Hilbert basis ----------------------------------------------------------

// Lattice points of the half-open parallelepiped of a simplicial cone spanned
// by linearly independent integer generators.
inline std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& gens,
                                                 const Budget& budget) {
  int d = static_cast<int>(gens.size());
  int n = static_cast<int>(gens[0].size());
  std::vector<IntVec> vmat(n, IntVec(d));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < d; ++c) vmat[r][c] = gens[c][r];
  SmithResult snf = smith_diagonal(vmat, d);
  require(static_cast<int>(snf.diag.size()) == d, ErrorCode::InternalError,
          "simplex generators are dependent");

  Int count = 1;
  for (const auto& s : snf.diag) count *= s;
  budget.charge(static_cast<std::uint64_t>(std::min<Int>(count, Int(UINT64_MAX / 2)).convert_to<std::uint64_t>()));

  std::vector<IntVec> pts;
  // Enumerate representatives c in prod [0, s_i); lambda = W * diag(1/s) * c.
  IntVec c(d, 0);
  for (;;) {
    if (!std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; })) {
      std::vector<Rat> lam(d, Rat(0));
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
          if (snf.col_ops[i][j] != 0 && c[j] != 0) lam[i] += Rat(snf.col_ops[i][j] * c[j], snf.diag[j]);
        // fractional part in [0,1)
        Int fl = numerator(lam[i]) >= 0 ? numerator(lam[i]) / denominator(lam[i])
                                        : -((-numerator(lam[i]) + denominator(lam[i]) - 1) / denominator(lam[i]));
        lam[i] -= fl;
      }
      bool zero = true;
      std::vector<Rat> xr(n, Rat(0));
      for (int i = 0; i < d; ++i)
        if (lam[i] != 0)
          for (int r = 0; r < n; ++r) xr[r] += Rat(gens[i][r]) * lam[i];
      IntVec xi(n);
      for (int r = 0; r < n; ++r) {
        require(denominator(xr[r]) == 1, ErrorCode::InternalError,
                "parallelepiped point is not integral");
        xi[r] = numerator(xr[r]);
        zero = zero && xi[r] == 0;
      }
      if (!zero) pts.push_back(std::move(xi));
    }
    int k = d - 1;
    while (k >= 0) {
      c[k] += 1;
      if (c[k] < snf.diag[k]) break;
      c[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Lex-pulling triangulation of cone(rays) into simplicial subcones.  All
// faces of the cone lie on coordinate hyperplanes, so facets are located by
// rank tests against x_i = 0.
inline void triangulate_cone(const std::vector<IntVec>& rays, std::vector<int> idx,
                             std::vector<std::vector<int>>& out, const Budget& budget) {
  budget.charge();
  std::vector<IntVec> sub;
  for (int i : idx) sub.push_back(rays[i]);
  int dim = int_rank(sub);
  if (static_cast<int>(idx.size()) == dim) {
    out.push_back(idx);
    return;
  }
  int n = static_cast<int>(rays[0].size());
  int apex = idx[0];
  std::set<std::vector<int>> facets;
  for (int c = 0; c < n; ++c) {
    std::vector<int> face;
    for (int i : idx)
      if (rays[i][c] == 0) face.push_back(i);
    if (face.empty() || static_cast<int>(face.size()) == static_cast<int>(idx.size())) continue;
    std::vector<IntVec> fsub;
    for (int i : face) fsub.push_back(rays[i]);
    if (int_rank(fsub) != dim - 1) continue;
    facets.insert(face);
  }
  for (const auto& face : facets) {
    if (std::find(face.begin(), face.end(), apex) != face.end()) continue;
    std::vector<std::vector<int>> sub_simplices;
    triangulate_cone(rays, face, sub_simplices, budget);
    for (auto s : sub_simplices) {
      s.push_back(apex);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
}

// Full Hilbert basis of {x >= 0 : rows . x = 0}: the unique minimal generating
// set of the semigroup of integer solutions.
struct HilbertResult {
  std::vector<IntVec> basis;        // sorted lexicographically
  std::vector<bool> vertex_flag;    // lies on an extreme ray
};

inline HilbertResult hilbert_basis(const std::vector<IntVec>& eq_rows, int cols,
                                   const Budget& budget = {}) {
  HilbertResult res;
  auto rays = extreme_rays(eq_rows, cols, budget);
  if (rays.empty()) return res;

  std::vector<int> all(rays.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> simplices;
  triangulate_cone(rays, all, simplices, budget);

  std::set<IntVec> cand(rays.begin(), rays.end());
  for (const auto& s : simplices) {
    std::vector<IntVec> gens;
    for (int i : s) gens.push_back(rays[i]);
    for (auto& p : parallelepiped_points(gens, budget)) cand.insert(std::move(p));
  }

  std::vector<IntVec> ordered(cand.begin(), cand.end());
  std::sort(ordered.begin(), ordered.end(), [](const IntVec& a, const IntVec& b) {
    Int la = vec_l1(a), lb = vec_l1(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  std::vector<IntVec> kept;
  for (const auto& h : ordered) {
    budget.charge();
    bool reducible = false;
    for (const auto& g : kept) {
      if (g != h && vec_le(g, h)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(h);
  }
  std::sort(kept.begin(), kept.end());
  std::set<IntVec> rayset(rays.begin(), rays.end());
  res.basis = std::move(kept);
  res.vertex_flag.resize(res.basis.size());
  for (size_t i = 0; i < res.basis.size(); ++i) res.vertex_flag[i] = rayset.count(res.basis[i]) > 0;
  return res;
}

}  // namespace nsurf
