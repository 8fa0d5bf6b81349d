#pragma once

// Independent brute-force oracles used to pin expected values; these must not
// share code paths with the enumeration machinery they check.

#include <optional>
#include <vector>

#include "nsurf/normal.hpp"
#include "nsurf/types.hpp"

namespace oracle {

using nsurf::Int;
using nsurf::IntVec;
using nsurf::Rat;

struct Rref {
  std::vector<std::vector<Rat>> rows;  // reduced rows
  std::vector<int> pivot_col;
  std::vector<int> free_col;
};

inline Rref rref(const std::vector<IntVec>& m, int cols) {
  Rref r;
  for (const auto& row : m) {
    std::vector<Rat> rr(cols);
    for (int i = 0; i < cols; ++i) rr[i] = Rat(row[i]);
    r.rows.push_back(rr);
  }
  size_t row = 0;
  for (int col = 0; col < cols && row < r.rows.size(); ++col) {
    size_t piv = row;
    while (piv < r.rows.size() && r.rows[piv][col] == 0) ++piv;
    if (piv == r.rows.size()) continue;
    std::swap(r.rows[row], r.rows[piv]);
    Rat d = r.rows[row][col];
    for (int c = 0; c < cols; ++c) r.rows[row][c] /= d;
    for (size_t k = 0; k < r.rows.size(); ++k) {
      if (k == row || r.rows[k][col] == 0) continue;
      Rat f = r.rows[k][col];
      for (int c = 0; c < cols; ++c) r.rows[k][c] -= f * r.rows[row][c];
    }
    r.pivot_col.push_back(col);
    ++row;
  }
  r.rows.resize(row);
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivot_col) is_pivot[c] = true;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) r.free_col.push_back(c);
  return r;
}

// All integer solutions of rows.x = 0 with 0 <= x_i <= bound.
inline std::vector<IntVec> lattice_scan(const std::vector<IntVec>& rows, int cols, int bound) {
  Rref r = rref(rows, cols);
  std::vector<IntVec> out;
  std::vector<Int> free_vals(r.free_col.size(), 0);
  auto emit = [&]() {
    IntVec v(cols, 0);
    for (size_t i = 0; i < r.free_col.size(); ++i) v[r.free_col[i]] = free_vals[i];
    for (size_t p = 0; p < r.pivot_col.size(); ++p) {
      Rat val = 0;
      for (size_t i = 0; i < r.free_col.size(); ++i)
        val -= r.rows[p][r.free_col[i]] * Rat(free_vals[i]);
      if (denominator(val) != 1) return;
      Int iv = numerator(val);
      if (iv < 0 || iv > bound) return;
      v[r.pivot_col[p]] = iv;
    }
    out.push_back(v);
  };
  size_t k = r.free_col.size();
  std::vector<int> idx(k, 0);
  for (;;) {
    for (size_t i = 0; i < k; ++i) free_vals[i] = idx[i];
    emit();
    size_t j = 0;
    while (j < k) {
      if (++idx[j] <= bound) break;
      idx[j] = 0;
      ++j;
    }
    if (j == k) break;
    if (k == 0) break;
  }
  if (k == 0) {
    // only the zero vector; emit() already ran once above
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_nonneg_sum_of_two(const IntVec& v, const std::vector<IntVec>& sols) {
  for (const auto& a : sols) {
    if (nsurf::vec_is_zero(a) || a == v) continue;
    if (!nsurf::vec_le(a, v)) continue;
    IntVec b(v.size());
    for (size_t i = 0; i < v.size(); ++i) b[i] = v[i] - a[i];
    // b = v - a is automatically a solution of the homogeneous system
    if (!nsurf::vec_is_zero(b)) return true;
  }
  return false;
}

// Greedy decomposability of v over basis by exhaustive search.
inline bool decomposes_over(const IntVec& v, const std::vector<IntVec>& basis) {
  if (nsurf::vec_is_zero(v)) return true;
  for (const auto& b : basis) {
    if (nsurf::vec_is_zero(b) || !nsurf::vec_le(b, v)) continue;
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] - b[i];
    if (decomposes_over(r, basis)) return true;
  }
  return false;
}

}  // namespace oracle
