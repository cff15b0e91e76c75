#include "lfforge/smith.h"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lf {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
  return r;
}

// row_i -= q * row_k
void row_axpy(IntMatrix& m, int i, int k, std::int64_t q) {
  for (size_t c = 0; c < m[i].size(); ++c)
    if (m[k][c]) m[i][c] = checked_sub(m[i][c], checked_mul(q, m[k][c]));
}

void col_axpy(IntMatrix& m, int j, int k, std::int64_t q) {
  for (auto& row : m)
    if (row[k]) row[j] = checked_sub(row[j], checked_mul(q, row[k]));
}

} // namespace

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream s;
  bool first = true;
  if (free_rank > 0) {
    s << "Z";
    if (free_rank > 1) s << "^" << free_rank;
    first = false;
  }
  for (auto t : torsion) {
    if (!first) s << " + ";
    s << "Z/" << t;
    first = false;
  }
  return s.str();
}

FinAbGroup FinAbGroup::with_cyclic(int rank, std::int64_t n) {
  n = std::llabs(n);
  if (n == 0) return {rank + 1, {}};
  if (n == 1) return {rank, {}};
  return {rank, {n}};
}

SmithForm smith_normal_form(IntMatrix m, int cols) {
  const int R = static_cast<int>(m.size());
  for (auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
  SmithForm out;
  out.rows = R;
  out.cols = cols;
  int t = 0;
  while (t < R && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    int pi = -1, pj = -1;
    std::int64_t best = 0;
    for (int i = t; i < R; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] && (pi < 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < R; ++i) {
        if (!m[i][t]) continue;
        row_axpy(m, i, t, m[i][t] / m[t][t]);
        if (m[i][t]) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (!m[t][j]) continue;
        col_axpy(m, j, t, m[t][j] / m[t][t]);
        if (m[t][j]) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold in any entry the pivot does not divide.
      for (int i = t + 1; i < R && clean; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (int c = t; c < cols; ++c) m[t][c] = checked_sub(m[t][c], -m[i][c]);
            clean = false;
            break;
          }
    }
    out.diagonal.push_back(std::llabs(m[t][t]));
    ++t;
  }
  return out;
}

FinAbGroup cokernel_of_rows(const IntMatrix& rows, int n) {
  FinAbGroup g;
  if (rows.empty()) return FinAbGroup::free(n);
  auto s = smith_normal_form(rows, n);
  g.free_rank = n - static_cast<int>(s.diagonal.size());
  for (auto d : s.diagonal)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

int kernel_rank_of_rows(const IntMatrix& rows, int n) {
  if (rows.empty()) return 0;
  auto s = smith_normal_form(rows, n);
  return static_cast<int>(rows.size()) - static_cast<int>(s.diagonal.size());
}

} // namespace lf
