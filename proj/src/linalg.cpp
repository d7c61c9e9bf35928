#include "maclab/linalg.hpp"

#include <utility>

namespace maclab {

namespace {

// Reduced row echelon form; fills pivot columns.
int rref(Matrix& m, std::vector<std::size_t>& pivots) {
  pivots.clear();
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int row_reduce(Matrix& m) {
  std::vector<std::size_t> piv;
  return rref(m, piv);
}

int rank(Matrix m) { return row_reduce(m); }

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> piv;
  const int r = rref(a, piv);
  if (r != static_cast<int>(n) || piv.back() >= n) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<std::vector<Scalar>> nullspace(Matrix a, std::size_t cols) {
  std::vector<std::size_t> piv;
  const int r = a.empty() ? 0 : rref(a, piv);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = Scalar(1);
    for (int i = 0; i < r; ++i) v[piv[static_cast<std::size_t>(i)]] = -a[static_cast<std::size_t>(i)][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace maclab
