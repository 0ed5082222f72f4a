#include "dlg/linalg.hpp"

#include <algorithm>

namespace dlg {

Echelon row_reduce(Matrix m, int cols) {
  Echelon out;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Q inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j)
      if (sgn(m[r][j])) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Q f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (sgn(m[r][j])) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(const Matrix& m, int cols) { return static_cast<int>(row_reduce(m, cols).pivots.size()); }

Matrix kernel_basis(const Matrix& m, int cols) {
  const Echelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dlg
