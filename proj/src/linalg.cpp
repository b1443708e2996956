#include "cyclink/linalg.hpp"

namespace cyclink {

Rref rref(Matrix m) {
  Rref out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const FieldElem inv = m[row][c].inverse();
    for (auto& e : m[row]) e = e * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const FieldElem factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[row][k].is_zero()) m[r][k] -= factor * m[row][k];
    }
    out.pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::vector<Vector> kernel_basis(const Matrix& m, std::size_t cols, const FieldTower& field) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b, const FieldTower& field) {
  if (m.empty()) return std::nullopt;
  const std::size_t cols = m[0].size();
  Matrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  Rref r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == cols) return std::nullopt;
  Vector x(cols, field.zero());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.rows[k][cols];
  return x;
}

}  // namespace cyclink
