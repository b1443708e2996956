#pragma once

// Exact Gaussian elimination over a field tower.

#include <optional>
#include <vector>

#include "cyclink/field.hpp"

namespace cyclink {

using Vector = std::vector<FieldElem>;
using Matrix = std::vector<Vector>;

struct Rref {
  Matrix rows;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

Rref rref(Matrix m);

/// Basis of {x : m x = 0}; one vector per free column, in column order.
std::vector<Vector> kernel_basis(const Matrix& m, std::size_t cols, const FieldTower& field);

/// Some x with m x = b (free variables set to zero), if the system is consistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b, const FieldTower& field);

}  // namespace cyclink
