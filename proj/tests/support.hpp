#pragma once

#include <random>

#include "cyclink/algebra.hpp"
#include "cyclink/search.hpp"

namespace cyclink::testing {

inline AlgebraElement random_algebra_element(const SymbolAlgebra& A, std::mt19937_64& rng, unsigned degree = 1) {
  std::vector<FieldElem> c;
  for (std::size_t k = 0; k < A.dimension(); ++k) c.push_back(random_element(A.field(), rng, degree));
  return A.from_coeffs(c);
}

inline SymbolAlgebra random_symbol(const FieldTower& F, std::mt19937_64& rng, unsigned degree = 1) {
  return SymbolAlgebra::make(F.characteristic(), random_element(F, rng, degree), random_nonzero(F, rng, degree));
}

}  // namespace cyclink::testing
