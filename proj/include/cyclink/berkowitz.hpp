#pragma once

// Division-free characteristic polynomial (Berkowitz). Works over any
// commutative ring, including non-domains such as F[y]/(y^p - y - a).

#include <cstddef>
#include <vector>

namespace cyclink {

/// Ring adaptor for types with +, -, * and explicit zero/one values.
template <class T>
struct ValueRing {
  T zero_value;
  T one_value;
  T zero() const { return zero_value; }
  T one() const { return one_value; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
};

/// Coefficients [1, c1, ..., cn] of det(X*I - a) = X^n + c1 X^(n-1) + ... + cn.
template <class T, class Ring>
std::vector<T> characteristic_polynomial(const std::vector<std::vector<T>>& a, const Ring& ring) {
  const std::size_t n = a.size();
  std::vector<T> vect{ring.one()};
  if (n == 0) return vect;
  vect.push_back(ring.sub(ring.zero(), a[0][0]));
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C
    std::vector<T> t;
    t.reserve(r + 2);
    t.push_back(ring.one());
    t.push_back(ring.sub(ring.zero(), a[r][r]));
    std::vector<T> v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = a[k][r];
    for (std::size_t step = 0; step < r; ++step) {
      T dot = ring.zero();
      for (std::size_t k = 0; k < r; ++k) dot = ring.add(dot, ring.mul(a[r][k], v[k]));
      t.push_back(ring.sub(ring.zero(), dot));
      if (step + 1 == r) break;
      std::vector<T> next(r, ring.zero());
      for (std::size_t row = 0; row < r; ++row)
        for (std::size_t k = 0; k < r; ++k) next[row] = ring.add(next[row], ring.mul(a[row][k], v[k]));
      v = std::move(next);
    }
    std::vector<T> out(r + 2, ring.zero());
    for (std::size_t row = 0; row < r + 2; ++row)
      for (std::size_t k = 0; k <= row && k < vect.size(); ++k)
        out[row] = ring.add(out[row], ring.mul(t[row - k], vect[k]));
    vect = std::move(out);
  }
  return vect;
}

}  // namespace cyclink
