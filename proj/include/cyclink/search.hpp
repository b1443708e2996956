#pragma once

// Bounded search plumbing shared by the decision procedures: explicit
// budgets, tri-state results, and deterministic candidate enumeration.

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cyclink/field.hpp"

namespace cyclink {

struct Budget {
  /// Maximal total degree in the transcendental generators of a candidate
  /// coordinate.
  unsigned degree = 1;
  /// Hard cap on candidates examined by one search.
  std::uint64_t max_candidates = 20000;
  /// Seeded random candidates tried after the deterministic sweep.
  std::uint64_t random_candidates = 64;
  std::uint64_t seed = 0;
};

struct SearchStats {
  std::uint64_t candidates = 0;
};

template <class T>
struct Yes {
  T value;
};

template <class T>
struct No {
  T value;
};

struct Unknown {
  std::uint64_t candidates = 0;
  std::string reason;
};

template <class Y, class N>
using TriState = std::variant<Yes<Y>, No<N>, Unknown>;

struct NoEvidence {};

template <class Y, class N>
bool is_yes(const TriState<Y, N>& t) {
  return t.index() == 0;
}
template <class Y, class N>
bool is_no(const TriState<Y, N>& t) {
  return t.index() == 1;
}
template <class Y, class N>
bool is_unknown(const TriState<Y, N>& t) {
  return t.index() == 2;
}

/// Small elements of a tower, zero first. For finite towers this is the
/// whole field (up to cap). Otherwise: GF(p)-combinations of monomials
/// (products of algebraic/base generator powers and transcendental powers of
/// total degree <= degree), in increasing order of their digit encoding.
std::vector<FieldElem> small_elements(const FieldTower& tower, unsigned degree, std::size_t cap);

/// Visits tuples of length n drawn from `values` (index 0 must be the zero
/// element) in order of increasing support size. Stops when visit returns
/// true or after `limit` visits; returns true iff visit accepted a tuple.
template <class Visit>
bool for_each_sparse_tuple(std::size_t n, const std::vector<FieldElem>& values, std::uint64_t limit,
                           std::uint64_t& used, Visit&& visit) {
  if (values.size() < 2 || n == 0) return false;
  const FieldElem zero = values[0];
  for (std::size_t weight = 1; weight <= n; ++weight) {
    std::vector<std::size_t> pos(weight);
    for (std::size_t k = 0; k < weight; ++k) pos[k] = k;
    while (true) {
      std::vector<std::size_t> digit(weight, 1);
      while (true) {
        if (used >= limit) return false;
        ++used;
        std::vector<FieldElem> tuple(n, zero);
        for (std::size_t k = 0; k < weight; ++k) tuple[pos[k]] = values[digit[k]];
        if (visit(tuple)) return true;
        std::size_t d = 0;
        while (d < weight && ++digit[d] == values.size()) digit[d++] = 1;
        if (d == weight) break;
      }
      // next combination of positions
      std::size_t k = weight;
      while (k > 0 && pos[k - 1] == n - weight + k - 1) --k;
      if (k == 0) break;
      ++pos[k - 1];
      for (std::size_t m = k; m < weight; ++m) pos[m] = pos[m - 1] + 1;
    }
  }
  return false;
}

/// Seeded random tuples from `values`.
template <class Visit>
bool for_each_random_tuple(std::size_t n, const std::vector<FieldElem>& values, std::uint64_t count,
                           std::uint64_t seed, std::uint64_t& used, Visit&& visit) {
  if (values.empty()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  for (std::uint64_t c = 0; c < count; ++c) {
    ++used;
    std::vector<FieldElem> tuple;
    tuple.reserve(n);
    for (std::size_t k = 0; k < n; ++k) tuple.push_back(values[pick(rng)]);
    if (visit(tuple)) return true;
  }
  return false;
}

/// Random element for property tests: numerators and denominators of degree
/// <= degree in each transcendental step, uniform coefficients elsewhere.
FieldElem random_element(const FieldTower& tower, std::mt19937_64& rng, unsigned degree = 2);
FieldElem random_nonzero(const FieldTower& tower, std::mt19937_64& rng, unsigned degree = 2);

}  // namespace cyclink
