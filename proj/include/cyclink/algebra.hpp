#pragma once

// The cyclic symbol algebra [alpha, beta)_{p,F}: generators i, j with
// i^p - i = alpha, j^p = beta, j i j^-1 = i + 1, stored on the basis i^a j^b.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclink/field.hpp"
#include "cyclink/linalg.hpp"
#include "cyclink/search.hpp"

namespace cyclink {

class AlgebraElement;

namespace detail {
struct AlgebraData;
}

class SymbolAlgebra {
 public:
  SymbolAlgebra() = default;

  /// Throws BetaZero, CharacteristicMismatch.
  static SymbolAlgebra make(unsigned p, const FieldElem& alpha, const FieldElem& beta);

  unsigned p() const;
  std::size_t dimension() const { return static_cast<std::size_t>(p()) * p(); }
  const FieldTower& field() const;
  const FieldElem& alpha() const;
  const FieldElem& beta() const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(const FieldElem& c) const;
  AlgebraElement i() const;
  AlgebraElement j() const;
  /// The basis monomial i^a j^b.
  AlgebraElement basis(std::size_t a, std::size_t b) const;
  /// Coordinates indexed a + p*b.
  AlgebraElement from_coeffs(std::vector<FieldElem> coeffs) const;
  /// f(i) for a polynomial f over F of degree < p.
  AlgebraElement from_i_poly(const Poly& f) const;

  /// The same symbol over an extension tower of the base field.
  SymbolAlgebra over(const FieldTower& extension) const;
  AlgebraElement lift(const AlgebraElement& x) const;

  /// Same p, field and slots.
  bool operator==(const SymbolAlgebra& o) const;
  /// "[alpha, beta; p)".
  std::string to_string() const;

  const detail::AlgebraData* data() const { return data_.get(); }

 private:
  std::shared_ptr<const detail::AlgebraData> data_;
  friend class AlgebraElement;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(SymbolAlgebra algebra, std::vector<FieldElem> coeffs);

  const SymbolAlgebra& algebra() const { return algebra_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  const FieldElem& coeff(std::size_t a, std::size_t b) const { return coeffs_[a + algebra_.p() * b]; }
  /// X_b with x = sum_b X_b(i) j^b.
  Poly i_part(std::size_t b) const;

  bool is_zero() const;
  bool is_central() const;
  /// The scalar c when x = c.
  std::optional<FieldElem> central_value() const;

  AlgebraElement operator-() const;
  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  /// Throws AlgebraMismatch for elements of different algebras.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const FieldElem& c, const AlgebraElement& x);
  AlgebraElement pow(unsigned long long n) const;
  bool operator==(const AlgebraElement& o) const;

  /// Terms ordered by j-degree then i-degree, e.g. "a + j + i*j".
  std::string to_string() const;

 private:
  SymbolAlgebra algebra_;
  std::vector<FieldElem> coeffs_;
};

/// Reduced characteristic coefficients s1..sp:
/// y^p + s1 y^(p-1) + ... + sp = 0. Reduced trace -s1, reduced norm -sp.
struct CharCoeffs {
  std::vector<FieldElem> s;

  FieldElem trace() const { return -s.front(); }
  FieldElem norm() const { return -s.back(); }
  bool operator==(const CharCoeffs&) const = default;
};

/// Matrix of y -> x*y on the basis i^a j^b (columns are images).
Matrix left_regular_matrix(const AlgebraElement& x);

/// Characteristic polynomial of the p^2 x p^2 left-regular matrix (Berkowitz),
/// then the coefficient-wise p-th root of its p-th-power structure.
CharCoeffs char_coeffs(const AlgebraElement& x);

/// Same coefficients computed from the p x p matrix of x acting on A as a
/// free right F[i]-module with basis 1, j, ..., j^(p-1). Much cheaper; used
/// inside searches and as an independent cross-check.
CharCoeffs char_coeffs_cyclic(const AlgebraElement& x);

/// x^p + s1 x^(p-1) + ... + sp == 0.
bool satisfies_char_identity(const AlgebraElement& x, const CharCoeffs& cc);

/// x^-1 read off the reduced characteristic polynomial; nullopt when N(x) = 0.
std::optional<AlgebraElement> inverse(const AlgebraElement& x);

/// s1..sp of (x0 + x1 i + ... + x_{p-1} i^{p-1}) * t as elements of
/// F(x0, ..., x_{p-1}); they are polynomials in the x's.
struct SymbolicCharCoeffs {
  FieldTower ring;
  std::vector<std::string> vars;
  std::vector<FieldElem> s;
};
SymbolicCharCoeffs char_coeffs_symbolic(const SymbolAlgebra& A, const AlgebraElement& t);

/// Minimal and maximal total degree in `vars` over the terms of a polynomial
/// element (denominators must be free of vars); nullopt for zero.
std::optional<std::pair<int, int>> degree_range(const FieldElem& e, const std::vector<std::string>& vars);

/// N_{F[i]/F}(f) = f(i) f(i+1) ... f(i+p-1), computed in F[y]/(y^p - y - alpha).
FieldElem norm_Fi(const SymbolAlgebra& A, const Poly& f);

/// Images of the target generators inside the source algebra.
struct IsoWitness {
  SymbolAlgebra source;
  SymbolAlgebra target;
  AlgebraElement i_image;
  AlgebraElement j_image;

  /// i'^p - i' = target alpha, j'^p = target beta, j' i' = (i' + 1) j'.
  bool verify() const;
};

/// Substitutes i -> i_img, j -> j_img into y (an element written on i^a j^b).
AlgebraElement substitute(const AlgebraElement& y, const AlgebraElement& i_img, const AlgebraElement& j_img);

/// first: A -> B, second: B -> C; returns A -> C.
IsoWitness compose(const IsoWitness& first, const IsoWitness& second);

struct Rewrite {
  SymbolAlgebra target;
  IsoWitness witness;
};

/// [alpha + f^p - f, beta) with i' = i + f, j' = j.
Rewrite rewrite_translate_alpha(const SymbolAlgebra& A, const FieldElem& f);
/// [alpha, N(f) beta) with i' = i, j' = f(i) j. Throws SingularScale.
Rewrite rewrite_scale_beta(const SymbolAlgebra& A, const Poly& f);
/// [-alpha, beta^-1) with i' = -i, j' = beta^-1 j^(p-1).
Rewrite rewrite_invert(const SymbolAlgebra& A);

struct ZeroDivisorPair {
  AlgebraElement u;
  AlgebraElement v;
  std::string route;

  bool verify() const { return !u.is_zero() && !v.is_zero() && (u * v).is_zero(); }
};

/// Exhaustive search space exhausted without a zero divisor (finite towers only).
struct NoneFound {
  std::uint64_t candidates = 0;
};

/// Exact over finite towers, bounded search otherwise.
TriState<ZeroDivisorPair, NoneFound> find_zero_divisor(const SymbolAlgebra& A, const Budget& budget);

}  // namespace cyclink
