#pragma once

// Exact arithmetic in towers GF(q)(x1)...[t1]... built from a finite base by
// transcendental steps and separable algebraic steps.
//
// Every element is kept in a canonical form, so equality is structural:
//   finite base     an integer 0..q-1 (base-p digits of a polynomial in w)
//   K(x)            num/den over K[x], coprime, den monic, den == 1 stored empty
//   K[t]/(m)        coordinates over K in the basis 1, t, ..., t^(n-1)
// Trailing zero coefficients are always trimmed, so zero is the empty value
// at every level.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclink/error.hpp"

namespace cyclink {

namespace detail {

struct Level;

struct Raw {
  std::uint32_t c = 0;
  std::vector<Raw> num;
  std::vector<Raw> den;

  bool operator==(const Raw&) const = default;
};

}  // namespace detail

class FieldElem;

/// Dense univariate polynomial, coefficients from low to high degree.
using Poly = std::vector<FieldElem>;

enum class StepKind { Transcendental, Algebraic };

struct TowerStep {
  StepKind kind = StepKind::Transcendental;
  std::string name;
  Poly minpoly;  // algebraic steps only; coefficients over the tower below
};

class FieldTower {
 public:
  FieldTower() = default;

  /// GF(q) with the lexicographically least monic irreducible modulus. For
  /// q = p^k with k > 1 the class of the modulus variable is named "w".
  static FieldTower finite(std::uint64_t q);

  FieldTower adjoin_transcendental(const std::string& name) const;
  /// Throws DegreeDivisibleByP, ReducibleMinimalPolynomial,
  /// InseparableMinimalPolynomial or Unsupported (irreducibility undecidable
  /// here: degree >= 3 over a tower with transcendental steps).
  FieldTower adjoin_algebraic(const std::string& name, const Poly& minpoly) const;

  bool valid() const { return top_ != nullptr; }
  unsigned characteristic() const;
  std::uint64_t base_size() const;
  unsigned base_degree() const;
  std::size_t num_steps() const;
  StepKind step_kind(std::size_t s) const;
  const std::string& step_name(std::size_t s) const;
  /// Degree of an algebraic step; 0 for a transcendental one.
  std::size_t step_degree(std::size_t s) const;
  Poly step_minpoly(std::size_t s) const;
  TowerStep step(std::size_t s) const;
  /// The tower made of the base and the first n steps.
  FieldTower prefix(std::size_t n) const;
  /// True when *this is one of other's prefixes (including other itself).
  bool is_prefix_of(const FieldTower& other) const;

  /// No transcendental steps.
  bool is_finite() const;
  std::optional<std::uint64_t> cardinality() const;
  /// All elements of a finite tower, in a fixed order starting with 0, 1.
  std::vector<FieldElem> elements() const;
  std::vector<std::string> transcendental_names() const;
  /// All generator names including the base generator "w" when present.
  std::vector<std::string> names() const;
  bool has_name(const std::string& name) const;
  std::string fresh_name(const std::string& stem) const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long n) const;
  /// The named generator ("w" or a step name); ParseError when unknown.
  FieldElem generator(const std::string& name) const;
  /// Embeds an element of a prefix tower.
  FieldElem lift(const FieldElem& e) const;
  /// num/den over the tower below the top transcendental step.
  FieldElem from_fraction(const Poly& num, const Poly& den) const;
  /// Coordinates over the tower below the top algebraic step.
  FieldElem from_coordinates(const Poly& coords) const;

  std::string to_string() const;
  bool operator==(const FieldTower& other) const;

  const detail::Level* level() const { return top_.get(); }
  const std::shared_ptr<const detail::Level>& level_ptr() const { return top_; }
  explicit FieldTower(std::shared_ptr<const detail::Level> top) : top_(std::move(top)) {}

 private:
  std::shared_ptr<const detail::Level> top_;
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldTower tower, detail::Raw raw) : tower_(std::move(tower)), raw_(std::move(raw)) {}

  const FieldTower& tower() const { return tower_; }
  const detail::Raw& raw() const { return raw_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  bool operator==(const FieldElem& o) const;

  FieldElem inverse() const;
  FieldElem pow(long long n) const;

  /// e^p.
  FieldElem frobenius() const;
  /// r with r^p = e, when it exists in the tower.
  std::optional<FieldElem> pth_root() const;
  /// r with r^2 = e. Exact for finite towers, transcendental steps and
  /// quadratic algebraic steps; Unsupported otherwise.
  std::optional<FieldElem> sqrt() const;
  /// The Artin-Schreier operator e^p - e.
  FieldElem artin_schreier() const;

  /// Numerator and denominator of an element whose top step is transcendental.
  std::pair<Poly, Poly> fraction_parts() const;
  /// Coordinates of an element whose top step is algebraic.
  Poly coordinates() const;
  /// Step generators occurring in the canonical form.
  std::set<std::string> generators_used() const;

  std::string to_string() const;

 private:
  FieldTower tower_;
  detail::Raw raw_;
};

/// Result of an Artin-Schreier preimage search.
struct PreimageResult {
  enum class Status { Witness, CertifiedAbsent, Unknown };
  Status status = Status::Unknown;
  std::optional<FieldElem> witness;
  std::string reason;
  std::uint64_t candidates = 0;
};

struct Budget;

/// Decides whether alpha = f^p - f for some f in the tower. Finite towers and
/// polynomial numerators over transcendental steps are decided exactly;
/// everything else falls back to a bounded search.
PreimageResult artin_schreier_preimage(const FieldElem& alpha, const Budget& budget);

/// The exact part of artin_schreier_preimage only (no search). Returns
/// Unknown where the bounded search would be needed.
PreimageResult artin_schreier_preimage_exact(const FieldElem& alpha);

FieldTower extend(const FieldTower& tower, const TowerStep& step);

// Univariate polynomial helpers over a tower.
Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
FieldElem poly_eval(const Poly& p, const FieldElem& x);
std::string poly_to_string(const Poly& p, const std::string& var);

}  // namespace cyclink
