#pragma once

// x-adic valuations attached to transcendental tower steps, symbol analysis
// (unramified vs totally ramified), and the division / non-linkage
// certificates built from them.

#include <optional>
#include <string>
#include <vector>

#include "cyclink/algebra.hpp"

namespace cyclink {

/// The subgroup generator * Z of Q; generator is 1 or 1/p.
struct ValueGroup {
  long long num = 1;
  long long den = 1;

  long long index() const { return den; }
  std::string to_string() const { return den == 1 ? "Z" : "(1/" + std::to_string(den) + ")Z"; }
  bool operator==(const ValueGroup&) const = default;
};

/// The valuation with v(x) = 1 for a transcendental step x, trivial on the
/// tower below x and extended to the transcendental steps above x by the
/// Gauss valuation (minimum over coefficients).
class DiscreteValuation {
 public:
  /// Throws UnsupportedConfiguration unless `variable` names a
  /// transcendental step with only transcendental steps above it.
  DiscreteValuation(FieldTower tower, std::string variable);

  const FieldTower& tower() const { return tower_; }
  const std::string& variable() const { return variable_; }
  /// v(e); nullopt stands for +infinity (e = 0).
  std::optional<long long> value(const FieldElem& e) const;
  /// Residue field: the tower below x with the steps above x re-adjoined.
  const FieldTower& residue_field() const { return residue_; }
  /// Image of an element of non-negative value.
  FieldElem residue(const FieldElem& e) const;
  FieldElem uniformizer() const { return tower_.generator(variable_); }

 private:
  std::optional<long long> value_at(const FieldElem& e) const;
  FieldElem residue_at(const FieldElem& e) const;

  FieldTower tower_;
  std::string variable_;
  std::size_t step_ = 0;
  FieldTower residue_;
  std::vector<FieldTower> residue_levels_;  // residue tower of prefix(step_ + 1 + k)
};

struct SymbolValuationData {
  enum class Kind { Unramified, TotallyRamified };

  SymbolAlgebra algebra;
  std::string variable;
  Kind kind = Kind::Unramified;
  ValueGroup value_group;
  std::size_t residue_dimension = 0;
  FieldTower residue_field;
  FieldElem residue_alpha;
  /// Unramified: the residue symbol [alpha-bar, (beta x^-v(beta))-bar).
  std::optional<SymbolAlgebra> residue_symbol;
  /// TotallyRamified: alpha-bar not in the Artin-Schreier image of the residue field.
  bool residue_extension_nontrivial = false;
  PreimageResult residue_preimage;

  bool dimension_check() const {
    const auto p = static_cast<std::size_t>(algebra.p());
    return static_cast<std::size_t>(value_group.index()) * residue_dimension == p * p;
  }
  std::string kind_name() const { return kind == Kind::Unramified ? "Unramified" : "TotallyRamified"; }
};

/// Throws UnsupportedConfiguration (v(alpha) < 0, or the valuation does not
/// fit the tower) and ResidueUndecided (residue Artin-Schreier question open).
SymbolValuationData analyze_symbol(const DiscreteValuation& v, const SymbolAlgebra& A, const Budget& budget = {});

/// A chain of analyses: unramified links whose residue symbols feed the next
/// link, ending in a totally ramified link with nontrivial residue extension.
struct DivisionCertificate {
  std::vector<SymbolValuationData> chain;

  /// Re-derives every link and re-checks the final Artin-Schreier absence
  /// with the exact procedure.
  bool verify() const;
};

TriState<DivisionCertificate, ZeroDivisorPair> certify_division(const SymbolAlgebra& A, const Budget& budget);

struct NonLinkageCertificate {
  std::string variable;
  SymbolValuationData ramified;
  SymbolValuationData unramified;
  DivisionCertificate residue_division;
  /// The argument recorded with the certificate, one step per line.
  std::vector<std::string> argument;

  bool verify() const;
};

/// A certificate exists when one symbol is totally ramified with nontrivial
/// residue extension and the other is unramified with a division residue symbol.
std::optional<NonLinkageCertificate> certify_not_inseparably_linked(const SymbolAlgebra& A, const SymbolAlgebra& B,
                                                                   const DiscreteValuation& v,
                                                                   const Budget& budget = {});

}  // namespace cyclink
