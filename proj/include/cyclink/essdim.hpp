#pragma once

// Classification of pairs of cyclically linked symbols ([alpha, beta), [alpha, gamma))
// into essential p-dimension 0, 2 or 3, with the evidence behind each label.

#include <optional>
#include <string>
#include <vector>

#include "cyclink/linkage.hpp"

namespace cyclink {

struct LinkedPair {
  unsigned p = 0;
  FieldElem alpha;
  FieldElem beta;
  FieldElem gamma;

  /// ([alpha, beta), [alpha, gamma)) over the largest of the three towers.
  std::pair<SymbolAlgebra, SymbolAlgebra> algebras() const;
  std::string to_string() const;
};

struct DescentData {
  std::vector<std::string> generators;  // tower order
  std::size_t bound = 0;                // transcendental generators among them
};

/// Tower steps occurring in the canonical forms of alpha, beta, gamma.
DescentData descent_generators(const LinkedPair& pair);

struct EssDimClass {
  enum class Label { Zero, Two, Three, Unknown };

  Label label = Label::Unknown;
  int lower = 0;
  int upper = 3;

  std::optional<ZeroDivisorPair> split_a;
  std::optional<ZeroDivisorPair> split_b;
  std::optional<LinkageWitness> linkage;
  /// Division certificate for one of the two algebras; nonsplit_which is 'A' or 'B'.
  std::optional<DivisionCertificate> nonsplit;
  char nonsplit_which = 0;
  std::optional<NonLinkageCertificate> nonlinkage;
  std::vector<std::string> notes;

  std::string label_name() const;
  /// Re-runs every attached verifier and checks the label against the evidence.
  bool verify(const LinkedPair& pair) const;
};

/// Zero: both algebras split. Three: valuation non-linkage certificate.
/// Two: linkage witness and a division certificate for one algebra.
/// Otherwise Unknown with bounds lower in {0, 2}, upper in {2, 3}.
EssDimClass classify_essdim_p(const LinkedPair& pair, const Budget& budget);

}  // namespace cyclink
