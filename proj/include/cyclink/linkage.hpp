#pragma once

// Reduced-norm witnesses, the constructive inseparable-linkage procedure for
// p = 2, 3, and verification of linkage witnesses.

#include <optional>
#include <string>
#include <vector>

#include "cyclink/algebra.hpp"
#include "cyclink/valuation.hpp"

namespace cyclink {

/// alpha dlog(beta) ^ dlog(gamma), kept symbolically.
struct DifferentialSymbolClass {
  unsigned p = 0;
  FieldElem alpha;
  FieldElem beta;
  FieldElem gamma;

  std::string to_string() const;
  /// Equality of the formal representations (not of cohomology classes).
  bool same_representation(const DifferentialSymbolClass& o) const;
};

/// t with reduced norm gamma. Finite towers are decided at once (every
/// gamma is a p-th power there); otherwise a bounded search. Throws GammaZero.
TriState<AlgebraElement, NoEvidence> reduced_norm_witness(const SymbolAlgebra& A, const FieldElem& gamma,
                                                          const Budget& budget);

/// Yes(t) with reduced norm gamma in [alpha, beta); No only with a valuation
/// certificate that [alpha, beta) and [alpha, gamma) never become
/// inseparably linked.
TriState<AlgebraElement, NonLinkageCertificate> h3_class_trivial(const DifferentialSymbolClass& c,
                                                                 const Budget& budget);

struct LinkageWitness {
  SymbolAlgebra base;       // [alpha, beta) over F
  FieldTower extension;     // K: F itself or a quadratic step over F
  SymbolAlgebra algebra;    // [alpha, beta) over K
  FieldElem gamma;
  Poly f;                   // degree < p, coefficients in K
  AlgebraElement t;         // norm witness, lifted to K
  AlgebraElement z;         // f(i) t
  FieldElem slot;           // N(f) gamma
  FieldElem delta;
  AlgebraElement delta_generator;

  std::size_t extension_degree() const;
  /// z noncentral, z^p = slot = N(f) gamma, s_1 .. s_{p-1} of z vanish,
  /// delta_generator^p - delta_generator = delta, z i' z^-1 = i' + 1.
  bool verify() const;
};

/// Solves s_1(f t) = ... = s_{p-1}(f t) = 0 for f = x0 + x1 i + ... and
/// returns the resulting witness. Throws NormMismatch, UnsupportedPrime,
/// GammaZero, NoSolutionInBudget.
LinkageWitness make_inseparably_linked(const FieldElem& alpha, const FieldElem& beta, const FieldElem& gamma,
                                       const AlgebraElement& t);

struct DeltaPresentation {
  FieldElem delta;
  AlgebraElement i_prime;
};

/// i' with z i' - i' z = z (so z i' z^-1 = i' + 1) and delta = i'^p - i'.
/// Throws NoSolution when z is central or z^p is not a nonzero scalar.
DeltaPresentation construct_delta(const AlgebraElement& z);

struct InseparableLinkEvidence {
  FieldElem slot;
  AlgebraElement z_a;
  AlgebraElement z_b;

  bool verify() const;
};

struct InseparableLinkResult {
  std::optional<InseparableLinkEvidence> evidence;
  std::uint64_t candidates = 0;

  explicit operator bool() const { return evidence.has_value(); }
};

/// Looks for noncentral z_A in A and z_B in B with z^p = slot. Hints are
/// tried first. Throws SlotHasPthRoot, GammaZero (slot = 0).
InseparableLinkResult verify_inseparable_linkage(const SymbolAlgebra& A, const SymbolAlgebra& B, const FieldElem& slot,
                                                 const Budget& budget,
                                                 const std::vector<AlgebraElement>& hints = {});

struct CyclicLinkEvidence {
  FieldElem value;  // common w^p - w
  AlgebraElement w_a;
  AlgebraElement w_b;

  bool verify() const;
};

TriState<CyclicLinkEvidence, NoEvidence> cyclic_linkage_check(const SymbolAlgebra& A, const SymbolAlgebra& B,
                                                              const Budget& budget);

}  // namespace cyclink
