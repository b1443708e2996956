#include "cyclink/valuation.hpp"

#include <algorithm>

namespace cyclink {

namespace {

std::optional<std::size_t> lowest_index(const Poly& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!p[k].is_zero()) return k;
  return std::nullopt;
}

}  // namespace

DiscreteValuation::DiscreteValuation(FieldTower tower, std::string variable)
    : tower_(std::move(tower)), variable_(std::move(variable)) {
  bool found = false;
  for (std::size_t s = 0; s < tower_.num_steps(); ++s)
    if (tower_.step_name(s) == variable_) {
      found = true;
      step_ = s;
    }
  if (!found || tower_.step_kind(step_) != StepKind::Transcendental)
    throw Error(ErrorKind::UnsupportedConfiguration, "'" + variable_ + "' is not a transcendental step");
  for (std::size_t s = step_ + 1; s < tower_.num_steps(); ++s)
    if (tower_.step_kind(s) != StepKind::Transcendental)
      throw Error(ErrorKind::UnsupportedConfiguration,
                  "algebraic step '" + tower_.step_name(s) + "' above the valuation variable");
  FieldTower R = tower_.prefix(step_);
  residue_levels_.push_back(R);
  for (std::size_t s = step_ + 1; s < tower_.num_steps(); ++s) {
    R = R.adjoin_transcendental(tower_.step_name(s));
    residue_levels_.push_back(R);
  }
  residue_ = R;
}

std::optional<long long> DiscreteValuation::value(const FieldElem& e) const { return value_at(tower_.lift(e)); }

std::optional<long long> DiscreteValuation::value_at(const FieldElem& e) const {
  if (e.is_zero()) return std::nullopt;
  const std::size_t L = e.tower().num_steps();
  if (L <= step_) return 0;
  auto [num, den] = e.fraction_parts();
  if (L - 1 == step_) return static_cast<long long>(*lowest_index(num)) - static_cast<long long>(*lowest_index(den));
  auto min_value = [&](const Poly& p) {
    std::optional<long long> m;
    for (const auto& c : p)
      if (auto v = value_at(c)) m = m ? std::min(*m, *v) : *v;
    return *m;
  };
  return min_value(num) - min_value(den);
}

FieldElem DiscreteValuation::residue(const FieldElem& e) const {
  const FieldElem x = tower_.lift(e);
  auto v = value_at(x);
  if (v && *v < 0) throw Error(ErrorKind::UnsupportedConfiguration, "residue of an element of negative value");
  return residue_.lift(residue_at(x));
}

FieldElem DiscreteValuation::residue_at(const FieldElem& e) const {
  const std::size_t L = e.tower().num_steps();
  if (L <= step_) return e;
  const FieldTower& R = residue_levels_[L - step_ - 1];
  if (e.is_zero()) return R.zero();
  auto [num, den] = e.fraction_parts();
  if (L - 1 == step_) {
    std::size_t o1 = *lowest_index(num), o2 = *lowest_index(den);
    if (o1 > o2) return R.zero();
    return R.lift(num[o1] / den[o2]);
  }
  const FieldTower below = e.tower().prefix(L - 1);
  std::optional<long long> m;
  for (const auto& c : den)
    if (auto v = value_at(c)) m = m ? std::min(*m, *v) : *v;
  const FieldElem scale = below.generator(variable_).pow(-*m);
  const FieldTower& Rbelow = L - 1 <= step_ ? R : residue_levels_[L - step_ - 2];
  Poly rn, rd;
  for (const auto& c : num) rn.push_back(Rbelow.lift(residue_at(c * scale)));
  for (const auto& c : den) rd.push_back(Rbelow.lift(residue_at(c * scale)));
  return R.from_fraction(rn, rd);
}

SymbolValuationData analyze_symbol(const DiscreteValuation& v, const SymbolAlgebra& A, const Budget& budget) {
  if (!A.field().is_prefix_of(v.tower()))
    throw Error(ErrorKind::UnsupportedConfiguration, "valuation on a different tower");
  const unsigned p = A.p();
  SymbolValuationData d;
  d.algebra = A;
  d.variable = v.variable();
  d.residue_field = v.residue_field();
  const auto va = v.value(A.alpha());
  if (va && *va < 0)
    throw Error(ErrorKind::UnsupportedConfiguration,
                "v(alpha) = " + std::to_string(*va) + " < 0: ramification in the left slot");
  d.residue_alpha = v.residue(A.alpha());
  const long long vb = *v.value(A.beta());
  if (vb % static_cast<long long>(p) == 0) {
    d.kind = SymbolValuationData::Kind::Unramified;
    d.value_group = ValueGroup{1, 1};
    d.residue_dimension = static_cast<std::size_t>(p) * p;
    FieldElem unit = v.tower().lift(A.beta()) * v.uniformizer().pow(-vb);
    d.residue_symbol = SymbolAlgebra::make(p, d.residue_alpha, v.residue(unit));
    return d;
  }
  d.kind = SymbolValuationData::Kind::TotallyRamified;
  d.value_group = ValueGroup{1, static_cast<long long>(p)};
  d.residue_dimension = p;
  d.residue_preimage = artin_schreier_preimage(d.residue_alpha, budget);
  switch (d.residue_preimage.status) {
    case PreimageResult::Status::Witness:
      d.residue_extension_nontrivial = false;
      break;
    case PreimageResult::Status::CertifiedAbsent:
      d.residue_extension_nontrivial = true;
      break;
    case PreimageResult::Status::Unknown:
      throw Error(ErrorKind::ResidueUndecided,
                  "cannot decide whether " + d.residue_alpha.to_string() + " is in the Artin-Schreier image");
  }
  return d;
}

namespace {

bool same_analysis(const SymbolValuationData& a, const SymbolValuationData& b) {
  if (a.kind != b.kind || !(a.value_group == b.value_group) || a.residue_dimension != b.residue_dimension) return false;
  if (!(a.residue_alpha == b.residue_alpha)) return false;
  if (a.residue_symbol.has_value() != b.residue_symbol.has_value()) return false;
  if (a.residue_symbol && !(*a.residue_symbol == *b.residue_symbol)) return false;
  return a.kind == SymbolValuationData::Kind::Unramified ||
         a.residue_extension_nontrivial == b.residue_extension_nontrivial;
}

std::optional<SymbolValuationData> reanalyze(const SymbolValuationData& d) {
  try {
    return analyze_symbol(DiscreteValuation(d.algebra.field(), d.variable), d.algebra);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool residue_absence_holds(const SymbolValuationData& d) {
  return artin_schreier_preimage_exact(d.residue_alpha).status == PreimageResult::Status::CertifiedAbsent;
}

}  // namespace

bool DivisionCertificate::verify() const {
  if (chain.empty()) return false;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const auto& link = chain[k];
    auto again = reanalyze(link);
    if (!again || !same_analysis(*again, link) || !link.dimension_check()) return false;
    const bool last = k + 1 == chain.size();
    if (!last) {
      if (link.kind != SymbolValuationData::Kind::Unramified || !(*link.residue_symbol == chain[k + 1].algebra))
        return false;
    } else if (link.kind != SymbolValuationData::Kind::TotallyRamified || !link.residue_extension_nontrivial ||
               !residue_absence_holds(link)) {
      return false;
    }
  }
  return true;
}

TriState<DivisionCertificate, ZeroDivisorPair> certify_division(const SymbolAlgebra& A, const Budget& budget) {
  auto zd = find_zero_divisor(A, budget);
  if (is_yes(zd)) return No<ZeroDivisorPair>{std::get<0>(zd).value};
  std::uint64_t used = is_unknown(zd) ? std::get<2>(zd).candidates : std::get<1>(zd).value.candidates;

  const FieldTower& F = A.field();
  for (std::size_t s = F.num_steps(); s-- > 0;) {
    if (F.step_kind(s) != StepKind::Transcendental) continue;
    std::optional<DiscreteValuation> v;
    try {
      v.emplace(F, F.step_name(s));
    } catch (const Error&) {
      continue;
    }
    SymbolValuationData d;
    try {
      d = analyze_symbol(*v, A, budget);
    } catch (const Error&) {
      continue;
    }
    if (d.kind == SymbolValuationData::Kind::TotallyRamified) {
      if (d.residue_extension_nontrivial) return Yes<DivisionCertificate>{DivisionCertificate{{d}}};
      continue;
    }
    auto sub = certify_division(*d.residue_symbol, budget);
    if (is_yes(sub)) {
      DivisionCertificate cert{{d}};
      for (auto& link : std::get<0>(sub).value.chain) cert.chain.push_back(std::move(link));
      return Yes<DivisionCertificate>{std::move(cert)};
    }
  }
  return Unknown{used, "no zero divisor found and no valuation certifies division"};
}

bool NonLinkageCertificate::verify() const {
  if (ramified.algebra.p() != unramified.algebra.p() || !(ramified.algebra.field() == unramified.algebra.field()))
    return false;
  if (ramified.variable != variable || unramified.variable != variable) return false;
  auto r = reanalyze(ramified), u = reanalyze(unramified);
  if (!r || !u || !same_analysis(*r, ramified) || !same_analysis(*u, unramified)) return false;
  if (ramified.kind != SymbolValuationData::Kind::TotallyRamified || !ramified.residue_extension_nontrivial ||
      !residue_absence_holds(ramified))
    return false;
  if (unramified.kind != SymbolValuationData::Kind::Unramified) return false;
  if (!ramified.dimension_check() || !unramified.dimension_check()) return false;
  if (residue_division.chain.empty() || !(residue_division.chain.front().algebra == *unramified.residue_symbol))
    return false;
  return residue_division.verify();
}

std::optional<NonLinkageCertificate> certify_not_inseparably_linked(const SymbolAlgebra& A, const SymbolAlgebra& B,
                                                                   const DiscreteValuation& v,
                                                                   const Budget& budget) {
  if (A.p() != B.p()) return std::nullopt;
  SymbolValuationData dA, dB;
  try {
    dA = analyze_symbol(v, A, budget);
    dB = analyze_symbol(v, B, budget);
  } catch (const Error&) {
    return std::nullopt;
  }
  using Kind = SymbolValuationData::Kind;
  const SymbolValuationData* ram = nullptr;
  const SymbolValuationData* unr = nullptr;
  if (dA.kind == Kind::TotallyRamified && dB.kind == Kind::Unramified) {
    ram = &dA;
    unr = &dB;
  } else if (dB.kind == Kind::TotallyRamified && dA.kind == Kind::Unramified) {
    ram = &dB;
    unr = &dA;
  } else {
    return std::nullopt;
  }
  if (!ram->residue_extension_nontrivial) return std::nullopt;
  auto div = certify_division(*unr->residue_symbol, budget);
  if (!is_yes(div)) return std::nullopt;

  const std::string p = std::to_string(A.p());
  const std::string x = v.variable();
  NonLinkageCertificate cert;
  cert.variable = x;
  cert.ramified = *ram;
  cert.unramified = *unr;
  cert.residue_division = std::get<0>(div).value;
  cert.argument = {
      ram->algebra.to_string() + " is totally ramified for the " + x + "-adic valuation: value group (1/" + p +
          ")Z, residue field extension of degree " + p + " generated by a root of T^" + p + " - T - (" +
          ram->residue_alpha.to_string() + "), separable and nontrivial since " + ram->residue_alpha.to_string() +
          " is not of the form f^" + p + " - f in " + ram->residue_field.to_string(),
      unr->algebra.to_string() + " is unramified: value group Z, residue symbol " + unr->residue_symbol->to_string() +
          " is a division algebra",
      "both algebras are defectless: value group index times residue dimension is " + p + "^2",
      "over any extension L of degree prime to " + p +
          " the value group of L has index prime to " + p +
          " over Z, so the value groups of the two algebras still meet in the value group of L",
      "a common maximal subfield therefore has the value group of L and a residue extension of degree " + p,
      "in the ramified algebra that residue extension is generated by a root of T^" + p + " - T - (" +
          ram->residue_alpha.to_string() + "), which is separable",
      "hence no common subfield is purely inseparable: the algebras are not inseparably linked over L",
  };
  return cert;
}

}  // namespace cyclink
