#include "cyclink/essdim.hpp"

#include <set>
#include <tuple>

namespace cyclink {

namespace {

FieldTower common_tower(const LinkedPair& pair) {
  FieldTower F = pair.alpha.tower();
  for (const FieldElem* e : {&pair.beta, &pair.gamma}) {
    if (F.is_prefix_of(e->tower()))
      F = e->tower();
    else if (!e->tower().is_prefix_of(F))
      throw Error(ErrorKind::TowerMismatch, "slots of the pair live in unrelated towers");
  }
  return F;
}

bool same_algebra(const SymbolAlgebra& x, const SymbolAlgebra& y) { return x == y; }

}  // namespace

std::pair<SymbolAlgebra, SymbolAlgebra> LinkedPair::algebras() const {
  const FieldTower F = common_tower(*this);
  return {SymbolAlgebra::make(p, F.lift(alpha), F.lift(beta)), SymbolAlgebra::make(p, F.lift(alpha), F.lift(gamma))};
}

std::string LinkedPair::to_string() const {
  return "(" + alpha.to_string() + "; " + beta.to_string() + ", " + gamma.to_string() + ")";
}

DescentData descent_generators(const LinkedPair& pair) {
  const FieldTower F = common_tower(pair);
  std::set<std::string> used;
  for (const FieldElem* e : {&pair.alpha, &pair.beta, &pair.gamma}) {
    auto g = F.lift(*e).generators_used();
    used.insert(g.begin(), g.end());
  }
  DescentData out;
  for (std::size_t s = 0; s < F.num_steps(); ++s) {
    if (!used.count(F.step_name(s))) continue;
    out.generators.push_back(F.step_name(s));
    if (F.step_kind(s) == StepKind::Transcendental) ++out.bound;
  }
  return out;
}

std::string EssDimClass::label_name() const {
  switch (label) {
    case Label::Zero: return "Zero";
    case Label::Two: return "Two";
    case Label::Three: return "Three";
    case Label::Unknown: break;
  }
  return "Unknown(" + std::to_string(lower) + ", " + std::to_string(upper) + ")";
}

bool EssDimClass::verify(const LinkedPair& pair) const {
  const auto [A, B] = pair.algebras();
  auto split_ok = [](const std::optional<ZeroDivisorPair>& z, const SymbolAlgebra& X) {
    return z && same_algebra(z->u.algebra(), X) && z->verify();
  };
  auto nonsplit_ok = [&] {
    if (!nonsplit || nonsplit->chain.empty() || !nonsplit->verify()) return false;
    const SymbolAlgebra& X = nonsplit_which == 'A' ? A : B;
    return (nonsplit_which == 'A' || nonsplit_which == 'B') && same_algebra(nonsplit->chain.front().algebra, X);
  };
  auto linkage_ok = [&] {
    return linkage && same_algebra(linkage->base, A) && linkage->gamma == A.field().lift(pair.gamma) &&
           linkage->verify();
  };
  auto nonlinkage_ok = [&] {
    if (!nonlinkage || !nonlinkage->verify()) return false;
    const auto& r = nonlinkage->ramified.algebra;
    const auto& u = nonlinkage->unramified.algebra;
    return (same_algebra(r, A) && same_algebra(u, B)) || (same_algebra(r, B) && same_algebra(u, A));
  };

  // attached evidence must verify whatever the label
  if (split_a && !split_ok(split_a, A)) return false;
  if (split_b && !split_ok(split_b, B)) return false;
  if (nonsplit && !nonsplit_ok()) return false;
  if (linkage && !linkage_ok()) return false;
  if (nonlinkage && !nonlinkage_ok()) return false;

  switch (label) {
    case Label::Zero: return split_a && split_b && lower == 0 && upper == 0;
    case Label::Three: return nonlinkage && lower == 3 && upper == 3;
    case Label::Two: return linkage && nonsplit && lower == 2 && upper == 2;
    case Label::Unknown:
      if (lower != 0 && lower != 2) return false;
      if (upper != 2 && upper != 3) return false;
      if (lower > upper || (lower == 2 && upper == 2)) return false;
      if (lower == 2 && !nonsplit) return false;
      if (upper == 2 && !linkage) return false;
      return true;
  }
  return false;
}

EssDimClass classify_essdim_p(const LinkedPair& pair, const Budget& budget) {
  const auto [A, B] = pair.algebras();
  const FieldTower& F = A.field();
  EssDimClass out;

  // (1) both split
  auto split = [&](const SymbolAlgebra& X) -> std::optional<ZeroDivisorPair> {
    auto r = find_zero_divisor(X, budget);
    if (is_yes(r)) return std::get<0>(r).value;
    return std::nullopt;
  };
  out.split_a = split(A);
  if (out.split_a) {
    out.split_b = split(B);
    if (out.split_b) {
      out.label = EssDimClass::Label::Zero;
      out.lower = out.upper = 0;
      out.notes.push_back("both algebras split: zero divisors " + out.split_a->route + ", " + out.split_b->route);
      return out;
    }
  }

  // (2) a valuation separating the two algebras
  for (std::size_t s = F.num_steps(); s-- > 0;) {
    if (F.step_kind(s) != StepKind::Transcendental) continue;
    std::optional<DiscreteValuation> v;
    try {
      v.emplace(F, F.step_name(s));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedConfiguration) throw;
      continue;
    }
    if (auto cert = certify_not_inseparably_linked(A, B, *v, budget)) {
      out.nonlinkage = *cert;
      out.label = EssDimClass::Label::Three;
      out.lower = out.upper = 3;
      out.notes.push_back("no inseparable linkage over any prime-to-p extension (" + F.step_name(s) + "-adic)");
      return out;
    }
  }

  // (3) linkage witness plus one division algebra
  if (pair.p == 2 || pair.p == 3) {
    auto t = reduced_norm_witness(A, F.lift(pair.gamma), budget);
    if (is_yes(t)) {
      try {
        out.linkage = make_inseparably_linked(A.alpha(), A.beta(), F.lift(pair.gamma), std::get<0>(t).value);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoSolutionInBudget) throw;
        out.notes.push_back(std::string("linkage solver: ") + e.what());
      }
    } else {
      out.notes.push_back("no reduced norm witness for gamma within budget");
    }
  } else {
    out.notes.push_back("constructive linkage is available for p = 2, 3 only");
  }
  for (const auto& [X, which, known_split] : {std::tuple{A, 'A', out.split_a.has_value()},
                                             std::tuple{B, 'B', out.split_b.has_value()}}) {
    if (known_split) continue;
    auto d = certify_division(X, budget);
    if (is_yes(d)) {
      out.nonsplit = std::get<0>(d).value;
      out.nonsplit_which = which;
      break;
    }
    if (is_no(d)) (which == 'A' ? out.split_a : out.split_b) = std::get<1>(d).value;
  }

  if (out.split_a && out.split_b) {
    out.label = EssDimClass::Label::Zero;
    out.lower = out.upper = 0;
    out.linkage.reset();
    out.notes.push_back("both algebras split");
    return out;
  }
  out.lower = out.nonsplit ? 2 : 0;
  out.upper = out.linkage ? 2 : 3;
  if (out.lower == 2 && out.upper == 2) {
    out.label = EssDimClass::Label::Two;
    out.notes.push_back(std::string("inseparably linked over ") +
                        (out.linkage->extension_degree() == 1 ? "F" : "a quadratic extension") + "; " +
                        (out.nonsplit_which == 'A' ? A : B).to_string() + " is division");
  } else {
    out.label = EssDimClass::Label::Unknown;
  }
  return out;
}

}  // namespace cyclink
