#include "cyclink/linkage.hpp"

namespace cyclink {

namespace {

std::vector<FieldElem> search_values(const FieldTower& F, const Budget& budget) {
  return small_elements(F, budget.degree, 64);
}

// c with c^p = e, if any.
std::optional<FieldElem> root(const FieldElem& e) { return e.pth_root(); }

}  // namespace

// ---------------- classes ----------------

std::string DifferentialSymbolClass::to_string() const {
  auto wrap = [](const FieldElem& e) {
    std::string s = e.to_string();
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(alpha) + " dlog(" + beta.to_string() + ") ^ dlog(" + gamma.to_string() + ")";
}

bool DifferentialSymbolClass::same_representation(const DifferentialSymbolClass& o) const {
  return p == o.p && alpha == o.alpha && beta == o.beta && gamma == o.gamma;
}

// ---------------- reduced norms ----------------

TriState<AlgebraElement, NoEvidence> reduced_norm_witness(const SymbolAlgebra& A, const FieldElem& gamma,
                                                          const Budget& budget) {
  const FieldTower& F = A.field();
  const unsigned p = A.p();
  const FieldElem g = F.lift(gamma);
  if (g.is_zero()) throw Error(ErrorKind::GammaZero, "gamma = 0");
  std::uint64_t used = 0;

  auto confirmed = [&](const AlgebraElement& t) { return char_coeffs(t).norm() == g; };

  // scalars: N(c) = c^p; powers of j: N(c j^b) = c^p beta^b
  FieldElem beta_power = F.one();
  for (unsigned b = 0; b < p; ++b) {
    ++used;
    if (auto c = root(g / beta_power)) {
      AlgebraElement t = *c * A.basis(0, b);
      if (confirmed(t)) return Yes<AlgebraElement>{t};
    }
    beta_power = beta_power * A.beta();
  }

  std::optional<AlgebraElement> found;
  auto try_scaled = [&](const AlgebraElement& y, const FieldElem& n) {
    if (n.is_zero()) return false;
    auto c = root(g / n);
    if (!c) return false;
    AlgebraElement t = *c * y;
    if (!confirmed(t)) return false;
    found = t;
    return true;
  };
  auto try_coords = [&](const std::vector<FieldElem>& coords) {
    AlgebraElement y = A.from_coeffs(coords);
    return try_scaled(y, char_coeffs_cyclic(y).norm());
  };
  const auto values = search_values(F, budget);
  const std::uint64_t limit = budget.max_candidates;

  if (for_each_sparse_tuple(A.dimension(), values, limit / 2, used, try_coords)) return Yes<AlgebraElement>{*found};

  // t = u(i) j^b with N(t) = N(u) beta^b
  beta_power = F.one();
  for (unsigned b = 0; b < p && !found; ++b) {
    const FieldElem bp = beta_power;
    for_each_sparse_tuple(p, values, used + (limit - limit / 2) / p, used, [&](const std::vector<FieldElem>& u) {
      return try_scaled(A.from_i_poly(u) * A.basis(0, b), norm_Fi(A, u) * bp);
    });
    beta_power = beta_power * A.beta();
  }
  if (found) return Yes<AlgebraElement>{*found};

  if (for_each_random_tuple(A.dimension(), values, budget.random_candidates, budget.seed, used, try_coords))
    return Yes<AlgebraElement>{*found};
  return Unknown{used, "no element of reduced norm " + g.to_string() + " among the searched candidates"};
}

TriState<AlgebraElement, NonLinkageCertificate> h3_class_trivial(const DifferentialSymbolClass& c,
                                                                 const Budget& budget) {
  if (c.gamma.is_zero()) throw Error(ErrorKind::GammaZero, "gamma = 0");
  SymbolAlgebra A = SymbolAlgebra::make(c.p, c.alpha, c.beta);
  SymbolAlgebra B = SymbolAlgebra::make(c.p, c.alpha, c.gamma);
  FieldTower F = A.field();
  if (!(B.field() == F)) {
    F = B.field();
    A = A.over(F);
  } else {
    B = B.over(F);
  }
  // A non-linkage certificate rules out a norm witness, and is cheap to look for.
  for (std::size_t s = F.num_steps(); s-- > 0;) {
    if (F.step_kind(s) != StepKind::Transcendental) continue;
    try {
      DiscreteValuation v(F, F.step_name(s));
      if (auto cert = certify_not_inseparably_linked(A, B, v, budget)) return No<NonLinkageCertificate>{*cert};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedConfiguration) throw;
    }
  }
  auto t = reduced_norm_witness(A, c.gamma, budget);
  if (is_yes(t)) return Yes<AlgebraElement>{std::get<0>(t).value};
  return std::get<2>(t);
}

// ---------------- the linkage construction ----------------

std::size_t LinkageWitness::extension_degree() const {
  std::size_t d = 1;
  for (std::size_t s = base.field().num_steps(); s < extension.num_steps(); ++s) d *= extension.step_degree(s);
  return d;
}

bool LinkageWitness::verify() const {
  const unsigned p = base.p();
  if (!base.field().is_prefix_of(extension) || !(algebra == base.over(extension))) return false;
  const std::size_t deg = extension_degree();
  if (deg == 0 || deg > 2 || deg % p == 0) return false;
  for (std::size_t s = base.field().num_steps(); s < extension.num_steps(); ++s)
    if (extension.step_kind(s) != StepKind::Algebraic) return false;
  const FieldElem g = extension.lift(gamma);
  if (g.is_zero() || !(char_coeffs_cyclic(t).norm() == g)) return false;
  if (!(z == algebra.from_i_poly(f) * t) || z.is_central()) return false;
  if (slot.is_zero() || !(slot == norm_Fi(algebra, f) * g)) return false;
  if (!(z.pow(p) == algebra.scalar(slot))) return false;
  auto cc = char_coeffs_cyclic(z);
  for (unsigned k = 0; k + 1 < p; ++k)
    if (!cc.s[k].is_zero()) return false;
  const AlgebraElement& ip = delta_generator;
  if (!(ip.pow(p) - ip == algebra.scalar(delta))) return false;
  return z * ip - ip * z == z;
}

DeltaPresentation construct_delta(const AlgebraElement& z) {
  const SymbolAlgebra& A = z.algebra();
  if (z.is_central()) throw Error(ErrorKind::NoSolution, "z is central");
  auto zp = z.pow(A.p()).central_value();
  if (!zp || zp->is_zero()) throw Error(ErrorKind::NoSolution, "z^p is not a nonzero scalar");
  const std::size_t n = A.dimension();
  Matrix m(n, Vector(n, A.field().zero()));
  for (std::size_t col = 0; col < n; ++col) {
    AlgebraElement e = A.basis(col % A.p(), col / A.p());
    AlgebraElement img = z * e - e * z;
    for (std::size_t row = 0; row < n; ++row) m[row][col] = img.coeffs()[row];
  }
  auto w = solve(m, z.coeffs(), A.field());
  if (!w) throw Error(ErrorKind::NoSolution, "z w - w z = z has no solution");
  AlgebraElement ip = A.from_coeffs(*w);
  auto delta = (ip.pow(A.p()) - ip).central_value();
  if (!delta) throw Error(ErrorKind::NoSolution, "i'^p - i' is not central");
  return DeltaPresentation{*delta, ip};
}

namespace {

// The solution f of s_1(f t) = ... = s_{p-1}(f t) = 0 for this t, skipping
// degenerate ones; nullopt when every candidate is degenerate.
std::optional<LinkageWitness> solve_linkage(const SymbolAlgebra& A, const FieldElem& g, const AlgebraElement& t) {
  const unsigned p = A.p();
  const FieldTower& F = A.field();
  // s_1(f t) is the linear form sum_m x_m s_1(i^m t)
  Vector ell;
  for (unsigned m = 0; m < p; ++m) ell.push_back(char_coeffs_cyclic(A.basis(m, 0) * t).s[0]);
  const std::vector<Vector> kernel = kernel_basis({ell}, p, F);

  auto attempt = [&](const FieldTower& K, const Poly& f) -> std::optional<LinkageWitness> {
    SymbolAlgebra AK = K == F ? A : A.over(K);
    AlgebraElement tK = AK.lift(t);
    const FieldElem n = norm_Fi(AK, f);
    if (n.is_zero()) return std::nullopt;  // f(i) is a zero divisor of F[i]
    AlgebraElement z = AK.from_i_poly(f) * tK;
    if (z.is_central()) return std::nullopt;
    const FieldElem slot = n * K.lift(g);
    if (!(z.pow(p) == AK.scalar(slot))) throw Error(ErrorKind::Internal, "z^p differs from N(f) gamma");
    DeltaPresentation d;
    try {
      d = construct_delta(z);
    } catch (const Error& e) {
      // z^p = c^p with z - c nilpotent of low rank: conjugation by z cannot shift anything by 1
      if (e.kind() != ErrorKind::NoSolution) throw;
      return std::nullopt;
    }
    LinkageWitness w{A, K, AK, g, poly_trim(f), tK, z, slot, d.delta, d.i_prime};
    if (!w.verify()) throw Error(ErrorKind::Internal, "linkage witness failed verification");
    return w;
  };
  auto combine = [&](const FieldTower& K, const std::vector<std::pair<FieldElem, const Vector*>>& terms) {
    Poly f(p, K.zero());
    for (const auto& [lambda, v] : terms)
      for (unsigned m = 0; m < p; ++m) f[m] += lambda * K.lift((*v)[m]);
    return f;
  };

  if (p == 2) {
    // F_2-combinations of the kernel basis, numbered so that the first basis vector comes first
    for (unsigned n = 1; n < (1u << kernel.size()); ++n) {
      std::vector<std::pair<FieldElem, const Vector*>> terms;
      for (std::size_t k = 0; k < kernel.size(); ++k)
        if (n >> k & 1u) terms.emplace_back(F.one(), &kernel[k]);
      if (auto w = attempt(F, combine(F, terms))) return w;
    }
    return std::nullopt;
  }

  // p = 3: restrict s_2(f t) to a plane of solutions of s_1(f t) = 0 and solve
  // the binary quadratic A l^2 + B l m + C m^2 = 0.
  auto s2 = [&](const Vector& v) { return char_coeffs_cyclic(A.from_i_poly(v) * t).s[1]; };
  for (std::size_t a = 0; a < kernel.size(); ++a)
    for (std::size_t b = a + 1; b < kernel.size(); ++b) {
      const Vector& u = kernel[a];
      const Vector& v = kernel[b];
      Vector uv(p, F.zero());
      for (unsigned m = 0; m < p; ++m) uv[m] = u[m] + v[m];
      const FieldElem qa = s2(u), qc = s2(v), qb = s2(uv) - qa - qc;
      std::vector<std::pair<FieldElem, FieldElem>> rational;
      if (qa.is_zero()) rational.emplace_back(F.one(), F.zero());
      if (qc.is_zero()) rational.emplace_back(F.zero(), F.one());
      if (qa.is_zero() && !qb.is_zero()) rational.emplace_back(-qc, qb);  // (l, m) = (-C, B)
      if (qc.is_zero() && !qa.is_zero()) rational.emplace_back(-qb, qa);  // (l, m) = (-B, A)
      if (qa.is_zero() && qb.is_zero() && qc.is_zero())
        for (const auto& l : small_elements(F, 1, 8)) rational.emplace_back(l, F.one());
      for (auto& [l, m] : rational)
        if (auto w = attempt(F, combine(F, {{l, &u}, {m, &v}}))) return w;
      if (qa.is_zero()) continue;
      const FieldElem two_a = F.from_int(2) * qa;
      const FieldElem disc = qb * qb - F.from_int(4) * qa * qc;
      if (disc.is_zero()) {
        if (auto w = attempt(F, combine(F, {{-qb / two_a, &u}, {F.one(), &v}}))) return w;
        continue;
      }
      if (auto r = disc.sqrt()) {
        for (const FieldElem& sign : {F.one(), -F.one()})
          if (auto w = attempt(F, combine(F, {{(-qb + sign * *r) / two_a, &u}, {F.one(), &v}}))) return w;
        continue;
      }
      // adjoin a square root of the discriminant: a prime-to-3 extension of degree 2
      const FieldTower K = F.adjoin_algebraic(F.fresh_name("s"), {-disc, F.zero(), F.one()});
      const FieldElem root2 = K.generator(K.step_name(K.num_steps() - 1));
      for (const FieldElem& sign : {K.one(), -K.one()}) {
        const FieldElem lambda = (K.lift(-qb) + sign * root2) / K.lift(two_a);
        if (auto w = attempt(K, combine(K, {{lambda, &u}, {K.one(), &v}}))) return w;
      }
    }
  return std::nullopt;
}

}  // namespace

LinkageWitness make_inseparably_linked(const FieldElem& alpha, const FieldElem& beta, const FieldElem& gamma,
                                       const AlgebraElement& t) {
  const SymbolAlgebra& A = t.algebra();
  const unsigned p = A.p();
  if (p != 2 && p != 3) throw Error(ErrorKind::UnsupportedPrime, "constructive linkage only for p = 2, 3");
  const FieldTower& F = A.field();
  if (!(F.lift(alpha) == A.alpha()) || !(F.lift(beta) == A.beta()))
    throw Error(ErrorKind::AlgebraMismatch, "t does not lie in [alpha, beta)");
  const FieldElem g = F.lift(gamma);
  if (g.is_zero()) throw Error(ErrorKind::GammaZero, "gamma = 0");
  if (!(char_coeffs_cyclic(t).norm() == g))
    throw Error(ErrorKind::NormMismatch, "reduced norm of t is " + char_coeffs_cyclic(t).norm().to_string());

  if (auto w = solve_linkage(A, g, t)) return *w;
  // Every solution is degenerate (t central, or F[i] split and the solution
  // space inside the zero divisors). Retry with other norm witnesses of gamma:
  // conjugates y t y^-1 and products t [y, j].
  const AlgebraElement j_inv = *inverse(A.j());
  std::uint64_t used = 0;
  std::optional<LinkageWitness> found;
  for_each_sparse_tuple(A.dimension(), small_elements(F, 1, 16), 4096, used, [&](const std::vector<FieldElem>& c) {
    AlgebraElement y = A.from_coeffs(c);
    if (y.is_central()) return false;
    auto y_inv = inverse(y);
    if (!y_inv) return false;
    if (!t.is_central()) found = solve_linkage(A, g, y * t * *y_inv);
    if (!found) found = solve_linkage(A, g, t * (y * A.j() * *y_inv * j_inv));
    return found.has_value();
  });
  if (found) return *found;
  throw Error(ErrorKind::NoSolutionInBudget,
              "every solution of s_1(f t) = ... = s_{p-1}(f t) = 0 is degenerate for each norm witness tried");
}

// ---------------- inseparable linkage ----------------

bool InseparableLinkEvidence::verify() const {
  if (slot.is_zero() || slot.pth_root()) return false;
  for (const AlgebraElement* z : {&z_a, &z_b}) {
    if (z->is_central()) return false;
    if (!(z->pow(z->algebra().p()) == z->algebra().scalar(slot))) return false;
  }
  return true;
}

namespace {

std::optional<AlgebraElement> find_pth_root_of_slot(const SymbolAlgebra& X, const FieldElem& slot, const Budget& budget,
                                                    const std::vector<AlgebraElement>& hints, std::uint64_t& used) {
  const unsigned p = X.p();
  const FieldTower& F = X.field();
  auto good = [&](const AlgebraElement& z) { return !z.is_central() && z.pow(p) == X.scalar(slot); };
  for (const auto& h : hints) {
    ++used;
    if (h.algebra() == X && good(h)) return h;
  }
  std::optional<AlgebraElement> found;
  // y with y^p = n central: try c y (when slot / n = c^p) and c + y (when slot - n = c^p)
  auto try_y = [&](const AlgebraElement& y, const FieldElem& n) {
    if (n.is_zero()) return false;
    if (auto c = root(slot / n)) {
      AlgebraElement z = *c * y;
      if (good(z)) {
        found = z;
        return true;
      }
    }
    if (auto c = root(slot - n)) {
      AlgebraElement z = X.scalar(*c) + y;
      if (good(z)) {
        found = z;
        return true;
      }
    }
    return false;
  };
  FieldElem beta_power = X.beta();
  for (unsigned b = 1; b < p; ++b) {
    ++used;
    if (try_y(X.basis(0, b), beta_power)) return found;
    beta_power = beta_power * X.beta();
  }
  const auto values = search_values(F, budget);
  const std::uint64_t limit = budget.max_candidates;
  beta_power = X.beta();
  for (unsigned b = 1; b < p; ++b) {
    const FieldElem bp = beta_power;
    if (for_each_sparse_tuple(p, values, used + limit / (2 * (p - 1)), used, [&](const std::vector<FieldElem>& g) {
          return try_y(X.from_i_poly(g) * X.basis(0, b), norm_Fi(X, g) * bp);
        }))
      return found;
    beta_power = beta_power * X.beta();
  }
  auto try_coords = [&](const std::vector<FieldElem>& coords) {
    AlgebraElement y = X.from_coeffs(coords);
    if (y.is_central()) return false;
    auto cc = char_coeffs_cyclic(y);
    for (unsigned k = 0; k + 1 < p; ++k)
      if (!cc.s[k].is_zero()) return false;
    return try_y(y, cc.norm());
  };
  if (for_each_sparse_tuple(X.dimension(), values, used + limit / 2, used, try_coords)) return found;
  if (for_each_random_tuple(X.dimension(), values, budget.random_candidates, budget.seed, used, try_coords))
    return found;
  return std::nullopt;
}

}  // namespace

InseparableLinkResult verify_inseparable_linkage(const SymbolAlgebra& A, const SymbolAlgebra& B, const FieldElem& slot,
                                                 const Budget& budget, const std::vector<AlgebraElement>& hints) {
  if (A.p() != B.p() || !(A.field() == B.field()))
    throw Error(ErrorKind::AlgebraMismatch, "symbols over different fields");
  const FieldElem s = A.field().lift(slot);
  if (s.pth_root())
    throw Error(ErrorKind::SlotHasPthRoot, s.to_string() + " is a p-th power: F(slot^(1/p)) is not of degree p");
  InseparableLinkResult out;
  auto za = find_pth_root_of_slot(A, s, budget, hints, out.candidates);
  if (!za) return out;
  auto zb = find_pth_root_of_slot(B, s, budget, hints, out.candidates);
  if (!zb) return out;
  InseparableLinkEvidence ev{s, *za, *zb};
  if (ev.verify()) out.evidence = ev;
  return out;
}

// ---------------- cyclic linkage ----------------

bool CyclicLinkEvidence::verify() const {
  for (const AlgebraElement* w : {&w_a, &w_b}) {
    if (w->is_central()) return false;
    if (!(w->pow(w->algebra().p()) - *w == w->algebra().scalar(value))) return false;
  }
  return true;
}

namespace {

struct ArtinSchreierElement {
  AlgebraElement w;
  FieldElem value;
};

// w = y / l with w^p - w central, when the reduced characteristic polynomial
// of y is y^p - mu y + s_p and mu = l^(p-1) has a root l in F.
std::optional<ArtinSchreierElement> as_element(const AlgebraElement& y) {
  const unsigned p = y.algebra().p();
  if (y.is_central()) return std::nullopt;
  auto cc = char_coeffs_cyclic(y);
  for (unsigned k = 0; k + 2 < p; ++k)
    if (!cc.s[k].is_zero()) return std::nullopt;
  const FieldElem mu = -cc.s[p - 2];
  if (mu.is_zero()) return std::nullopt;
  std::optional<FieldElem> l;
  if (p == 2)
    l = mu;
  else if (p == 3)
    l = mu.sqrt();
  else if (mu.is_one())
    l = mu;
  if (!l) return std::nullopt;
  AlgebraElement w = l->inverse() * y;
  FieldElem value = -cc.s[p - 1] / l->pow(p);
  if (!(w.pow(p) - w == y.algebra().scalar(value))) return std::nullopt;
  return ArtinSchreierElement{w, value};
}

}  // namespace

TriState<CyclicLinkEvidence, NoEvidence> cyclic_linkage_check(const SymbolAlgebra& A, const SymbolAlgebra& B,
                                                              const Budget& budget) {
  if (A.p() != B.p() || !(A.field() == B.field()))
    throw Error(ErrorKind::AlgebraMismatch, "symbols over different fields");
  std::uint64_t used = 0;
  auto pre = artin_schreier_preimage(A.alpha() - B.alpha(), budget);
  used += pre.candidates;
  if (pre.status == PreimageResult::Status::Witness) {
    CyclicLinkEvidence ev{A.alpha(), A.i(), B.i() + B.scalar(*pre.witness)};
    if (ev.verify()) return Yes<CyclicLinkEvidence>{ev};
  }
  std::vector<ArtinSchreierElement> in_a{{A.i(), A.alpha()}}, in_b{{B.i(), B.alpha()}};
  const auto values = search_values(A.field(), budget);
  const std::uint64_t half = budget.max_candidates / 2;
  for (auto [X, list] : {std::pair{&A, &in_a}, std::pair{&B, &in_b}}) {
    for_each_sparse_tuple(X->dimension(), values, used + half, used, [&](const std::vector<FieldElem>& c) {
      if (auto e = as_element(X->from_coeffs(c))) list->push_back(*e);
      return list->size() >= 32;
    });
  }
  for (const auto& ea : in_a)
    for (const auto& eb : in_b) {
      auto r = artin_schreier_preimage_exact(ea.value - eb.value);
      if (r.status != PreimageResult::Status::Witness) continue;
      CyclicLinkEvidence ev{ea.value, ea.w, eb.w + B.scalar(*r.witness)};
      if (ev.verify()) return Yes<CyclicLinkEvidence>{ev};
    }
  return Unknown{used, "no common Artin-Schreier element among the searched candidates"};
}

}  // namespace cyclink
