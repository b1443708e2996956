#include "cyclink/algebra.hpp"

#include <algorithm>

#include "cyclink/berkowitz.hpp"

namespace cyclink {

namespace detail {

struct AlgebraData {
  unsigned p = 0;
  FieldTower field;
  FieldElem alpha;
  FieldElem beta;
  // shift[c][a][k]: coefficient of i^k in (i + c)^a
  std::vector<std::vector<std::vector<FieldElem>>> shift;
};

}  // namespace detail

namespace {

using Cyc = std::vector<FieldElem>;  // element of F[y]/(y^p - y - alpha), length p

long long binom(unsigned n, unsigned k) {
  long long r = 1;
  for (unsigned t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

bool cyc_is_zero(const Cyc& x) {
  return std::all_of(x.begin(), x.end(), [](const FieldElem& e) { return e.is_zero(); });
}

Cyc cyc_mul(const detail::AlgebraData& D, const Cyc& x, const Cyc& y) {
  const unsigned p = D.p;
  std::vector<FieldElem> prod(2 * p - 1, D.field.zero());
  for (unsigned a = 0; a < p; ++a) {
    if (x[a].is_zero()) continue;
    for (unsigned b = 0; b < p; ++b)
      if (!y[b].is_zero()) prod[a + b] += x[a] * y[b];
  }
  // y^d = y^(d-p+1) + alpha y^(d-p)
  for (unsigned d = 2 * p - 2; d >= p; --d) {
    if (prod[d].is_zero()) continue;
    prod[d - p + 1] += prod[d];
    prod[d - p] += D.alpha * prod[d];
  }
  prod.resize(p);
  return prod;
}

Cyc cyc_shift(const detail::AlgebraData& D, const Cyc& x, unsigned c) {
  c %= D.p;
  if (c == 0) return x;
  Cyc out(D.p, D.field.zero());
  for (unsigned a = 0; a < D.p; ++a) {
    if (x[a].is_zero()) continue;
    for (unsigned k = 0; k <= a; ++k) out[k] += x[a] * D.shift[c][a][k];
  }
  return out;
}

struct CycRing {
  const detail::AlgebraData* D;
  Cyc zero() const { return Cyc(D->p, D->field.zero()); }
  Cyc one() const {
    Cyc r = zero();
    r[0] = D->field.one();
    return r;
  }
  Cyc add(const Cyc& a, const Cyc& b) const {
    Cyc r = a;
    for (unsigned k = 0; k < D->p; ++k) r[k] += b[k];
    return r;
  }
  Cyc sub(const Cyc& a, const Cyc& b) const {
    Cyc r = a;
    for (unsigned k = 0; k < D->p; ++k) r[k] -= b[k];
    return r;
  }
  Cyc mul(const Cyc& a, const Cyc& b) const { return cyc_mul(*D, a, b); }
};

Cyc slice(const std::vector<FieldElem>& c, unsigned p, unsigned b) {
  return Cyc(c.begin() + static_cast<std::ptrdiff_t>(b * p), c.begin() + static_cast<std::ptrdiff_t>((b + 1) * p));
}

void require_same(const SymbolAlgebra& a, const SymbolAlgebra& b) {
  if (a.data() != b.data() && !(a == b)) throw Error(ErrorKind::AlgebraMismatch, a.to_string() + " vs " + b.to_string());
}

Cyc poly_to_cyc(const SymbolAlgebra& A, const Poly& f) {
  if (f.size() > A.p()) throw Error(ErrorKind::Unsupported, "polynomial in i of degree >= p");
  Cyc c(A.p(), A.field().zero());
  for (std::size_t k = 0; k < f.size(); ++k) c[k] = A.field().lift(f[k]);
  return c;
}

FieldElem cyc_norm(const detail::AlgebraData& D, const Cyc& g) {
  Cyc acc = g;
  for (unsigned c = 1; c < D.p; ++c) acc = cyc_mul(D, acc, cyc_shift(D, g, c));
  for (unsigned k = 1; k < D.p; ++k)
    if (!acc[k].is_zero()) throw Error(ErrorKind::Internal, "norm from F[i] is not central");
  return acc[0];
}

}  // namespace

// ---------------- SymbolAlgebra ----------------

SymbolAlgebra SymbolAlgebra::make(unsigned p, const FieldElem& alpha, const FieldElem& beta) {
  if (!alpha.tower().valid() || !beta.tower().valid()) throw Error(ErrorKind::TowerMismatch, "slot without field");
  FieldTower F = alpha.tower().is_prefix_of(beta.tower()) ? beta.tower() : alpha.tower();
  if (!alpha.tower().is_prefix_of(F) || !beta.tower().is_prefix_of(F))
    throw Error(ErrorKind::TowerMismatch, "slots live in unrelated towers");
  if (F.characteristic() != p)
    throw Error(ErrorKind::CharacteristicMismatch,
                "symbol degree " + std::to_string(p) + " over a field of characteristic " +
                    std::to_string(F.characteristic()));
  if (beta.is_zero()) throw Error(ErrorKind::BetaZero, "right slot is zero");
  auto D = std::make_shared<detail::AlgebraData>();
  D->p = p;
  D->field = F;
  D->alpha = F.lift(alpha);
  D->beta = F.lift(beta);
  D->shift.assign(p, std::vector<std::vector<FieldElem>>(p, std::vector<FieldElem>(p, F.zero())));
  for (unsigned c = 0; c < p; ++c)
    for (unsigned a = 0; a < p; ++a)
      for (unsigned k = 0; k <= a; ++k) {
        long long v = binom(a, k) % p;
        for (unsigned e = 0; e < a - k; ++e) v = v * c % p;
        D->shift[c][a][k] = F.from_int(v);
      }
  SymbolAlgebra A;
  A.data_ = std::move(D);
  return A;
}

unsigned SymbolAlgebra::p() const { return data_->p; }
const FieldTower& SymbolAlgebra::field() const { return data_->field; }
const FieldElem& SymbolAlgebra::alpha() const { return data_->alpha; }
const FieldElem& SymbolAlgebra::beta() const { return data_->beta; }

AlgebraElement SymbolAlgebra::zero() const { return AlgebraElement(*this, std::vector<FieldElem>(dimension(), field().zero())); }
AlgebraElement SymbolAlgebra::one() const { return scalar(field().one()); }

AlgebraElement SymbolAlgebra::scalar(const FieldElem& c) const {
  std::vector<FieldElem> v(dimension(), field().zero());
  v[0] = field().lift(c);
  return AlgebraElement(*this, std::move(v));
}

AlgebraElement SymbolAlgebra::basis(std::size_t a, std::size_t b) const {
  std::vector<FieldElem> v(dimension(), field().zero());
  v[a + p() * b] = field().one();
  return AlgebraElement(*this, std::move(v));
}

AlgebraElement SymbolAlgebra::i() const { return basis(1 % p(), 0); }
AlgebraElement SymbolAlgebra::j() const { return basis(0, 1 % p()); }

AlgebraElement SymbolAlgebra::from_coeffs(std::vector<FieldElem> coeffs) const {
  if (coeffs.size() != dimension()) throw Error(ErrorKind::AlgebraMismatch, "wrong number of coordinates");
  for (auto& c : coeffs) c = field().lift(c);
  return AlgebraElement(*this, std::move(coeffs));
}

AlgebraElement SymbolAlgebra::from_i_poly(const Poly& f) const {
  std::vector<FieldElem> v(dimension(), field().zero());
  Cyc c = poly_to_cyc(*this, f);
  for (unsigned k = 0; k < p(); ++k) v[k] = c[k];
  return AlgebraElement(*this, std::move(v));
}

SymbolAlgebra SymbolAlgebra::over(const FieldTower& extension) const {
  if (!field().is_prefix_of(extension)) throw Error(ErrorKind::TowerMismatch, "not an extension of the base field");
  return make(p(), extension.lift(alpha()), extension.lift(beta()));
}

AlgebraElement SymbolAlgebra::lift(const AlgebraElement& x) const {
  if (x.algebra().p() != p() || !x.algebra().field().is_prefix_of(field()) || !(x.algebra().over(field()) == *this))
    throw Error(ErrorKind::AlgebraMismatch, "cannot lift " + x.algebra().to_string() + " into " + to_string());
  return from_coeffs(x.coeffs());
}

bool SymbolAlgebra::operator==(const SymbolAlgebra& o) const {
  if (data_ == o.data_) return true;
  if (!data_ || !o.data_) return false;
  return p() == o.p() && field() == o.field() && alpha() == o.alpha() && beta() == o.beta();
}

std::string SymbolAlgebra::to_string() const {
  return "[" + alpha().to_string() + ", " + beta().to_string() + "; " + std::to_string(p()) + ")";
}

// ---------------- AlgebraElement ----------------

AlgebraElement::AlgebraElement(SymbolAlgebra algebra, std::vector<FieldElem> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {}

Poly AlgebraElement::i_part(std::size_t b) const { return slice(coeffs_, algebra_.p(), static_cast<unsigned>(b)); }

bool AlgebraElement::is_zero() const { return cyc_is_zero(coeffs_); }

bool AlgebraElement::is_central() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const FieldElem& e) { return e.is_zero(); });
}

std::optional<FieldElem> AlgebraElement::central_value() const {
  if (!is_central()) return std::nullopt;
  return coeffs_[0];
}

AlgebraElement AlgebraElement::operator-() const {
  auto c = coeffs_;
  for (auto& e : c) e = -e;
  return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x.algebra_, y.algebra_);
  auto c = x.coeffs_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += y.coeffs_[k];
  return AlgebraElement(x.algebra_, std::move(c));
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return x + (-y); }

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x.algebra_, y.algebra_);
  const auto& D = *x.algebra_.data();
  const unsigned p = D.p;
  std::vector<Cyc> X(p), Y(p);
  for (unsigned b = 0; b < p; ++b) {
    X[b] = slice(x.coeffs_, p, b);
    Y[b] = slice(y.coeffs_, p, b);
  }
  std::vector<Cyc> out(p, Cyc(p, D.field.zero()));
  // X_b(i) j^b Y_d(i) j^d = X_b(i) Y_d(i + b) j^(b+d)
  for (unsigned d = 0; d < p; ++d) {
    if (cyc_is_zero(Y[d])) continue;
    for (unsigned b = 0; b < p; ++b) {
      if (cyc_is_zero(X[b])) continue;
      Cyc prod = cyc_mul(D, X[b], cyc_shift(D, Y[d], b));
      unsigned m = b + d;
      if (m >= p) {
        m -= p;
        for (auto& e : prod) e = e * D.beta;
      }
      for (unsigned k = 0; k < p; ++k) out[m][k] += prod[k];
    }
  }
  std::vector<FieldElem> c;
  c.reserve(p * p);
  for (auto& part : out)
    for (auto& e : part) c.push_back(std::move(e));
  return AlgebraElement(x.algebra_, std::move(c));
}

AlgebraElement operator*(const FieldElem& c, const AlgebraElement& x) {
  const FieldElem s = x.algebra_.field().lift(c);
  auto v = x.coeffs_;
  for (auto& e : v) e = s * e;
  return AlgebraElement(x.algebra_, std::move(v));
}

AlgebraElement AlgebraElement::pow(unsigned long long n) const {
  AlgebraElement result = algebra_.one();
  AlgebraElement base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return algebra_ == o.algebra_ && coeffs_ == o.coeffs_;
}

std::string AlgebraElement::to_string() const {
  const unsigned p = algebra_.p();
  std::string out;
  for (unsigned b = 0; b < p; ++b)
    for (unsigned a = 0; a < p; ++a) {
      const FieldElem& c = coeffs_[a + p * b];
      if (c.is_zero()) continue;
      std::string mono;
      if (a > 0) mono = a == 1 ? "i" : "i^" + std::to_string(a);
      if (b > 0) mono += (mono.empty() ? "" : "*") + std::string(b == 1 ? "j" : "j^" + std::to_string(b));
      std::string coef = c.to_string();
      std::string term;
      if (mono.empty())
        term = coef;
      else if (c.is_one())
        term = mono;
      else if (coef.find(' ') != std::string::npos || coef.find('/') != std::string::npos)
        term = "(" + coef + ")*" + mono;
      else
        term = coef + "*" + mono;
      out += (out.empty() ? "" : " + ") + term;
    }
  return out.empty() ? "0" : out;
}

// ---------------- characteristic coefficients ----------------

Matrix left_regular_matrix(const AlgebraElement& x) {
  const SymbolAlgebra& A = x.algebra();
  const std::size_t n = A.dimension();
  Matrix m(n, Vector(n, A.field().zero()));
  for (std::size_t col = 0; col < n; ++col) {
    AlgebraElement img = x * A.basis(col % A.p(), col / A.p());
    for (std::size_t row = 0; row < n; ++row) m[row][col] = img.coeffs()[row];
  }
  return m;
}

CharCoeffs char_coeffs(const AlgebraElement& x) {
  const SymbolAlgebra& A = x.algebra();
  const unsigned p = A.p();
  const FieldTower& F = A.field();
  auto cp = characteristic_polynomial(left_regular_matrix(x), ValueRing<FieldElem>{F.zero(), F.one()});
  CharCoeffs out;
  for (std::size_t k = 1; k < cp.size(); ++k) {
    if (k % p != 0) {
      if (!cp[k].is_zero()) throw Error(ErrorKind::Internal, "left-regular characteristic polynomial is not a p-th power");
      continue;
    }
    auto r = cp[k].pth_root();
    if (!r) throw Error(ErrorKind::Internal, "left-regular characteristic coefficient has no p-th root");
    out.s.push_back(*r);
  }
  return out;
}

CharCoeffs char_coeffs_cyclic(const AlgebraElement& x) {
  const auto& D = *x.algebra().data();
  const unsigned p = D.p;
  // x (j^d e) = sum_m j^m sigma^-m(X_{m-d}) (beta if m < d) e
  std::vector<std::vector<Cyc>> M(p, std::vector<Cyc>(p));
  for (unsigned m = 0; m < p; ++m)
    for (unsigned d = 0; d < p; ++d) {
      Cyc entry = cyc_shift(D, slice(x.coeffs(), p, (m + p - d) % p), p - m);
      if (m < d)
        for (auto& e : entry) e = e * D.beta;
      M[m][d] = std::move(entry);
    }
  auto cp = characteristic_polynomial(M, CycRing{&D});
  CharCoeffs out;
  for (unsigned k = 1; k <= p; ++k) {
    for (unsigned t = 1; t < p; ++t)
      if (!cp[k][t].is_zero()) throw Error(ErrorKind::Internal, "reduced characteristic coefficient outside F");
    out.s.push_back(cp[k][0]);
  }
  return out;
}

bool satisfies_char_identity(const AlgebraElement& x, const CharCoeffs& cc) {
  const SymbolAlgebra& A = x.algebra();
  AlgebraElement acc = A.one();
  for (const auto& s : cc.s) acc = acc * x + A.scalar(s);
  return acc.is_zero();
}

std::optional<AlgebraElement> inverse(const AlgebraElement& x) {
  const CharCoeffs cc = char_coeffs_cyclic(x);
  if (cc.s.back().is_zero()) return std::nullopt;
  const SymbolAlgebra& A = x.algebra();
  AlgebraElement acc = A.one();
  for (std::size_t k = 0; k + 1 < cc.s.size(); ++k) acc = acc * x + A.scalar(cc.s[k]);
  return (-cc.s.back()).inverse() * acc;
}

SymbolicCharCoeffs char_coeffs_symbolic(const SymbolAlgebra& A, const AlgebraElement& t) {
  require_same(A, t.algebra());
  SymbolicCharCoeffs out;
  FieldTower R = A.field();
  for (unsigned m = 0; m < A.p(); ++m) {
    std::string name = R.fresh_name("x" + std::to_string(m));
    R = R.adjoin_transcendental(name);
    out.vars.push_back(name);
  }
  SymbolAlgebra AR = A.over(R);
  Poly f;
  for (const auto& v : out.vars) f.push_back(R.generator(v));
  out.ring = R;
  out.s = char_coeffs(AR.from_i_poly(f) * AR.lift(t)).s;
  return out;
}

std::optional<std::pair<int, int>> degree_range(const FieldElem& e, const std::vector<std::string>& vars) {
  if (e.is_zero()) return std::nullopt;
  const FieldTower& T = e.tower();
  if (T.num_steps() == 0) return std::make_pair(0, 0);
  const std::size_t top = T.num_steps() - 1;
  const bool is_var = std::find(vars.begin(), vars.end(), T.step_name(top)) != vars.end();
  std::optional<std::pair<int, int>> out;
  auto merge = [&](std::optional<std::pair<int, int>> r, int shift) {
    if (!r) return;
    r->first += shift;
    r->second += shift;
    if (!out)
      out = r;
    else
      out = std::make_pair(std::min(out->first, r->first), std::max(out->second, r->second));
  };
  if (T.step_kind(top) == StepKind::Algebraic) {
    for (const auto& c : e.coordinates()) merge(degree_range(c, vars), 0);
    return out;
  }
  auto [num, den] = e.fraction_parts();
  if (den.size() > 1) {
    if (is_var) throw Error(ErrorKind::Unsupported, "degree of a proper fraction");
    for (const auto& c : den) {
      auto r = degree_range(c, vars);
      if (r && r->second != 0) throw Error(ErrorKind::Unsupported, "degree of a proper fraction");
    }
  }
  for (std::size_t k = 0; k < num.size(); ++k) merge(degree_range(num[k], vars), is_var ? static_cast<int>(k) : 0);
  return out;
}

FieldElem norm_Fi(const SymbolAlgebra& A, const Poly& f) { return cyc_norm(*A.data(), poly_to_cyc(A, f)); }

// ---------------- isomorphism witnesses ----------------

bool IsoWitness::verify() const {
  if (!(i_image.algebra() == source) || !(j_image.algebra() == source)) return false;
  if (source.p() != target.p() || !(source.field() == target.field())) return false;
  const AlgebraElement& ip = i_image;
  const AlgebraElement& jp = j_image;
  if (!(ip.pow(source.p()) - ip == source.scalar(target.alpha()))) return false;
  if (!(jp.pow(source.p()) == source.scalar(target.beta()))) return false;
  return jp * ip == (ip + source.one()) * jp;
}

AlgebraElement substitute(const AlgebraElement& y, const AlgebraElement& i_img, const AlgebraElement& j_img) {
  const SymbolAlgebra& S = i_img.algebra();
  const unsigned p = y.algebra().p();
  std::vector<AlgebraElement> ipow{S.one()}, jpow{S.one()};
  for (unsigned k = 1; k < p; ++k) {
    ipow.push_back(ipow.back() * i_img);
    jpow.push_back(jpow.back() * j_img);
  }
  AlgebraElement out = S.zero();
  for (unsigned b = 0; b < p; ++b) {
    AlgebraElement part = S.zero();
    for (unsigned a = 0; a < p; ++a)
      if (!y.coeff(a, b).is_zero()) part = part + S.field().lift(y.coeff(a, b)) * ipow[a];
    if (!part.is_zero()) out = out + part * jpow[b];
  }
  return out;
}

IsoWitness compose(const IsoWitness& first, const IsoWitness& second) {
  require_same(first.target, second.source);
  return IsoWitness{first.source, second.target, substitute(second.i_image, first.i_image, first.j_image),
                    substitute(second.j_image, first.i_image, first.j_image)};
}

Rewrite rewrite_translate_alpha(const SymbolAlgebra& A, const FieldElem& f) {
  const FieldElem g = A.field().lift(f);
  SymbolAlgebra B = SymbolAlgebra::make(A.p(), A.alpha() + g.artin_schreier(), A.beta());
  return Rewrite{B, IsoWitness{A, B, A.i() + A.scalar(g), A.j()}};
}

Rewrite rewrite_scale_beta(const SymbolAlgebra& A, const Poly& f) {
  const FieldElem n = norm_Fi(A, f);
  if (n.is_zero()) throw Error(ErrorKind::SingularScale, "N(f) = 0");
  SymbolAlgebra B = SymbolAlgebra::make(A.p(), A.alpha(), n * A.beta());
  return Rewrite{B, IsoWitness{A, B, A.i(), A.from_i_poly(f) * A.j()}};
}

Rewrite rewrite_invert(const SymbolAlgebra& A) {
  SymbolAlgebra B = SymbolAlgebra::make(A.p(), -A.alpha(), A.beta().inverse());
  return Rewrite{B, IsoWitness{A, B, -A.i(), A.beta().inverse() * A.j().pow(A.p() - 1)}};
}

// ---------------- zero divisors ----------------

namespace {

ZeroDivisorPair from_unipotent(const AlgebraElement& w, const std::string& route) {
  // w^p = 1 and w noncentral: (w - 1)^p = w^p - 1 = 0
  AlgebraElement u = w - w.algebra().one();
  return ZeroDivisorPair{u, u.pow(w.algebra().p() - 1), route};
}

}  // namespace

TriState<ZeroDivisorPair, NoneFound> find_zero_divisor(const SymbolAlgebra& A, const Budget& budget) {
  const unsigned p = A.p();
  const FieldTower& F = A.field();
  std::uint64_t used = 0;

  // alpha = g^p - g: i - g is a root of y^p - y = y (y^(p-1) - 1)
  PreimageResult pre = artin_schreier_preimage(A.alpha(), budget);
  used += pre.candidates;
  if (pre.status == PreimageResult::Status::Witness) {
    AlgebraElement u = A.i() - A.scalar(*pre.witness);
    ZeroDivisorPair z{u, u.pow(p - 1) - A.one(), "alpha in the Artin-Schreier image"};
    if (z.verify()) return Yes<ZeroDivisorPair>{z};
  }

  // N(g) beta = c^p: w = g(i) j / c has w^p = 1
  auto try_scale = [&](const Cyc& g) -> std::optional<ZeroDivisorPair> {
    FieldElem n = cyc_norm(*A.data(), g);
    if (n.is_zero()) return std::nullopt;
    auto c = (n * A.beta()).pth_root();
    if (!c) return std::nullopt;
    AlgebraElement w = c->inverse() * (A.from_i_poly(g) * A.j());
    ZeroDivisorPair z = from_unipotent(w, "unipotent element g(i) j / c");
    if (!z.verify()) return std::nullopt;
    return z;
  };
  Cyc unit(p, F.zero());
  unit[0] = F.one();
  ++used;
  if (auto z = try_scale(unit)) return Yes<ZeroDivisorPair>{*z};

  const std::uint64_t limit = budget.max_candidates;
  auto values = small_elements(F, budget.degree, 64);
  std::optional<ZeroDivisorPair> found;
  for_each_sparse_tuple(p, values, used + limit / 4, used, [&](const std::vector<FieldElem>& g) {
    found = try_scale(g);
    return found.has_value();
  });
  if (found) return Yes<ZeroDivisorPair>{*found};

  // Elements of reduced norm zero; the partner comes from the kernel of left multiplication.
  auto try_singular = [&](const std::vector<FieldElem>& coords) -> bool {
    AlgebraElement y = A.from_coeffs(coords);
    if (y.is_zero() || !char_coeffs_cyclic(y).norm().is_zero()) return false;
    auto ker = kernel_basis(left_regular_matrix(y), A.dimension(), F);
    if (ker.empty()) return false;
    ZeroDivisorPair z{y, A.from_coeffs(ker.front()), "element of reduced norm zero"};
    if (!z.verify()) return false;
    found = z;
    return true;
  };
  if (for_each_sparse_tuple(A.dimension(), values, limit, used, try_singular)) return Yes<ZeroDivisorPair>{*found};
  const bool swept_everything = used < limit;
  if (for_each_random_tuple(A.dimension(), values, budget.random_candidates, budget.seed, used, try_singular))
    return Yes<ZeroDivisorPair>{*found};

  if (swept_everything && F.is_finite() && F.cardinality() && values.size() == *F.cardinality())
    return No<NoneFound>{NoneFound{used}};
  return Unknown{used, "no zero divisor among the searched candidates"};
}

}  // namespace cyclink
