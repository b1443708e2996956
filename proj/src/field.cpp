#include "cyclink/field.hpp"

#include <algorithm>
#include <numeric>

#include "cyclink/search.hpp"
#include "level.hpp"

namespace cyclink {

using detail::Level;
using detail::Raw;
using detail::RPoly;
using Kind = detail::Level::Kind;

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::ReducibleMinimalPolynomial: return "ReducibleMinimalPolynomial";
    case ErrorKind::InseparableMinimalPolynomial: return "InseparableMinimalPolynomial";
    case ErrorKind::DegreeDivisibleByP: return "DegreeDivisibleByP";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NonPrimePower: return "NonPrimePower";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::BetaZero: return "BetaZero";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::SingularScale: return "SingularScale";
    case ErrorKind::GammaZero: return "GammaZero";
    case ErrorKind::NormMismatch: return "NormMismatch";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::NoSolutionInBudget: return "NoSolutionInBudget";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::SlotHasPthRoot: return "SlotHasPthRoot";
    case ErrorKind::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorKind::ResidueUndecided: return "ResidueUndecided";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Digit-polynomial arithmetic over GF(p) used only while building tables.
using Digits = std::vector<unsigned>;

Digits to_digits(std::uint32_t v, unsigned p, unsigned k) {
  Digits d(k, 0);
  for (unsigned i = 0; i < k; ++i, v /= p) d[i] = v % p;
  return d;
}

std::uint32_t from_digits(const Digits& d, unsigned p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

Digits digits_mulmod(const Digits& a, const Digits& b, const Digits& modulus, unsigned p) {
  const std::size_t k = modulus.size() - 1;
  Digits prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t deg = 2 * k - 1; deg >= k; --deg) {
    unsigned f = prod[deg];
    if (f == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[deg - k + i] = (prod[deg - k + i] + (p - f) * modulus[i]) % p;
  }
  prod.resize(k);
  return prod;
}

// Trial division by every monic polynomial of degree <= k/2.
bool digits_irreducible(const Digits& m, unsigned p) {
  const std::size_t k = m.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Digits f = to_digits(static_cast<std::uint32_t>(v), p, static_cast<unsigned>(d));
      f.push_back(1);
      Digits r = m;
      for (std::size_t deg = k; deg >= d; --deg) {
        unsigned c = r[deg];
        if (c != 0)
          for (std::size_t i = 0; i <= d; ++i) r[deg - d + i] = (r[deg - d + i] + (p - c) * f[i]) % p;
        if (deg == d) break;
      }
      if (std::all_of(r.begin(), r.begin() + static_cast<long>(d), [](unsigned c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::shared_ptr<const Level> build_finite(std::uint64_t q) {
  if (q < 2 || q > (1u << 20)) throw Error(ErrorKind::NonPrimePower, "GF(" + std::to_string(q) + ") out of range");
  unsigned p = 0;
  for (std::uint64_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = static_cast<unsigned>(d);
      break;
    }
  unsigned k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1 || !is_prime(p)) throw Error(ErrorKind::NonPrimePower, std::to_string(q) + " is not a prime power");

  auto L = std::make_shared<Level>();
  L->kind = Kind::Finite;
  L->p = p;
  L->k = k;
  L->q = static_cast<std::uint32_t>(q);
  L->name = "w";
  L->unit = Raw{1, {}, {}};
  if (k == 1) {
    L->modulus = {0, 1};
  } else {
    std::uint32_t count = static_cast<std::uint32_t>(q);
    bool found = false;
    for (std::uint32_t v = 0; v < count && !found; ++v) {
      Digits m = to_digits(v, p, k);
      m.push_back(1);
      if (digits_irreducible(m, p)) {
        L->modulus = m;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::ReducibleModulus, "no irreducible modulus found");
  }
  // primitive element and log tables
  L->exp_tab.assign(q - 1, 0);
  L->log_tab.assign(q, 0);
  auto mulv = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (k == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    return from_digits(digits_mulmod(to_digits(a, p, k), to_digits(b, p, k), L->modulus, p), p);
  };
  bool have_generator = false;
  for (std::uint32_t g = 1; g < q && !have_generator; ++g) {
    std::uint32_t cur = 1;
    std::uint32_t e = 0;
    do {
      L->exp_tab[e++] = cur;
      cur = mulv(cur, g);
    } while (cur != 1 && e < q - 1);
    have_generator = (cur == 1 && e == q - 1);
  }
  if (!have_generator) throw Error(ErrorKind::Internal, "no primitive element");
  for (std::uint32_t e = 0; e < q - 1; ++e) L->log_tab[L->exp_tab[e]] = e;
  return L;
}

const Level* find_level(const Level* top, const Level* target) {
  for (const Level* cur = top; cur != nullptr; cur = cur->parent.get())
    if (detail::same_level(cur, target)) return cur;
  return nullptr;
}

Raw lift_raw(const Level* top, const Level* from, Raw r) {
  std::vector<const Level*> chain;
  const Level* cur = top;
  while (cur != nullptr && !detail::same_level(cur, from)) {
    chain.push_back(cur);
    cur = cur->parent.get();
  }
  if (cur == nullptr) throw Error(ErrorKind::TowerMismatch, "element is not in a subfield of this tower");
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) r = detail::lift1(**it, std::move(r));
  return r;
}

const Level* step_level(const Level* top, std::size_t s) {
  const Level* cur = top;
  while (cur != nullptr && cur->steps != s + 1) cur = cur->parent.get();
  if (cur == nullptr || cur->kind == Kind::Finite) throw Error(ErrorKind::Internal, "step index out of range");
  return cur;
}

std::shared_ptr<const Level> level_with_steps(const std::shared_ptr<const Level>& top, std::size_t n) {
  std::shared_ptr<const Level> cur = top;
  while (cur && cur->steps > n) cur = cur->parent;
  return cur;
}

Poly to_poly(const FieldTower& t, const RPoly& r) {
  Poly out;
  out.reserve(r.size());
  for (const auto& c : r) out.emplace_back(t, c);
  return out;
}

RPoly from_poly(const FieldTower& t, const Poly& p) {
  RPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(t.lift(c).raw());
  detail::trim(out);
  return out;
}

RPoly powmod(const Level& P, RPoly base, std::uint64_t e, const RPoly& m) {
  RPoly result{P.unit};
  RPoly q, r;
  while (e > 0) {
    if (e & 1u) {
      detail::pdivrem(P, detail::pmul(P, result, base), m, q, r);
      result = r;
    }
    e >>= 1u;
    if (e > 0) {
      detail::pdivrem(P, detail::pmul(P, base, base), m, q, r);
      base = r;
    }
  }
  return result;
}

// Rabin's test over a finite level of size Q.
bool rabin_irreducible(const Level& P, const RPoly& m, std::uint64_t Q) {
  const std::size_t n = m.size() - 1;
  RPoly x{Raw{}, P.unit};
  auto frob_iter = [&](std::size_t times) {
    RPoly h = x;
    for (std::size_t i = 0; i < times; ++i) h = powmod(P, h, Q, m);
    return h;
  };
  if (frob_iter(n) != x) return false;
  for (std::size_t r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime(r)) continue;
    RPoly h = detail::psub(P, frob_iter(n / r), x);
    if (detail::pgcd(P, h, m).size() > 1) return false;
  }
  return true;
}

RPoly derivative(const Level& P, const RPoly& a) {
  RPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(detail::mul(P, detail::from_int(P, static_cast<long long>(i)), a[i]));
  detail::trim(d);
  return d;
}

}  // namespace

// ---------------- FieldTower ----------------

FieldTower FieldTower::finite(std::uint64_t q) { return FieldTower(build_finite(q)); }

FieldTower FieldTower::adjoin_transcendental(const std::string& name) const {
  if (has_name(name) || name == "i" || name == "j")
    throw Error(ErrorKind::DuplicateName, "generator name '" + name + "' already in use");
  auto L = std::make_shared<Level>();
  L->kind = Kind::Transcendental;
  L->parent = top_;
  L->name = name;
  L->p = top_->p;
  L->steps = top_->steps + 1;
  L->finite_tower = false;
  L->unit = detail::lift1(*L, top_->unit);
  return FieldTower(L);
}

FieldTower FieldTower::adjoin_algebraic(const std::string& name, const Poly& minpoly) const {
  if (has_name(name) || name == "i" || name == "j")
    throw Error(ErrorKind::DuplicateName, "generator name '" + name + "' already in use");
  const Level& P = *top_;
  RPoly m = from_poly(*this, minpoly);
  if (m.size() < 2) throw Error(ErrorKind::ReducibleMinimalPolynomial, "minimal polynomial must have degree >= 1");
  const std::size_t n = m.size() - 1;
  if (n % P.p == 0) throw Error(ErrorKind::DegreeDivisibleByP, "degree " + std::to_string(n) + " is divisible by p");
  if (!(m.back() == P.unit)) m = detail::pscale(P, m, detail::inv(P, m.back()));
  RPoly dm = derivative(P, m);
  if (dm.empty() || detail::pgcd(P, m, dm).size() > 1)
    throw Error(ErrorKind::InseparableMinimalPolynomial, "minimal polynomial is not separable");
  if (n > 1) {
    bool irreducible = true;
    if (P.finite_tower) {
      auto card = detail::cardinality(P);
      if (!card) throw Error(ErrorKind::Unsupported, "finite tower too large");
      irreducible = rabin_irreducible(P, m, *card);
    } else if (n == 2 && P.p != 2) {
      Raw b = m[1], c = m[0];
      Raw disc = detail::sub(P, detail::mul(P, b, b), detail::mul(P, detail::from_int(P, 4), c));
      irreducible = !detail::sqrt(P, disc).has_value();
    } else {
      throw Error(ErrorKind::Unsupported, "irreducibility of degree " + std::to_string(n) + " over an infinite tower");
    }
    if (!irreducible) throw Error(ErrorKind::ReducibleMinimalPolynomial, detail::render_poly(P, m, name) + " is reducible");
  }
  auto L = std::make_shared<Level>();
  L->kind = Kind::Algebraic;
  L->parent = top_;
  L->name = name;
  L->p = P.p;
  L->steps = P.steps + 1;
  L->finite_tower = P.finite_tower;
  L->minpoly = std::move(m);
  L->unit = detail::lift1(*L, P.unit);
  return FieldTower(L);
}

unsigned FieldTower::characteristic() const { return top_->p; }

std::uint64_t FieldTower::base_size() const {
  const Level* cur = top_.get();
  while (cur->parent) cur = cur->parent.get();
  return cur->q;
}

unsigned FieldTower::base_degree() const {
  const Level* cur = top_.get();
  while (cur->parent) cur = cur->parent.get();
  return cur->k;
}

std::size_t FieldTower::num_steps() const { return top_->steps; }

StepKind FieldTower::step_kind(std::size_t s) const {
  return step_level(top_.get(), s)->kind == Kind::Transcendental ? StepKind::Transcendental : StepKind::Algebraic;
}

const std::string& FieldTower::step_name(std::size_t s) const { return step_level(top_.get(), s)->name; }

std::size_t FieldTower::step_degree(std::size_t s) const { return step_level(top_.get(), s)->degree(); }

Poly FieldTower::step_minpoly(std::size_t s) const {
  const Level* L = step_level(top_.get(), s);
  if (L->kind != Kind::Algebraic) return {};
  return to_poly(FieldTower(L->parent), L->minpoly);
}

TowerStep FieldTower::step(std::size_t s) const {
  return TowerStep{step_kind(s), step_name(s), step_minpoly(s)};
}

FieldTower FieldTower::prefix(std::size_t n) const {
  if (n > num_steps()) throw Error(ErrorKind::Internal, "prefix longer than tower");
  return FieldTower(level_with_steps(top_, n));
}

bool FieldTower::is_prefix_of(const FieldTower& other) const {
  if (!valid() || !other.valid()) return false;
  return find_level(other.top_.get(), top_.get()) != nullptr;
}

bool FieldTower::is_finite() const { return top_->finite_tower; }

std::optional<std::uint64_t> FieldTower::cardinality() const { return detail::cardinality(*top_); }

std::vector<FieldElem> FieldTower::elements() const {
  std::vector<FieldElem> out;
  for (auto& r : detail::enumerate(*top_)) out.emplace_back(*this, std::move(r));
  return out;
}

std::vector<std::string> FieldTower::transcendental_names() const {
  std::vector<std::string> out;
  for (std::size_t s = 0; s < num_steps(); ++s)
    if (step_kind(s) == StepKind::Transcendental) out.push_back(step_name(s));
  return out;
}

std::vector<std::string> FieldTower::names() const {
  std::vector<std::string> out;
  if (base_degree() > 1) out.push_back("w");
  for (std::size_t s = 0; s < num_steps(); ++s) out.push_back(step_name(s));
  return out;
}

bool FieldTower::has_name(const std::string& name) const {
  auto n = names();
  return std::find(n.begin(), n.end(), name) != n.end() || name == "w";
}

std::string FieldTower::fresh_name(const std::string& stem) const {
  if (!has_name(stem) && stem != "i" && stem != "j") return stem;
  for (int k = 1;; ++k) {
    std::string cand = stem + std::to_string(k);
    if (!has_name(cand)) return cand;
  }
}

FieldElem FieldTower::zero() const { return FieldElem(*this, Raw{}); }
FieldElem FieldTower::one() const { return FieldElem(*this, top_->unit); }
FieldElem FieldTower::from_int(long long n) const { return FieldElem(*this, detail::from_int(*top_, n)); }

FieldElem FieldTower::generator(const std::string& name) const {
  const Level* cur = top_.get();
  for (; cur != nullptr; cur = cur->parent.get()) {
    if (cur->kind == Kind::Finite) {
      if (name == "w" && cur->k > 1) return lift(FieldElem(FieldTower(level_with_steps(top_, 0)), Raw{cur->p, {}, {}}));
      break;
    }
    if (cur->name == name) {
      FieldTower t(level_with_steps(top_, cur->steps));
      Raw g;
      g.num = {Raw{}, cur->parent->unit};
      if (cur->kind == Kind::Algebraic && cur->degree() == 1) g = detail::lift1(*cur, detail::neg(*cur->parent, cur->minpoly[0]));
      return lift(FieldElem(t, g));
    }
  }
  throw Error(ErrorKind::ParseError, "unknown generator '" + name + "'");
}

FieldElem FieldTower::lift(const FieldElem& e) const {
  if (!e.tower().valid()) throw Error(ErrorKind::TowerMismatch, "uninitialised element");
  if (e.tower().level() == top_.get()) return e;
  return FieldElem(*this, lift_raw(top_.get(), e.tower().level(), e.raw()));
}

FieldElem FieldTower::from_fraction(const Poly& num, const Poly& den) const {
  if (top_->kind != Kind::Transcendental) throw Error(ErrorKind::Internal, "top step is not transcendental");
  FieldTower below(top_->parent);
  RPoly n = from_poly(below, num), d = from_poly(below, den);
  detail::trim(n);
  detail::trim(d);
  if (d.empty()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (n.empty()) return zero();
  Raw nr, dr;
  nr.num = std::move(n);
  dr.num = std::move(d);
  // make_frac is internal to field_raw; go through the arithmetic instead
  return FieldElem(*this, detail::mul(*top_, nr, detail::inv(*top_, dr)));
}

FieldElem FieldTower::from_coordinates(const Poly& coords) const {
  if (top_->kind != Kind::Algebraic) throw Error(ErrorKind::Internal, "top step is not algebraic");
  FieldTower below(top_->parent);
  RPoly c = from_poly(below, coords);
  if (c.size() > top_->degree()) throw Error(ErrorKind::Internal, "too many coordinates");
  Raw r;
  r.num = std::move(c);
  return FieldElem(*this, std::move(r));
}

std::string FieldTower::to_string() const {
  std::string s = "GF(" + std::to_string(base_size()) + ")";
  for (std::size_t i = 0; i < num_steps(); ++i) {
    const Level* L = step_level(top_.get(), i);
    if (L->kind == Kind::Transcendental)
      s += "(" + L->name + ")";
    else
      s += "[" + L->name + ": " + detail::render_poly(*L->parent, L->minpoly, L->name) + "]";
  }
  return s;
}

bool FieldTower::operator==(const FieldTower& other) const { return detail::same_level(top_.get(), other.top_.get()); }

FieldTower extend(const FieldTower& tower, const TowerStep& step) {
  return step.kind == StepKind::Transcendental ? tower.adjoin_transcendental(step.name)
                                               : tower.adjoin_algebraic(step.name, step.minpoly);
}

// ---------------- FieldElem ----------------

namespace {

// Brings a and b into a common tower; returns the level to compute on.
const Level& unify(FieldElem& a, const FieldElem& b, Raw& b_raw, bool& use_copy) {
  use_copy = false;
  const Level* la = a.tower().level();
  const Level* lb = b.tower().level();
  if (la == nullptr || lb == nullptr) throw Error(ErrorKind::TowerMismatch, "uninitialised element");
  if (la == lb) return *la;
  if (find_level(la, lb) != nullptr) {
    b_raw = a.tower().lift(b).raw();
    use_copy = true;
    return *la;
  }
  if (find_level(lb, la) != nullptr) {
    a = b.tower().lift(a);
    return *b.tower().level();
  }
  throw Error(ErrorKind::TowerMismatch, "elements live in unrelated towers");
}

}  // namespace

bool FieldElem::is_zero() const { return detail::is_zero(raw_); }
bool FieldElem::is_one() const { return tower_.valid() && raw_ == tower_.level()->unit; }

FieldElem FieldElem::operator-() const { return FieldElem(tower_, detail::neg(*tower_.level(), raw_)); }

#define CYCLINK_BINOP(OP, FN)                                             \
  FieldElem& FieldElem::operator OP(const FieldElem& o) {                 \
    Raw tmp;                                                              \
    bool copy = false;                                                    \
    const Level& L = unify(*this, o, tmp, copy);                          \
    raw_ = detail::FN(L, raw_, copy ? tmp : o.raw());                     \
    return *this;                                                         \
  }

CYCLINK_BINOP(+=, add)
CYCLINK_BINOP(-=, sub)
CYCLINK_BINOP(*=, mul)
#undef CYCLINK_BINOP

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  Raw tmp;
  bool copy = false;
  const Level& L = unify(*this, o, tmp, copy);
  raw_ = detail::mul(L, raw_, detail::inv(L, copy ? tmp : o.raw()));
  return *this;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (!tower_.valid() || !o.tower_.valid()) return !tower_.valid() && !o.tower_.valid();
  if (tower_.level() == o.tower_.level()) return raw_ == o.raw_;
  if (find_level(tower_.level(), o.tower_.level())) return raw_ == tower_.lift(o).raw();
  if (find_level(o.tower_.level(), tower_.level())) return o.tower_.lift(*this).raw() == o.raw_;
  return false;
}

FieldElem FieldElem::inverse() const { return FieldElem(tower_, detail::inv(*tower_.level(), raw_)); }

FieldElem FieldElem::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  return FieldElem(tower_, detail::pow(*tower_.level(), raw_, static_cast<unsigned long long>(n)));
}

FieldElem FieldElem::frobenius() const { return FieldElem(tower_, detail::frobenius(*tower_.level(), raw_)); }

std::optional<FieldElem> FieldElem::pth_root() const {
  auto r = detail::pth_root(*tower_.level(), raw_);
  if (!r) return std::nullopt;
  return FieldElem(tower_, std::move(*r));
}

std::optional<FieldElem> FieldElem::sqrt() const {
  auto r = detail::sqrt(*tower_.level(), raw_);
  if (!r) return std::nullopt;
  return FieldElem(tower_, std::move(*r));
}

FieldElem FieldElem::artin_schreier() const { return frobenius() - *this; }

std::pair<Poly, Poly> FieldElem::fraction_parts() const {
  const Level* L = tower_.level();
  if (L->kind != Kind::Transcendental) throw Error(ErrorKind::Internal, "top step is not transcendental");
  FieldTower below(L->parent);
  Poly den = raw_.den.empty() ? Poly{below.one()} : to_poly(below, raw_.den);
  return {to_poly(below, raw_.num), den};
}

Poly FieldElem::coordinates() const {
  const Level* L = tower_.level();
  if (L->kind != Kind::Algebraic) throw Error(ErrorKind::Internal, "top step is not algebraic");
  FieldTower below(L->parent);
  Poly c = to_poly(below, raw_.num);
  while (c.size() < L->degree()) c.push_back(below.zero());
  return c;
}

namespace {

void collect_generators(const Level& L, const Raw& r, std::set<std::string>& out) {
  if (detail::is_zero(r) || L.kind == Kind::Finite) return;
  if (r.num.size() > 1 || !r.den.empty()) out.insert(L.name);
  for (const auto& c : r.num) collect_generators(*L.parent, c, out);
  for (const auto& c : r.den) collect_generators(*L.parent, c, out);
}

}  // namespace

std::set<std::string> FieldElem::generators_used() const {
  std::set<std::string> out;
  collect_generators(*tower_.level(), raw_, out);
  return out;
}

std::string FieldElem::to_string() const {
  if (!tower_.valid()) return "<unset>";
  return detail::render(*tower_.level(), raw_);
}

// ---------------- polynomials ----------------

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i >= a.size())
      r[i] = b[i];
    else if (i >= b.size())
      r[i] = a[i];
    else
      r[i] = a[i] + b[i];
  }
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly nb;
  for (const auto& c : b) nb.push_back(-c);
  return poly_add(a, nb);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, a[0].tower().zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

FieldElem poly_eval(const Poly& p, const FieldElem& x) {
  FieldElem acc = x.tower().zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  FieldTower t = p[0].tower();
  for (const auto& c : p)
    if (t.is_prefix_of(c.tower()) && !(c.tower() == t)) t = c.tower();
  return detail::render_poly(*t.level(), from_poly(t, p), var);
}

// ---------------- Artin-Schreier preimages ----------------

namespace {

struct RawPreimage {
  PreimageResult::Status status = PreimageResult::Status::Unknown;
  std::optional<Raw> witness;
  std::string reason;
  std::uint64_t candidates = 0;
};

RawPreimage exact_preimage(const Level& L, const Raw& a) {
  RawPreimage res;
  if (L.finite_tower) {
    auto card = detail::cardinality(L);
    if (!card || *card > (1u << 20)) {
      res.reason = "finite tower too large for exhaustive search";
      return res;
    }
    for (const Raw& r : detail::enumerate(L)) {
      ++res.candidates;
      if (detail::sub(L, detail::frobenius(L, r), r) == a) {
        res.status = PreimageResult::Status::Witness;
        res.witness = r;
        return res;
      }
    }
    res.status = PreimageResult::Status::CertifiedAbsent;
    res.reason = "exhaustive search over GF(" + std::to_string(*card) + ")";
    return res;
  }
  if (L.kind != Kind::Transcendental) {
    res.reason = "algebraic step over an infinite field";
    return res;
  }
  const Level& P = *L.parent;
  if (!a.den.empty()) {
    RPoly d = a.den;
    auto root = detail::pth_root(L, Raw{0, {P.unit}, d});
    if (!root) {
      res.status = PreimageResult::Status::CertifiedAbsent;
      res.reason = "denominator in " + L.name + " is not a p-th power";
      return res;
    }
    res.reason = "denominator in " + L.name + " is a p-th power";
    return res;
  }
  // polynomial numerator: peel off the top degree term by term
  RPoly N = a.num;
  RPoly f;
  while (N.size() > 1) {
    const std::size_t deg = N.size() - 1;
    if (deg % L.p != 0) {
      res.status = PreimageResult::Status::CertifiedAbsent;
      res.reason = "degree " + std::to_string(deg) + " in " + L.name + " is not divisible by p";
      return res;
    }
    auto c = detail::pth_root(P, N.back());
    if (!c) {
      res.status = PreimageResult::Status::CertifiedAbsent;
      res.reason = "leading coefficient in " + L.name + " is not a p-th power";
      return res;
    }
    const std::size_t m = deg / L.p;
    if (f.size() <= m) f.resize(m + 1);
    f[m] = detail::add(P, f[m], *c);
    N.back() = Raw{};
    detail::trim(N);
    if (N.size() <= m) N.resize(m + 1);
    N[m] = detail::add(P, N[m], *c);
    detail::trim(N);
  }
  Raw constant = N.empty() ? Raw{} : N[0];
  RawPreimage below = exact_preimage(P, constant);
  res.candidates = below.candidates;
  if (below.status == PreimageResult::Status::CertifiedAbsent) {
    res.status = below.status;
    res.reason = "constant term in " + L.name + ": " + below.reason;
    return res;
  }
  if (below.status == PreimageResult::Status::Unknown) {
    res.reason = "constant term in " + L.name + ": " + below.reason;
    return res;
  }
  if (f.empty()) f.resize(1);
  f[0] = detail::add(P, f[0], *below.witness);
  detail::trim(f);
  Raw w;
  w.num = std::move(f);
  res.status = PreimageResult::Status::Witness;
  res.witness = std::move(w);
  return res;
}

}  // namespace

PreimageResult artin_schreier_preimage_exact(const FieldElem& alpha) {
  RawPreimage raw = exact_preimage(*alpha.tower().level(), alpha.raw());
  PreimageResult res;
  res.status = raw.status;
  res.reason = raw.reason;
  res.candidates = raw.candidates;
  if (raw.witness) {
    res.witness = FieldElem(alpha.tower(), std::move(*raw.witness));
    if (!(res.witness->artin_schreier() == alpha)) throw Error(ErrorKind::Internal, "preimage witness fails to verify");
  }
  return res;
}

PreimageResult artin_schreier_preimage(const FieldElem& alpha, const Budget& budget) {
  PreimageResult res = artin_schreier_preimage_exact(alpha);
  if (res.status != PreimageResult::Status::Unknown) return res;
  const FieldTower& t = alpha.tower();
  std::vector<FieldElem> denominators{t.one()};
  if (t.level()->kind == Kind::Transcendental && !alpha.raw().den.empty()) {
    auto [num, den] = alpha.fraction_parts();
    FieldElem d = t.from_fraction(den, {t.prefix(t.num_steps() - 1).one()});
    if (auto r = d.pth_root()) denominators.push_back(*r);
  }
  auto candidates = small_elements(t, budget.degree, budget.max_candidates);
  for (const auto& den : denominators) {
    for (const auto& c : candidates) {
      if (res.candidates >= budget.max_candidates) break;
      ++res.candidates;
      FieldElem f = c / den;
      if (f.artin_schreier() == alpha) {
        res.status = PreimageResult::Status::Witness;
        res.witness = f;
        res.reason = "bounded search";
        return res;
      }
    }
  }
  res.reason += "; bounded search exhausted";
  return res;
}

}  // namespace cyclink
