#include <algorithm>
#include <numeric>

#include "level.hpp"

namespace cyclink::detail {

namespace {

using Kind = Level::Kind;

// ---- finite base ----

std::uint32_t ff_add(const Level& L, std::uint32_t a, std::uint32_t b) {
  if (L.k == 1) {
    std::uint32_t s = a + b;
    return s >= L.p ? s - L.p : s;
  }
  if (L.p == 2) return a ^ b;
  std::uint32_t r = 0, m = 1;
  while (a != 0 || b != 0) {
    r += ((a % L.p + b % L.p) % L.p) * m;
    m *= L.p;
    a /= L.p;
    b /= L.p;
  }
  return r;
}

std::uint32_t ff_neg(const Level& L, std::uint32_t a) {
  if (L.p == 2) return a;
  if (L.k == 1) return a == 0 ? 0 : L.p - a;
  std::uint32_t r = 0, m = 1;
  while (a != 0) {
    r += ((L.p - a % L.p) % L.p) * m;
    m *= L.p;
    a /= L.p;
  }
  return r;
}

std::uint32_t ff_mul(const Level& L, std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) return 0;
  return L.exp_tab[(L.log_tab[a] + L.log_tab[b]) % (L.q - 1)];
}

std::uint32_t ff_inv(const Level& L, std::uint32_t a) {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return L.exp_tab[(L.q - 1 - L.log_tab[a]) % (L.q - 1)];
}

std::uint32_t ff_pow(const Level& L, std::uint32_t a, unsigned long long n) {
  if (n == 0) return 1;
  if (a == 0) return 0;
  unsigned long long e = (static_cast<unsigned long long>(L.log_tab[a]) * (n % (L.q - 1))) % (L.q - 1);
  return L.exp_tab[e];
}

bool is_unit(const Level& L, const Raw& r) { return r == L.unit; }

RPoly one_poly(const Level& P) { return RPoly{P.unit}; }

// ---- K(x) ----

RPoly pdiv_exact(const Level& P, const RPoly& a, const RPoly& b) {
  RPoly q, r;
  pdivrem(P, a, b, q, r);
  return q;
}

Raw make_frac(const Level& T, RPoly n, RPoly d) {
  const Level& P = *T.parent;
  trim(n);
  trim(d);
  if (d.empty()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (n.empty()) return {};
  if (d.size() > 1) {
    RPoly g = pgcd(P, n, d);
    if (g.size() > 1) {
      n = pdiv_exact(P, n, g);
      d = pdiv_exact(P, d, g);
    }
  }
  if (!is_unit(P, d.back())) {
    Raw li = inv(P, d.back());
    n = pscale(P, n, li);
    d = pscale(P, d, li);
  }
  Raw r;
  r.num = std::move(n);
  if (d.size() > 1) r.den = std::move(d);
  return r;
}

Raw frac_add(const Level& T, const Raw& a, const Raw& b) {
  const Level& P = *T.parent;
  if (a.den.empty() && b.den.empty()) {
    Raw r;
    r.num = padd(P, a.num, b.num);
    return r;
  }
  if (a.den == b.den) return make_frac(T, padd(P, a.num, b.num), a.den);
  RPoly da = a.den.empty() ? one_poly(P) : a.den;
  RPoly db = b.den.empty() ? one_poly(P) : b.den;
  return make_frac(T, padd(P, pmul(P, a.num, db), pmul(P, b.num, da)), pmul(P, da, db));
}

Raw frac_mul(const Level& T, const Raw& a, const Raw& b) {
  const Level& P = *T.parent;
  Raw r;
  if (a.den.empty() && b.den.empty()) {
    r.num = pmul(P, a.num, b.num);
    return r;
  }
  RPoly n1 = a.num, n2 = b.num;
  RPoly d1 = a.den.empty() ? one_poly(P) : a.den;
  RPoly d2 = b.den.empty() ? one_poly(P) : b.den;
  if (d2.size() > 1) {
    RPoly g = pgcd(P, n1, d2);
    if (g.size() > 1) {
      n1 = pdiv_exact(P, n1, g);
      d2 = pdiv_exact(P, d2, g);
    }
  }
  if (d1.size() > 1) {
    RPoly g = pgcd(P, n2, d1);
    if (g.size() > 1) {
      n2 = pdiv_exact(P, n2, g);
      d1 = pdiv_exact(P, d1, g);
    }
  }
  r.num = pmul(P, n1, n2);
  RPoly d = pmul(P, d1, d2);
  if (d.size() > 1) r.den = std::move(d);
  return r;
}

Raw frac_inv(const Level& T, const Raw& a) {
  const Level& P = *T.parent;
  if (a.num.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Raw li = inv(P, a.num.back());
  Raw r;
  r.num = pscale(P, a.den.empty() ? one_poly(P) : a.den, li);
  RPoly d = pscale(P, a.num, li);
  if (d.size() > 1) r.den = std::move(d);
  return r;
}

// ---- K[t]/(m) ----

RPoly pmod(const Level& P, const RPoly& a, const RPoly& m) {
  if (a.size() < m.size()) return a;
  RPoly q, r;
  pdivrem(P, a, m, q, r);
  return r;
}

Raw alg_inv(const Level& A, const Raw& a) {
  const Level& P = *A.parent;
  if (a.num.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  RPoly r0 = A.minpoly, r1 = a.num;
  RPoly s0, s1 = one_poly(P);
  while (!r1.empty()) {
    RPoly q, r;
    pdivrem(P, r0, r1, q, r);
    RPoly s = psub(P, s0, pmul(P, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error(ErrorKind::Internal, "algebraic element is a zero divisor");
  Raw out;
  out.num = pmod(P, pscale(P, s0, inv(P, r0[0])), A.minpoly);
  return out;
}

// Gaussian elimination over P for a square system rows * x = rhs.
std::optional<RPoly> solve_square(const Level& P, std::vector<RPoly> rows, RPoly rhs) {
  const std::size_t n = rows.size();
  for (auto& row : rows) row.resize(n);
  rhs.resize(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(rows[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(rows[piv], rows[col]);
    std::swap(rhs[piv], rhs[col]);
    Raw pinv = inv(P, rows[col][col]);
    for (std::size_t c = col; c < n; ++c) rows[col][c] = mul(P, rows[col][c], pinv);
    rhs[col] = mul(P, rhs[col], pinv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(rows[r][col])) continue;
      Raw f = rows[r][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] = sub(P, rows[r][c], mul(P, f, rows[col][c]));
      rhs[r] = sub(P, rhs[r], mul(P, f, rhs[col]));
    }
  }
  return rhs;
}

// p-th root of a polynomial, coefficient-wise; exponents must be multiples of p.
std::optional<RPoly> poly_pth_root(const Level& P, const RPoly& a) {
  const unsigned p = P.p;
  RPoly out;
  if (a.empty()) return out;
  if ((a.size() - 1) % p != 0) return std::nullopt;
  out.resize((a.size() - 1) / p + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    if (i % p != 0) return std::nullopt;
    auto r = pth_root(P, a[i]);
    if (!r) return std::nullopt;
    out[i / p] = std::move(*r);
  }
  return out;
}

std::optional<RPoly> monic_poly_sqrt(const Level& P, const RPoly& m) {
  if ((m.size() - 1) % 2 != 0) return std::nullopt;
  const std::size_t k = (m.size() - 1) / 2;
  RPoly r(k + 1);
  r[k] = P.unit;
  Raw half = inv(P, from_int(P, 2));
  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t target = 2 * k - j;
    Raw s;
    for (std::size_t a = k - j + 1; a <= k; ++a) {
      std::size_t b = target - a;
      if (b < k - j + 1 || b > k) continue;
      s = add(P, s, mul(P, r[a], r[b]));
    }
    r[k - j] = mul(P, sub(P, m[target], s), half);
  }
  if (pmul(P, r, r) != m) return std::nullopt;
  return r;
}

std::optional<Raw> finite_search_sqrt(const Level& L, const Raw& a) {
  if (is_zero(a)) return Raw{};
  auto card = cardinality(L);
  if (!card || *card > (1u << 22)) throw Error(ErrorKind::Unsupported, "square root in a large finite tower");
  if (pow(L, a, (*card - 1) / 2) != L.unit) return std::nullopt;
  for (const Raw& r : enumerate(L))
    if (mul(L, r, r) == a) return r;
  return std::nullopt;
}

std::optional<Raw> quadratic_step_sqrt(const Level& A, const Raw& a) {
  const Level& P = *A.parent;
  // shift t' = t + b/2 so that t'^2 = d
  const Raw& b = A.minpoly[1];
  const Raw& c = A.minpoly[0];
  Raw two = from_int(P, 2);
  Raw half = inv(P, two);
  Raw shift = mul(P, b, half);
  Raw d = sub(P, mul(P, shift, shift), c);
  Raw u0 = a.num.size() > 0 ? a.num[0] : Raw{};
  Raw u1 = a.num.size() > 1 ? a.num[1] : Raw{};
  Raw U = sub(P, u0, mul(P, u1, shift));
  const Raw& V = u1;
  auto build = [&](const Raw& s, const Raw& t) {
    // s + t t' = (s + t*shift) + t*t
    Raw out;
    out.num = {add(P, s, mul(P, t, shift)), t};
    trim(out.num);
    return out;
  };
  if (is_zero(V)) {
    if (auto s = sqrt(P, U)) return build(*s, Raw{});
    if (auto t = sqrt(P, mul(P, U, inv(P, d)))) return build(Raw{}, *t);
    return std::nullopt;
  }
  auto r = sqrt(P, sub(P, mul(P, U, U), mul(P, d, mul(P, V, V))));
  if (!r) return std::nullopt;
  Raw inv2d = inv(P, mul(P, two, d));
  for (int sign : {1, -1}) {
    Raw t2 = mul(P, sign > 0 ? add(P, U, *r) : sub(P, U, *r), inv2d);
    if (is_zero(t2)) continue;
    auto t = sqrt(P, t2);
    if (!t) continue;
    Raw s = mul(P, V, inv(P, mul(P, two, *t)));
    Raw cand = build(s, *t);
    if (mul(A, cand, cand) == a) return cand;
  }
  return std::nullopt;
}

}  // namespace

bool same_level(const Level* a, const Level* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->kind != b->kind || a->p != b->p || a->steps != b->steps || a->name != b->name) return false;
  if (a->kind == Kind::Finite) return a->q == b->q;
  if (!same_level(a->parent.get(), b->parent.get())) return false;
  return a->minpoly == b->minpoly;
}

Raw from_int(const Level& L, long long n) {
  long long m = n % static_cast<long long>(L.p);
  if (m < 0) m += L.p;
  if (L.kind == Kind::Finite) return Raw{static_cast<std::uint32_t>(m), {}, {}};
  return lift1(L, from_int(*L.parent, m));
}

Raw lift1(const Level&, Raw parent_value) {
  if (is_zero(parent_value)) return {};
  Raw r;
  r.num.push_back(std::move(parent_value));
  return r;
}

Raw add(const Level& L, const Raw& a, const Raw& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  switch (L.kind) {
    case Kind::Finite:
      return Raw{ff_add(L, a.c, b.c), {}, {}};
    case Kind::Transcendental:
      return frac_add(L, a, b);
    case Kind::Algebraic: {
      Raw r;
      r.num = padd(*L.parent, a.num, b.num);
      return r;
    }
  }
  return {};
}

Raw neg(const Level& L, const Raw& a) {
  if (is_zero(a)) return a;
  switch (L.kind) {
    case Kind::Finite:
      return Raw{ff_neg(L, a.c), {}, {}};
    case Kind::Transcendental:
    case Kind::Algebraic: {
      Raw r = a;
      for (auto& c : r.num) c = neg(*L.parent, c);
      return r;
    }
  }
  return {};
}

Raw sub(const Level& L, const Raw& a, const Raw& b) { return add(L, a, neg(L, b)); }

Raw mul(const Level& L, const Raw& a, const Raw& b) {
  if (is_zero(a) || is_zero(b)) return {};
  switch (L.kind) {
    case Kind::Finite:
      return Raw{ff_mul(L, a.c, b.c), {}, {}};
    case Kind::Transcendental:
      return frac_mul(L, a, b);
    case Kind::Algebraic: {
      Raw r;
      r.num = pmod(*L.parent, pmul(*L.parent, a.num, b.num), L.minpoly);
      return r;
    }
  }
  return {};
}

Raw inv(const Level& L, const Raw& a) {
  switch (L.kind) {
    case Kind::Finite:
      return Raw{ff_inv(L, a.c), {}, {}};
    case Kind::Transcendental:
      return frac_inv(L, a);
    case Kind::Algebraic:
      return alg_inv(L, a);
  }
  return {};
}

Raw pow(const Level& L, const Raw& a, unsigned long long n) {
  if (L.kind == Kind::Finite) return Raw{ff_pow(L, a.c, n), {}, {}};
  Raw result = L.unit, base = a;
  while (n > 0) {
    if (n & 1u) result = mul(L, result, base);
    n >>= 1u;
    if (n > 0) base = mul(L, base, base);
  }
  return result;
}

Raw frobenius(const Level& L, const Raw& a) {
  if (is_zero(a)) return a;
  if (L.kind == Kind::Transcendental) {
    const Level& P = *L.parent;
    auto spread = [&](const RPoly& src) {
      RPoly out;
      if (src.empty()) return out;
      out.resize((src.size() - 1) * L.p + 1);
      for (std::size_t i = 0; i < src.size(); ++i) out[i * L.p] = frobenius(P, src[i]);
      return out;
    };
    Raw r;
    r.num = spread(a.num);
    r.den = spread(a.den);
    return r;
  }
  return pow(L, a, L.p);
}

std::optional<Raw> pth_root(const Level& L, const Raw& a) {
  if (is_zero(a)) return a;
  switch (L.kind) {
    case Kind::Finite:
      return Raw{ff_pow(L, a.c, L.q / L.p), {}, {}};
    case Kind::Transcendental: {
      auto n = poly_pth_root(*L.parent, a.num);
      if (!n) return std::nullopt;
      auto d = poly_pth_root(*L.parent, a.den);
      if (!d) return std::nullopt;
      Raw r;
      r.num = std::move(*n);
      r.den = std::move(*d);
      return r;
    }
    case Kind::Algebraic: {
      const Level& P = *L.parent;
      const std::size_t n = L.degree();
      // a = sum_k u_k t^(pk); solve for u, then take coefficient roots
      Raw gen;
      gen.num = {Raw{}, P.unit};
      Raw genp = pow(L, gen, L.p);
      std::vector<RPoly> system(n, RPoly(n));
      Raw cur = L.unit;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) system[l][k] = l < cur.num.size() ? cur.num[l] : Raw{};
        cur = mul(L, cur, genp);
      }
      auto u = solve_square(P, system, a.num);
      if (!u) throw Error(ErrorKind::Internal, "p-th power basis is singular");
      Raw r;
      for (std::size_t k = 0; k < n; ++k) {
        auto root = pth_root(P, (*u)[k]);
        if (!root) return std::nullopt;
        r.num.push_back(std::move(*root));
      }
      trim(r.num);
      return r;
    }
  }
  return std::nullopt;
}

std::optional<Raw> sqrt(const Level& L, const Raw& a) {
  if (L.p == 2) return pth_root(L, a);
  if (is_zero(a)) return a;
  if (L.finite_tower) return finite_search_sqrt(L, a);
  switch (L.kind) {
    case Kind::Transcendental: {
      const Level& P = *L.parent;
      auto lc_root = sqrt(P, a.num.back());
      if (!lc_root) return std::nullopt;
      auto n = monic_poly_sqrt(P, pscale(P, a.num, inv(P, a.num.back())));
      if (!n) return std::nullopt;
      RPoly d;
      if (!a.den.empty()) {
        auto dr = monic_poly_sqrt(P, a.den);
        if (!dr) return std::nullopt;
        d = std::move(*dr);
      }
      Raw r;
      r.num = pscale(P, *n, *lc_root);
      if (d.size() > 1) r.den = std::move(d);
      return r;
    }
    case Kind::Algebraic:
      if (L.degree() == 2) return quadratic_step_sqrt(L, a);
      if (L.degree() == 1) {
        auto r = sqrt(*L.parent, a.num.empty() ? Raw{} : a.num[0]);
        if (!r) return std::nullopt;
        return lift1(L, *r);
      }
      throw Error(ErrorKind::Unsupported, "square roots over algebraic steps of degree > 2");
    case Kind::Finite:
      break;
  }
  return std::nullopt;
}

// ---- polynomials ----

void trim(RPoly& a) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

RPoly padd(const Level& P, const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i >= a.size())
      r[i] = b[i];
    else if (i >= b.size())
      r[i] = a[i];
    else
      r[i] = add(P, a[i], b[i]);
  }
  trim(r);
  return r;
}

RPoly psub(const Level& P, const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i >= a.size())
      r[i] = neg(P, b[i]);
    else if (i >= b.size())
      r[i] = a[i];
    else
      r[i] = sub(P, a[i], b[i]);
  }
  trim(r);
  return r;
}

RPoly pmul(const Level& P, const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      r[i + j] = add(P, r[i + j], mul(P, a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

RPoly pscale(const Level& P, const RPoly& a, const Raw& c) {
  if (is_zero(c)) return {};
  if (c == P.unit) return a;
  RPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(P, a[i], c);
  trim(r);
  return r;
}

void pdivrem(const Level& P, const RPoly& a, const RPoly& b, RPoly& q, RPoly& r) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  r = a;
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Raw{});
  const bool monic = b.back() == P.unit;
  Raw li = monic ? P.unit : inv(P, b.back());
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Raw f = monic ? r.back() : mul(P, r.back(), li);
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (is_zero(b[i])) continue;
      r[shift + i] = sub(P, r[shift + i], mul(P, f, b[i]));
    }
    r.back() = Raw{};
    trim(r);
  }
  trim(q);
}

RPoly pgcd(const Level& P, RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly q, r;
    pdivrem(P, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && !(a.back() == P.unit)) a = pscale(P, a, inv(P, a.back()));
  return a;
}

// ---- finite towers ----

std::optional<std::uint64_t> cardinality(const Level& L) {
  if (!L.finite_tower) return std::nullopt;
  if (L.kind == Kind::Finite) return L.q;
  auto below = cardinality(*L.parent);
  if (!below) return std::nullopt;
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < L.degree(); ++i) {
    if (c > (std::uint64_t{1} << 40) / *below) return std::nullopt;
    c *= *below;
  }
  return c;
}

std::vector<Raw> enumerate(const Level& L) {
  std::vector<Raw> out;
  if (L.kind == Kind::Finite) {
    out.reserve(L.q);
    for (std::uint32_t v = 0; v < L.q; ++v) out.push_back(Raw{v, {}, {}});
    return out;
  }
  if (L.kind != Kind::Algebraic || !L.finite_tower)
    throw Error(ErrorKind::Unsupported, "enumeration of an infinite field");
  const auto below = enumerate(*L.parent);
  const std::size_t n = L.degree();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Raw r;
    r.num.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.num[i] = below[idx[i]];
    trim(r.num);
    out.push_back(std::move(r));
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == below.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

// ---- rendering ----

namespace {

struct Term {
  std::uint32_t coeff = 1;
  std::string atom;
  std::vector<std::pair<std::string, std::size_t>> vars;
};

void collect(const Level& L, const Raw& r, std::vector<Term>& out);

void collect_poly(const Level& P, const RPoly& coeffs, const std::string& var, std::vector<Term>& out) {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (is_zero(coeffs[i])) continue;
    std::vector<Term> sub;
    collect(P, coeffs[i], sub);
    for (auto& t : sub) {
      if (i > 0) t.vars.emplace_back(var, i);
      out.push_back(std::move(t));
    }
  }
}

void collect(const Level& L, const Raw& r, std::vector<Term>& out) {
  if (is_zero(r)) return;
  switch (L.kind) {
    case Kind::Finite: {
      std::vector<std::uint32_t> digits;
      for (std::uint32_t v = r.c; v != 0; v /= L.p) digits.push_back(v % L.p);
      for (std::size_t e = digits.size(); e-- > 0;) {
        if (digits[e] == 0) continue;
        Term t;
        t.coeff = digits[e];
        if (e > 0) t.vars.emplace_back(L.name, e);
        out.push_back(std::move(t));
      }
      return;
    }
    case Kind::Transcendental:
      if (!r.den.empty()) {
        Term t;
        t.atom = "(" + render_poly(*L.parent, r.num, L.name) + ")/(" + render_poly(*L.parent, r.den, L.name) + ")";
        out.push_back(std::move(t));
        return;
      }
      collect_poly(*L.parent, r.num, L.name, out);
      return;
    case Kind::Algebraic:
      collect_poly(*L.parent, r.num, L.name, out);
      return;
  }
}

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const Term& t = terms[n];
    if (n > 0) s += " + ";
    std::vector<std::string> parts;
    if (t.coeff != 1 || (t.atom.empty() && t.vars.empty())) parts.push_back(std::to_string(t.coeff));
    if (!t.atom.empty()) parts.push_back(t.atom);
    for (const auto& [name, e] : t.vars) parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k > 0) s += "*";
      s += parts[k];
    }
  }
  return s;
}

}  // namespace

std::string render(const Level& L, const Raw& r) {
  std::vector<Term> terms;
  collect(L, r, terms);
  return join(terms);
}

std::string render_poly(const Level& P, const RPoly& coeffs, const std::string& var) {
  std::vector<Term> terms;
  collect_poly(P, coeffs, var, terms);
  return join(terms);
}

}  // namespace cyclink::detail
