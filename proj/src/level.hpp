#pragma once

// Internal representation of a tower level and the raw arithmetic on it.
// Raw values carry no type information; every routine takes the level the
// value lives on.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclink/field.hpp"

namespace cyclink::detail {

using RPoly = std::vector<Raw>;

struct Level {
  enum class Kind { Finite, Transcendental, Algebraic };

  Kind kind = Kind::Finite;
  std::shared_ptr<const Level> parent;
  std::string name;
  unsigned p = 2;
  std::size_t steps = 0;       // steps up to and including this level
  bool finite_tower = true;    // no transcendental step at or below
  Raw unit;

  // finite base GF(q), q = p^k
  unsigned k = 1;
  std::uint32_t q = 2;
  std::vector<unsigned> modulus;       // monic, low to high
  std::vector<std::uint32_t> exp_tab;  // g^e for e < q-1
  std::vector<std::uint32_t> log_tab;  // inverse of exp_tab, log_tab[0] unused

  // algebraic step
  RPoly minpoly;  // monic over parent

  std::size_t degree() const { return kind == Kind::Algebraic ? minpoly.size() - 1 : 0; }
};

inline bool is_zero(const Raw& r) { return r.c == 0 && r.num.empty() && r.den.empty(); }

bool same_level(const Level* a, const Level* b);

Raw from_int(const Level& L, long long n);
Raw lift1(const Level& L, Raw parent_value);

Raw add(const Level& L, const Raw& a, const Raw& b);
Raw neg(const Level& L, const Raw& a);
Raw sub(const Level& L, const Raw& a, const Raw& b);
Raw mul(const Level& L, const Raw& a, const Raw& b);
Raw inv(const Level& L, const Raw& a);
Raw pow(const Level& L, const Raw& a, unsigned long long n);
Raw frobenius(const Level& L, const Raw& a);
std::optional<Raw> pth_root(const Level& L, const Raw& a);
std::optional<Raw> sqrt(const Level& L, const Raw& a);

// polynomials over a level
void trim(RPoly& a);
RPoly padd(const Level& P, const RPoly& a, const RPoly& b);
RPoly psub(const Level& P, const RPoly& a, const RPoly& b);
RPoly pmul(const Level& P, const RPoly& a, const RPoly& b);
RPoly pscale(const Level& P, const RPoly& a, const Raw& c);
void pdivrem(const Level& P, const RPoly& a, const RPoly& b, RPoly& q, RPoly& r);
RPoly pgcd(const Level& P, RPoly a, RPoly b);

std::optional<std::uint64_t> cardinality(const Level& L);
std::vector<Raw> enumerate(const Level& L);

std::string render(const Level& L, const Raw& r);
std::string render_poly(const Level& P, const RPoly& coeffs, const std::string& var);

}  // namespace cyclink::detail
