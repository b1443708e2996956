#include "cyclink/search.hpp"

namespace cyclink {

namespace {

struct Monomial {
  FieldElem value;
  unsigned degree = 0;
};

FieldElem random_in_prefix(const FieldTower& tower, std::size_t steps, std::mt19937_64& rng, unsigned degree) {
  FieldTower t = tower.prefix(steps);
  if (steps == 0) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(t.base_size() - 1));
    return FieldElem(t, detail::Raw{pick(rng), {}, {}});
  }
  const std::size_t s = steps - 1;
  const unsigned inner = degree > 1 ? 1 : degree;
  if (t.step_kind(s) == StepKind::Algebraic) {
    Poly coords;
    for (std::size_t k = 0; k < t.step_degree(s); ++k) coords.push_back(random_in_prefix(tower, s, rng, inner));
    return t.from_coordinates(coords);
  }
  std::uniform_int_distribution<unsigned> deg_pick(0, degree);
  Poly num;
  for (unsigned k = 0, d = deg_pick(rng); k <= d; ++k) num.push_back(random_in_prefix(tower, s, rng, inner));
  Poly den{tower.prefix(s).one()};
  if (degree > 0 && std::bernoulli_distribution(0.3)(rng)) {
    den.clear();
    std::uniform_int_distribution<unsigned> den_deg(1, degree);
    for (unsigned k = 0, d = den_deg(rng); k < d; ++k) den.push_back(random_in_prefix(tower, s, rng, inner));
    den.push_back(tower.prefix(s).one());
  }
  return t.from_fraction(num, den);
}

}  // namespace

std::vector<FieldElem> small_elements(const FieldTower& tower, unsigned degree, std::size_t cap) {
  std::vector<FieldElem> out;
  if (tower.is_finite()) {
    auto card = tower.cardinality();
    if (card && *card <= cap) return tower.elements();
  }
  std::vector<Monomial> monos{{tower.one(), 0}};
  auto expand = [&](const FieldElem& gen, std::size_t max_exp, bool counts) {
    std::vector<Monomial> next;
    for (const auto& m : monos) {
      FieldElem power = tower.one();
      for (std::size_t e = 0; e <= max_exp; ++e) {
        unsigned d = m.degree + (counts ? static_cast<unsigned>(e) : 0u);
        if (!counts || d <= degree) next.push_back({m.value * power, d});
        power = power * gen;
      }
    }
    monos = std::move(next);
  };
  if (tower.base_degree() > 1) expand(tower.generator("w"), tower.base_degree() - 1, false);
  for (std::size_t s = 0; s < tower.num_steps(); ++s) {
    FieldElem g = tower.generator(tower.step_name(s));
    if (tower.step_kind(s) == StepKind::Algebraic)
      expand(g, tower.step_degree(s) - 1, false);
    else
      expand(g, degree, true);
  }
  std::stable_sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
  const unsigned p = tower.characteristic();
  std::vector<unsigned> digit(monos.size(), 0);
  while (out.size() < cap) {
    FieldElem e = tower.zero();
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (digit[k] != 0) e += tower.from_int(digit[k]) * monos[k].value;
    out.push_back(e);
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == p) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return out;
}

FieldElem random_element(const FieldTower& tower, std::mt19937_64& rng, unsigned degree) {
  return random_in_prefix(tower, tower.num_steps(), rng, degree);
}

FieldElem random_nonzero(const FieldTower& tower, std::mt19937_64& rng, unsigned degree) {
  while (true) {
    FieldElem e = random_element(tower, rng, degree);
    if (!e.is_zero()) return e;
  }
}

}  // namespace cyclink
