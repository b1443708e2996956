// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cyclink/cli.hpp"
#include "cyclink/essdim.hpp"
#include "support.hpp"

using namespace cyclink;
using cyclink::testing::random_algebra_element;
using cyclink::testing::random_symbol;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

FieldTower tower(unsigned q, std::initializer_list<const char*> vars) {
  FieldTower F = FieldTower::finite(q);
  for (auto v : vars) F = F.adjoin_transcendental(v);
  return F;
}

std::vector<FieldTower> configurations() {
  return {tower(2, {}), tower(4, {}), tower(2, {"x"}), tower(3, {}), tower(3, {"x"}), tower(5, {})};
}

std::string ratio(std::size_t ok, std::size_t n) { return std::to_string(ok) + "/" + std::to_string(n); }

Verdict characteristic_identity() {
  std::mt19937_64 rng(1001);
  const auto configs = configurations();
  std::size_t ok = 0, n = 0;
  const auto start = Clock::now();
  for (std::size_t k = 0; k < 1000; ++k) {
    const FieldTower& F = configs[k % configs.size()];
    auto A = random_symbol(F, rng);
    auto y = random_algebra_element(A, rng);
    ok += satisfies_char_identity(y, char_coeffs(y));
    ++n;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return {ok == n && secs < 60.0, ratio(ok, n) + " elements over p in {2,3,5}, " + std::to_string(secs) + " s"};
}

Verdict norm_trace_laws() {
  std::mt19937_64 rng(1002);
  std::size_t ok = 0, n = 0;
  for (const auto& F : configurations()) {
    auto A = random_symbol(F, rng);
    for (int k = 0; k < 500; ++k) {
      if (k % 100 == 0) A = random_symbol(F, rng);
      auto x = random_algebra_element(A, rng), y = random_algebra_element(A, rng);
      auto cx = char_coeffs(x), cy = char_coeffs(y);
      ok += char_coeffs(x * y).norm() == cx.norm() * cy.norm() && char_coeffs(x + y).trace() == cx.trace() + cy.trace();
      ++n;
    }
  }
  return {ok == n, ratio(ok, n) + " pairs (500 per configuration)"};
}

Verdict rewrites() {
  std::mt19937_64 rng(1003);
  const auto configs = configurations();
  std::size_t translate = 0, scale = 0, invert = 0, involution = 0;
  for (int k = 0; k < 200; ++k) {
    const FieldTower& F = configs[k % configs.size()];
    auto A = random_symbol(F, rng);
    translate += rewrite_translate_alpha(A, random_element(F, rng, 1)).witness.verify();
    Poly f;
    do {
      f.clear();
      for (unsigned m = 0; m < A.p(); ++m) f.push_back(random_element(F, rng, 1));
    } while (norm_Fi(A, f).is_zero());
    scale += rewrite_scale_beta(A, f).witness.verify();
    auto once = rewrite_invert(A);
    auto twice = rewrite_invert(once.target);
    invert += once.witness.verify() && twice.witness.verify();
    involution += twice.target.alpha() == A.alpha() && twice.target.beta() == A.beta();
  }
  const bool pass = translate == 200 && scale == 200 && invert == 200 && involution == 200;
  return {pass, "translate " + ratio(translate, 200) + ", scale " + ratio(scale, 200) + ", invert " +
                    ratio(invert, 200) + ", double invert " + ratio(involution, 200)};
}

Verdict worked_witness() {
  auto F = tower(2, {"a", "b"});
  auto a = F.generator("a"), b = F.generator("b");
  auto A = SymbolAlgebra::make(2, a, b);
  auto t = A.i() + A.j();
  const FieldElem gamma = char_coeffs(t).norm();
  auto w = make_inseparably_linked(a, b, gamma, t);
  const bool values = gamma == a + b && w.f == Poly{F.one(), F.one()} &&
                      w.z == A.scalar(a) + A.j() + A.i() * A.j() && w.z * w.z == A.scalar(a * a + a * b) &&
                      w.slot == a * a + a * b && w.extension == F && w.verify();
  Budget budget;
  budget.max_candidates = 2000;
  auto r = verify_inseparable_linkage(A, SymbolAlgebra::make(2, a, a + b), a * a + a * b, budget);
  const bool accepted = r && r.evidence->verify();
  return {values && accepted, "gamma = " + gamma.to_string() + ", f = " + poly_to_string(w.f, "i") + ", z = " +
                                  w.z.to_string() + ", z^2 = " + (w.z * w.z).to_string() +
                                  ", verify_inseparable_linkage " + (accepted ? "accepts" : "rejects")};
}

Verdict p2_completeness() {
  std::mt19937_64 rng(1005);
  auto F = tower(2, {"x"});
  std::size_t ok = 0, n = 0;
  while (n < 100) {
    auto A = random_symbol(F, rng);
    auto t = random_algebra_element(A, rng);
    auto gamma = char_coeffs(t).norm();
    if (gamma.is_zero()) continue;
    ++n;
    try {
      auto w = make_inseparably_linked(A.alpha(), A.beta(), gamma, t);
      ok += w.verify() && w.extension_degree() == 1;
    } catch (const Error&) {
    }
  }
  return {ok == 100, ratio(ok, n) + " with K = F"};
}

Verdict p3_extension_bound() {
  std::size_t ok = 0, decided = 0, quadratic = 0, undecided = 0;
  auto run = [&](const FieldElem& alpha, const FieldElem& beta, const FieldElem& gamma, const AlgebraElement& t) {
    try {
      auto w = make_inseparably_linked(alpha, beta, gamma, t);
      ++decided;
      ok += w.verify() && w.extension_degree() <= 2;
      quadratic += w.extension_degree() == 2;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSolutionInBudget) throw;
      ++undecided;
    }
  };
  // every t of support <= 3 in every [alpha, beta) over GF(3)
  auto G = FieldTower::finite(3);
  const auto elems = G.elements();
  for (const auto& alpha : elems)
    for (const auto& beta : elems) {
      if (beta.is_zero()) continue;
      auto A = SymbolAlgebra::make(3, alpha, beta);
      std::uint64_t used = 0;
      for_each_sparse_tuple(A.dimension(), elems, 834, used, [&](const std::vector<FieldElem>& c) {
        auto t = A.from_coeffs(c);
        auto gamma = char_coeffs(t).norm();
        if (!gamma.is_zero()) run(alpha, beta, gamma, t);
        return false;
      });
    }
  std::mt19937_64 rng(1006);
  auto F = tower(3, {"x"});
  std::size_t random_cases = 0;
  while (random_cases < 50) {
    auto A = random_symbol(F, rng);
    auto t = random_algebra_element(A, rng);
    auto gamma = char_coeffs(t).norm();
    if (gamma.is_zero()) continue;
    ++random_cases;
    run(A.alpha(), A.beta(), gamma, t);
  }
  return {ok == decided && decided > 0,
          ratio(ok, decided) + " decided cases with [K:F] <= 2 (" + std::to_string(quadratic) + " quadratic, " +
              std::to_string(undecided) + " undecided)"};
}

Verdict nonlinkage_and_classes() {
  const auto start = Clock::now();
  Budget budget;
  budget.max_candidates = 500;
  budget.random_candidates = 8;
  bool ok = true;
  std::string detail;
  for (unsigned p : {2u, 3u}) {
    auto F = tower(p, {"a", "b", "x"});
    auto a = F.generator("a"), b = F.generator("b"), x = F.generator("x");
    auto cert = certify_not_inseparably_linked(SymbolAlgebra::make(p, a, b), SymbolAlgebra::make(p, a, x),
                                               DiscreteValuation(F, "x"), budget);
    const bool c = cert && cert->verify();
    LinkedPair pair{p, a, b, x};
    auto cls = classify_essdim_p(pair, budget);
    const bool three = cls.label == EssDimClass::Label::Three && cls.verify(pair);
    ok = ok && c && three;
    detail += "p=" + std::to_string(p) + ": certificate " + (c ? "verified" : "missing") + ", classify " +
              cls.label_name() + "; ";
  }
  auto G = FieldTower::finite(2);
  LinkedPair split{2, G.zero(), G.one(), G.one()};
  auto zero = classify_essdim_p(split, budget);
  auto H = tower(2, {"a", "b"});
  LinkedPair linked{2, H.generator("a"), H.generator("b"), H.generator("a") + H.generator("b")};
  auto two = classify_essdim_p(linked, budget);
  ok = ok && zero.label == EssDimClass::Label::Zero && zero.verify(split) && two.label == EssDimClass::Label::Two &&
       two.verify(linked);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  detail += "(0; 1, 1) " + zero.label_name() + ", (a; b, a+b) " + two.label_name() + ", " + std::to_string(secs) + " s";
  return {ok && secs < 120.0, detail};
}

Verdict finite_splitness() {
  std::size_t ok = 0, n = 0;
  auto check = [&](const SymbolAlgebra& A) {
    ++n;
    auto r = find_zero_divisor(A, Budget{});
    ok += is_yes(r) && std::get<0>(r).value.verify();
  };
  for (unsigned q : {2u, 3u}) {
    auto F = FieldTower::finite(q);
    for (const auto& alpha : F.elements())
      for (const auto& beta : F.elements())
        if (!beta.is_zero()) check(SymbolAlgebra::make(F.characteristic(), alpha, beta));
  }
  std::mt19937_64 rng(1008);
  for (unsigned q : {4u, 9u}) {
    auto F = FieldTower::finite(q);
    for (int k = 0; k < 50; ++k) check(random_symbol(F, rng));
  }
  return {ok == n, ratio(ok, n) + " symbols split with verified zero divisors"};
}

// Seeded runs repeat bit for bit.
bool deterministic() {
  auto once = [] {
    cli::Command c;
    c.verb = "classify";
    c.field = "GF(2)(a)(b)";
    c.alpha = "a";
    c.beta = "b";
    c.gamma = "a + b";
    c.budget.max_candidates = 500;
    c.budget.seed = 7;
    std::string out = cli::execute(c).document.dump();
    std::mt19937_64 rng(1009);
    auto F = tower(3, {"x"});
    auto A = random_symbol(F, rng);
    auto t = random_algebra_element(A, rng);
    auto gamma = char_coeffs(t).norm();
    if (!gamma.is_zero()) out += make_inseparably_linked(A.alpha(), A.beta(), gamma, t).z.to_string();
    Budget b;
    b.max_candidates = 300;
    b.seed = 11;
    auto r = reduced_norm_witness(A, F.generator("x") + F.one(), b);
    out += is_yes(r) ? std::get<0>(r).value.to_string() : std::get<2>(r).reason;
    return out;
  };
  return once() == once();
}

}  // namespace

int main() {
  const auto start = Clock::now();
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"characteristic identity", characteristic_identity},
      {"norm/trace laws", norm_trace_laws},
      {"rewrite self-certification", rewrites},
      {"worked witness reproduction", worked_witness},
      {"p = 2 linkage completeness", p2_completeness},
      {"p = 3 extension bound", p3_extension_bound},
      {"valuation certificate and classification", nonlinkage_and_classes},
      {"finite-field splitness", finite_splitness},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    const auto t0 = Clock::now();
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    failures += !v.pass;
    std::printf("[%s] %d %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", index, c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  const bool same = deterministic();
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  const bool ok9 = same && total < 600.0;
  failures += !ok9;
  std::printf("[%s] 9 wall-clock and determinism: acceptance run %.1f s (< 600 s), seeded reruns %s\n",
              ok9 ? "PASS" : "FAIL", total, same ? "identical" : "differ");
  return failures == 0 ? 0 : 1;
}
