#include <gtest/gtest.h>

#include "cyclink/linkage.hpp"
#include "support.hpp"

using namespace cyclink;

namespace {

FieldTower tower(unsigned q, std::initializer_list<const char*> vars) {
  FieldTower F = FieldTower::finite(q);
  for (auto v : vars) F = F.adjoin_transcendental(v);
  return F;
}

Budget small_budget() {
  Budget b;
  b.max_candidates = 2000;
  b.random_candidates = 16;
  return b;
}

// y^-1 from y^p + s1 y^(p-1) + ... + s_p = 0
AlgebraElement inverse_by_charpoly(const AlgebraElement& y) {
  const auto cc = char_coeffs(y);
  const auto& A = y.algebra();
  AlgebraElement acc = A.one();
  for (std::size_t k = 0; k + 1 < cc.s.size(); ++k) acc = acc * y + A.scalar(cc.s[k]);
  return (-cc.s.back()).inverse() * acc;
}

}  // namespace

TEST(NormWitness, Examples) {
  auto F = tower(2, {"a", "b"});
  auto a = F.generator("a"), b = F.generator("b");
  auto A = SymbolAlgebra::make(2, a, b);
  auto r = reduced_norm_witness(A, a + b, small_budget());
  ASSERT_TRUE(is_yes(r));
  EXPECT_EQ(std::get<0>(r).value, A.i() + A.j());

  auto j = reduced_norm_witness(A, b, small_budget());
  ASSERT_TRUE(is_yes(j));
  EXPECT_EQ(std::get<0>(j).value, A.j());

  auto one = reduced_norm_witness(A, F.one(), small_budget());
  ASSERT_TRUE(is_yes(one));
  EXPECT_EQ(std::get<0>(one).value, A.one());

  try {
    reduced_norm_witness(A, F.zero(), small_budget());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GammaZero);
  }
}

TEST(NormWitness, FiniteFieldsAlwaysSucceed) {
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    auto F = FieldTower::finite(q);
    const unsigned p = F.characteristic();
    for (const auto& alpha : F.elements())
      for (const auto& beta : F.elements()) {
        if (beta.is_zero()) continue;
        auto A = SymbolAlgebra::make(p, alpha, beta);
        for (const auto& gamma : F.elements()) {
          if (gamma.is_zero()) continue;
          auto r = reduced_norm_witness(A, gamma, small_budget());
          ASSERT_TRUE(is_yes(r));
          EXPECT_EQ(char_coeffs(std::get<0>(r).value).norm(), gamma);
        }
      }
  }
}

TEST(H3Class, Examples) {
  auto F = tower(2, {"a", "b", "x"});
  auto a = F.generator("a"), b = F.generator("b"), x = F.generator("x");

  auto self = h3_class_trivial({2, a, b, b}, small_budget());
  ASSERT_TRUE(is_yes(self));
  EXPECT_EQ(std::get<0>(self).value, SymbolAlgebra::make(2, a, b).j());

  auto sum = h3_class_trivial({2, a, b, a + b}, small_budget());
  ASSERT_TRUE(is_yes(sum));
  auto A = SymbolAlgebra::make(2, a, b);
  EXPECT_EQ(std::get<0>(sum).value, A.i() + A.j());

  auto nontrivial = h3_class_trivial({2, a, b, x}, small_budget());
  ASSERT_TRUE(is_no(nontrivial));
  const auto& cert = std::get<1>(nontrivial).value;
  EXPECT_EQ(cert.variable, "x");
  EXPECT_TRUE(cert.verify());
}

TEST(H3Class, RendersSymbolically) {
  auto F = tower(3, {"x"});
  auto x = F.generator("x");
  DifferentialSymbolClass c{3, x, x + F.one(), x};
  EXPECT_EQ(c.to_string(), "x dlog(x + 1) ^ dlog(x)");
  EXPECT_TRUE(c.same_representation(c));
  EXPECT_FALSE(c.same_representation({3, -x, x + F.one(), x}));
}

TEST(MakeLinked, WorkedExample) {
  auto F = tower(2, {"a", "b"});
  auto a = F.generator("a"), b = F.generator("b");
  auto A = SymbolAlgebra::make(2, a, b);
  auto w = make_inseparably_linked(a, b, a + b, A.i() + A.j());
  EXPECT_EQ(w.extension, F);
  EXPECT_EQ(w.extension_degree(), 1u);
  EXPECT_EQ(w.f, (Poly{F.one(), F.one()}));
  EXPECT_EQ(w.z, A.scalar(a) + A.j() + A.i() * A.j());
  EXPECT_EQ(w.z.to_string(), "a + j + i*j");
  EXPECT_EQ(w.slot, a * a + a * b);
  EXPECT_EQ(w.z * w.z, A.scalar(a * a + a * b));
  EXPECT_TRUE(w.verify());
}

TEST(MakeLinked, SelfLinkage) {
  auto F = tower(2, {"a", "b"});
  auto a = F.generator("a"), b = F.generator("b");
  auto A = SymbolAlgebra::make(2, a, b);
  auto w = make_inseparably_linked(a, b, b, A.j());
  EXPECT_EQ(w.f, (Poly{F.one()}));
  EXPECT_EQ(w.z, A.j());
  EXPECT_EQ(w.slot, b);
  EXPECT_TRUE(w.verify());
}

TEST(MakeLinked, Errors) {
  auto F = tower(2, {"a", "b"});
  auto a = F.generator("a"), b = F.generator("b");
  auto A = SymbolAlgebra::make(2, a, b);
  auto expect_kind = [](auto fn, ErrorKind kind) {
    try {
      fn();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind);
    }
  };
  expect_kind([&] { make_inseparably_linked(a, b, a, A.j()); }, ErrorKind::NormMismatch);
  expect_kind([&] { make_inseparably_linked(a, b, F.zero(), A.j()); }, ErrorKind::GammaZero);
  auto G = tower(5, {"x"});
  auto B = SymbolAlgebra::make(5, G.generator("x"), G.generator("x"));
  expect_kind([&] { make_inseparably_linked(G.generator("x"), G.generator("x"), G.generator("x"), B.j()); },
              ErrorKind::UnsupportedPrime);
}

TEST(MakeLinked, CharacteristicThreeOverGF3) {
  // every t of support <= 3 in every [alpha, beta) over GF(3)
  auto F = FieldTower::finite(3);
  const auto elems = F.elements();
  std::size_t witnesses = 0;
  for (const auto& alpha : elems)
    for (const auto& beta : elems) {
      if (beta.is_zero()) continue;
      auto A = SymbolAlgebra::make(3, alpha, beta);
      std::uint64_t used = 0;
      for_each_sparse_tuple(A.dimension(), elems, 834, used, [&](const std::vector<FieldElem>& c) {
        auto t = A.from_coeffs(c);
        auto gamma = char_coeffs(t).norm();
        if (gamma.is_zero()) return false;
        auto w = make_inseparably_linked(alpha, beta, gamma, t);
        EXPECT_TRUE(w.verify());
        EXPECT_LE(w.extension_degree(), 2u);
        EXPECT_EQ(w.z.pow(3), w.algebra.scalar(w.slot));
        ++witnesses;
        return false;
      });
    }
  EXPECT_GT(witnesses, 500u);
}

TEST(MakeLinked, CharacteristicThreeFunctionField) {
  std::mt19937_64 rng(0x5eed0501);
  auto F = tower(3, {"x"});
  std::size_t quadratic = 0;
  for (int n = 0; n < 10; ++n) {
    auto A = cyclink::testing::random_symbol(F, rng);
    auto t = cyclink::testing::random_algebra_element(A, rng);
    auto gamma = char_coeffs(t).norm();
    if (gamma.is_zero()) continue;
    auto w = make_inseparably_linked(A.alpha(), A.beta(), gamma, t);
    ASSERT_TRUE(w.verify()) << A.to_string();
    EXPECT_LE(w.extension_degree(), 2u);
    if (w.extension_degree() == 2) ++quadratic;
    EXPECT_EQ(w.slot, norm_Fi(w.algebra, w.f) * w.extension.lift(gamma));
  }
  RecordProperty("quadratic_extensions", static_cast<int>(quadratic));
}

TEST(MakeLinked, CharacteristicTwoCompleteness) {
  std::mt19937_64 rng(0x5eed0502);
  auto F = tower(2, {"x"});
  for (int n = 0; n < 30; ++n) {
    auto A = cyclink::testing::random_symbol(F, rng);
    auto t = cyclink::testing::random_algebra_element(A, rng);
    auto gamma = char_coeffs(t).norm();
    if (gamma.is_zero()) continue;
    auto w = make_inseparably_linked(A.alpha(), A.beta(), gamma, t);
    ASSERT_TRUE(w.verify());
    EXPECT_EQ(w.extension_degree(), 1u);
  }
}

TEST(MakeLinked, WitnessesPassLinkageVerification) {
  std::mt19937_64 rng(0x5eed0503);
  for (unsigned p : {2u, 3u}) {
    auto F = tower(p, {"x"});
    int checked = 0;
    for (int n = 0; n < 10; ++n) {
      auto A = cyclink::testing::random_symbol(F, rng);
      auto t = cyclink::testing::random_algebra_element(A, rng);
      auto gamma = char_coeffs(t).norm();
      if (gamma.is_zero()) continue;
      auto w = make_inseparably_linked(A.alpha(), A.beta(), gamma, t);
      if (w.slot.pth_root()) continue;
      auto K = w.extension;
      auto B = SymbolAlgebra::make(p, A.alpha(), gamma).over(K);
      auto zb = B.from_i_poly(w.f) * B.j();
      auto r = verify_inseparable_linkage(w.algebra, B, w.slot, small_budget(), {w.z, zb});
      ASSERT_TRUE(r);
      EXPECT_TRUE(r.evidence->verify());
      ++checked;
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(MakeLinked, AgreesWithNormWitnesses) {
  std::mt19937_64 rng(0x5eed0504);
  for (unsigned p : {2u, 3u}) {
    auto F = tower(p, {"x"});
    for (int n = 0; n < 10; ++n) {
      auto A = cyclink::testing::random_symbol(F, rng);
      auto gamma = random_nonzero(F, rng, 1);
      auto r = reduced_norm_witness(A, gamma, small_budget());
      if (!is_yes(r)) continue;
      EXPECT_TRUE(make_inseparably_linked(A.alpha(), A.beta(), gamma, std::get<0>(r).value).verify());
    }
  }
}

TEST(ConstructDelta, Examples) {
  auto F = tower(2, {"a", "b"});
  auto a = F.generator("a"), b = F.generator("b");
  auto A = SymbolAlgebra::make(2, a, b);

  auto d = construct_delta(A.j());
  EXPECT_EQ(d.i_prime, A.i());
  EXPECT_EQ(d.delta, a);

  for (const auto& z : {A.i() * A.j(), A.scalar(a) + A.j() + A.i() * A.j()}) {
    auto e = construct_delta(z);
    EXPECT_EQ(z * e.i_prime, (e.i_prime + A.one()) * z);
    EXPECT_EQ(e.i_prime * e.i_prime - e.i_prime, A.scalar(e.delta));
  }

  try {
    construct_delta(A.scalar(a));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
  try {
    construct_delta(A.i());  // i^2 = i + a is not central
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
}

TEST(ConstructDelta, CharacteristicThree) {
  std::mt19937_64 rng(0x5eed0505);
  auto F = tower(3, {"x"});
  for (int n = 0; n < 10; ++n) {
    auto A = cyclink::testing::random_symbol(F, rng);
    auto g = random_nonzero(F, rng, 1);
    auto z = A.from_i_poly({g, F.one()}) * A.j();
    auto e = construct_delta(z);
    EXPECT_EQ(z * e.i_prime, (e.i_prime + A.one()) * z);
    EXPECT_TRUE((e.i_prime.pow(3) - e.i_prime - A.scalar(e.delta)).is_zero());
  }
}

TEST(VerifyLink, Examples) {
  auto F = tower(2, {"a", "b"});
  auto a = F.generator("a"), b = F.generator("b");
  auto A = SymbolAlgebra::make(2, a, b);

  auto same = verify_inseparable_linkage(A, A, b, small_budget());
  ASSERT_TRUE(same);
  EXPECT_EQ(same.evidence->z_a, A.j());
  EXPECT_EQ(same.evidence->z_b, A.j());

  auto B = SymbolAlgebra::make(2, a, a + b);
  auto r = verify_inseparable_linkage(A, B, a * a + a * b, small_budget(), {A.scalar(a) + A.j() + A.i() * A.j()});
  ASSERT_TRUE(r);
  EXPECT_EQ(r.evidence->z_a, A.scalar(a) + A.j() + A.i() * A.j());
  EXPECT_TRUE(r.evidence->verify());
  // z_B = (1 + i) j: the scale rewrite of B's j by 1 + i, N(1 + i) = a
  auto scaled = rewrite_scale_beta(B, {F.one(), F.one()});
  EXPECT_EQ(scaled.target.beta(), a * a + a * b);
  auto zb = B.from_i_poly({F.one(), F.one()}) * B.j();
  EXPECT_EQ(scaled.witness.j_image, zb);
  auto hinted = verify_inseparable_linkage(A, B, a * a + a * b, small_budget(), {zb});
  ASSERT_TRUE(hinted);
  EXPECT_EQ(hinted.evidence->z_b, zb);

  auto unhinted = verify_inseparable_linkage(A, B, a * a + a * b, small_budget());
  ASSERT_TRUE(unhinted);
  EXPECT_TRUE(unhinted.evidence->verify());

  for (const auto& slot : {F.one(), a * a, F.zero()}) {
    try {
      verify_inseparable_linkage(A, B, slot, small_budget());
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SlotHasPthRoot);
    }
  }
}

TEST(CyclicLink, Examples) {
  auto F = tower(2, {"a", "b", "c"});
  auto a = F.generator("a"), b = F.generator("b"), c = F.generator("c");
  auto A = SymbolAlgebra::make(2, a, b);

  auto shared = cyclic_linkage_check(A, SymbolAlgebra::make(2, a, c), small_budget());
  ASSERT_TRUE(is_yes(shared));
  EXPECT_TRUE(std::get<0>(shared).value.verify());

  auto translated = cyclic_linkage_check(A, SymbolAlgebra::make(2, a + c * c + c, a), small_budget());
  ASSERT_TRUE(is_yes(translated));
  const auto& ev = std::get<0>(translated).value;
  EXPECT_TRUE(ev.verify());
  EXPECT_EQ(ev.value, a);

  auto G = tower(2, {"a", "b"});
  auto ga = G.generator("a"), gb = G.generator("b");
  Budget tiny;
  tiny.max_candidates = 4;
  tiny.random_candidates = 0;
  auto swapped = cyclic_linkage_check(SymbolAlgebra::make(2, ga, gb), SymbolAlgebra::make(2, gb, ga), tiny);
  EXPECT_TRUE(is_unknown(swapped));
}

TEST(Remark, InvertedClassesAgree) {
  std::mt19937_64 rng(0x5eed0506);
  for (unsigned p : {2u, 3u}) {
    auto F = tower(p, {"x"});
    int witnessed = 0;
    for (int n = 0; n < 10; ++n) {
      auto A = cyclink::testing::random_symbol(F, rng);
      auto t = cyclink::testing::random_algebra_element(A, rng);
      auto gamma = char_coeffs(t).norm();
      if (gamma.is_zero()) continue;
      DifferentialSymbolClass c{p, A.alpha(), A.beta(), gamma};
      DifferentialSymbolClass inv{p, -A.alpha(), A.beta().inverse(), gamma.inverse()};
      if (p == 2)
        EXPECT_TRUE(c.same_representation({p, -A.alpha(), A.beta(), gamma}));
      else
        EXPECT_FALSE(c.same_representation(inv));

      // transport t^-1 into [-alpha, beta^-1) along the inverse rewrite
      auto B = rewrite_invert(A).target;
      auto back = rewrite_invert(B);
      ASSERT_EQ(back.target, A);
      auto t_inv = substitute(inverse_by_charpoly(t), back.witness.i_image, back.witness.j_image);
      ASSERT_EQ(t_inv.algebra(), B);
      EXPECT_EQ(char_coeffs(t).norm(), c.gamma);
      EXPECT_EQ(char_coeffs(t_inv).norm(), inv.gamma);
      // both classes trivial, and the solver links both
      EXPECT_TRUE(make_inseparably_linked(c.alpha, c.beta, c.gamma, t).verify());
      EXPECT_TRUE(make_inseparably_linked(inv.alpha, inv.beta, inv.gamma, t_inv).verify());
      ++witnessed;
    }
    EXPECT_GT(witnessed, 5);
  }
}
