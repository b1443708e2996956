#include <gtest/gtest.h>

#include "cyclink/valuation.hpp"
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

}  // namespace

TEST(Value, Examples) {
  auto F = tower(2, {"a", "x"});
  DiscreteValuation v(F, "x");
  auto x = F.generator("x"), a = F.generator("a");
  EXPECT_EQ(v.value(x), 1);
  // x (x + 1) / x^3: 1 - 3 + 0
  EXPECT_EQ(v.value((x * x + x) / x.pow(3)), -2);
  EXPECT_EQ(v.value((x * x + x) / x.pow(2)), -1);
  EXPECT_EQ(v.value(a), 0);
  EXPECT_EQ(v.value(F.zero()), std::nullopt);
  EXPECT_EQ(v.value(x.pow(5) / (a + x)), 5);
}

TEST(Value, GaussExtensionAboveTheVariable) {
  auto F = tower(3, {"a", "x", "y"});
  DiscreteValuation v(F, "x");
  auto x = F.generator("x"), y = F.generator("y"), a = F.generator("a");
  EXPECT_EQ(v.value(x * y + x * x), 1);
  EXPECT_EQ(v.value(y / x), -1);
  EXPECT_EQ(v.value((x * y + a) / (y + x)), 0);
  // residue of (x y + a) / (y + x) is a / y
  auto Fy = tower(3, {"a", "y"});
  EXPECT_EQ(v.residue_field(), Fy);
  EXPECT_EQ(v.residue((x * y + a) / (y + x)), Fy.generator("a") / Fy.generator("y"));
  EXPECT_TRUE(v.residue(x * y).is_zero());
}

TEST(Value, Residues) {
  auto F = tower(2, {"a", "x"});
  DiscreteValuation v(F, "x");
  auto x = F.generator("x"), a = F.generator("a");
  auto R = tower(2, {"a"});
  EXPECT_EQ(v.residue((x + F.one()) / (x + a)), R.one() / R.generator("a"));
  EXPECT_EQ(v.residue(a + x * a), R.generator("a"));
  EXPECT_THROW(v.residue(F.one() / x), Error);
}

TEST(Value, RejectsBadVariables) {
  auto F = FieldTower::finite(3).adjoin_transcendental("x");
  auto K = F.adjoin_algebraic("s", {-F.generator("x"), F.zero(), F.one()});
  EXPECT_THROW(DiscreteValuation(K, "x"), Error);
  EXPECT_THROW(DiscreteValuation(K, "s"), Error);
  EXPECT_THROW(DiscreteValuation(F, "y"), Error);
}

TEST(Value, ValuationAxioms) {
  std::mt19937_64 rng(0x5eed0401);
  for (const auto& F : {tower(2, {"a", "x"}), tower(3, {"x", "y"})}) {
    for (const auto& var : {std::string("x")}) {
      DiscreteValuation v(F, var);
      for (int n = 0; n < 1000; ++n) {
        auto f = random_nonzero(F, rng, 2), g = random_nonzero(F, rng, 2);
        ASSERT_EQ(*v.value(f * g), *v.value(f) + *v.value(g));
        if (!(f + g).is_zero()) ASSERT_GE(*v.value(f + g), std::min(*v.value(f), *v.value(g)));
        ASSERT_EQ(*v.value(f.frobenius()), static_cast<long long>(F.characteristic()) * *v.value(f));
      }
    }
  }
}

TEST(Analyze, TotallyRamifiedDivision) {
  auto F = tower(2, {"a", "x"});
  auto A = SymbolAlgebra::make(2, F.generator("a"), F.generator("x"));
  auto d = analyze_symbol(DiscreteValuation(F, "x"), A);
  EXPECT_EQ(d.kind, SymbolValuationData::Kind::TotallyRamified);
  EXPECT_EQ(d.value_group, (ValueGroup{1, 2}));
  EXPECT_EQ(d.value_group.to_string(), "(1/2)Z");
  EXPECT_EQ(d.residue_dimension, 2u);
  EXPECT_TRUE(d.residue_extension_nontrivial);
  EXPECT_EQ(d.residue_preimage.status, PreimageResult::Status::CertifiedAbsent);
  EXPECT_EQ(d.residue_alpha, tower(2, {"a"}).generator("a"));
  EXPECT_TRUE(d.dimension_check());
}

TEST(Analyze, Unramified) {
  auto F = tower(2, {"a", "b", "x"});
  auto A = SymbolAlgebra::make(2, F.generator("a"), F.generator("b"));
  auto d = analyze_symbol(DiscreteValuation(F, "x"), A);
  EXPECT_EQ(d.kind, SymbolValuationData::Kind::Unramified);
  EXPECT_EQ(d.value_group, (ValueGroup{1, 1}));
  EXPECT_EQ(d.residue_dimension, 4u);
  auto R = tower(2, {"a", "b"});
  ASSERT_TRUE(d.residue_symbol);
  EXPECT_EQ(*d.residue_symbol, SymbolAlgebra::make(2, R.generator("a"), R.generator("b")));
  EXPECT_TRUE(d.dimension_check());
  // beta = b x^2 has even value: unramified with residue slot b
  auto B = SymbolAlgebra::make(2, F.generator("a"), F.generator("b") * F.generator("x").pow(2));
  auto e = analyze_symbol(DiscreteValuation(F, "x"), B);
  EXPECT_EQ(e.kind, SymbolValuationData::Kind::Unramified);
  EXPECT_EQ(e.residue_symbol->beta(), R.generator("b"));
}

TEST(Analyze, SplitResidueExtension) {
  auto F = tower(4, {"x"});
  auto A = SymbolAlgebra::make(2, F.one(), F.generator("x"));
  auto d = analyze_symbol(DiscreteValuation(F, "x"), A);
  EXPECT_EQ(d.kind, SymbolValuationData::Kind::TotallyRamified);
  EXPECT_FALSE(d.residue_extension_nontrivial);
  ASSERT_TRUE(d.residue_preimage.witness);
  EXPECT_EQ(*d.residue_preimage.witness, FieldTower::finite(4).generator("w"));
}

TEST(Analyze, RejectsNegativeLeftSlotValue) {
  auto F = tower(2, {"x"});
  auto A = SymbolAlgebra::make(2, F.one() / F.generator("x"), F.generator("x"));
  try {
    analyze_symbol(DiscreteValuation(F, "x"), A);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedConfiguration);
  }
}

TEST(CertifyDivision, Examples) {
  auto F = tower(2, {"a", "b"});
  auto A = SymbolAlgebra::make(2, F.generator("a"), F.generator("b"));
  auto r = certify_division(A, small_budget());
  ASSERT_TRUE(is_yes(r));
  const auto& cert = std::get<0>(r).value;
  ASSERT_EQ(cert.chain.size(), 1u);
  EXPECT_EQ(cert.chain[0].variable, "b");
  EXPECT_TRUE(cert.verify());

  auto G = FieldTower::finite(9);
  auto S = SymbolAlgebra::make(3, G.generator("w"), G.generator("w"));
  EXPECT_TRUE(is_no(certify_division(S, small_budget())));

  auto Z = SymbolAlgebra::make(2, F.zero(), F.generator("b"));
  auto z = certify_division(Z, small_budget());
  ASSERT_TRUE(is_no(z));
  EXPECT_EQ(std::get<1>(z).value.u, Z.i());
}

TEST(CertifyDivision, ThroughAnUnramifiedResidue) {
  auto F = tower(3, {"a", "b", "x"});
  auto A = SymbolAlgebra::make(3, F.generator("a"), F.generator("b") * (F.one() + F.generator("x")));
  auto r = certify_division(A, small_budget());
  ASSERT_TRUE(is_yes(r));
  const auto& cert = std::get<0>(r).value;
  ASSERT_EQ(cert.chain.size(), 2u);
  EXPECT_EQ(cert.chain[0].variable, "x");
  EXPECT_EQ(cert.chain[0].kind, SymbolValuationData::Kind::Unramified);
  EXPECT_TRUE(cert.verify());
}

TEST(CertifyDivision, ExclusiveWithZeroDivisors) {
  std::mt19937_64 rng(0x5eed0402);
  auto F = tower(2, {"a", "b"});
  Budget b = small_budget();
  b.max_candidates = 300;
  for (int n = 0; n < 15; ++n) {
    auto A = cyclink::testing::random_symbol(F, rng);
    auto cert = certify_division(A, b);
    auto zd = find_zero_divisor(A, b);
    ASSERT_FALSE(is_yes(cert) && is_yes(zd)) << A.to_string();
    if (is_yes(cert)) EXPECT_TRUE(std::get<0>(cert).value.verify());
  }
}

TEST(NonLinkage, Examples) {
  for (unsigned p : {2u, 3u}) {
    auto F = tower(p, {"a", "b", "x"});
    auto A = SymbolAlgebra::make(p, F.generator("a"), F.generator("b"));
    auto B = SymbolAlgebra::make(p, F.generator("a"), F.generator("x"));
    auto cert = certify_not_inseparably_linked(A, B, DiscreteValuation(F, "x"), small_budget());
    ASSERT_TRUE(cert) << "p = " << p;
    EXPECT_TRUE(cert->verify());
    EXPECT_EQ(cert->ramified.algebra, B);
    EXPECT_EQ(cert->unramified.algebra, A);
    EXPECT_FALSE(cert->argument.empty());
    EXPECT_FALSE(certify_not_inseparably_linked(A, A, DiscreteValuation(F, "x"), small_budget()));
  }
}

TEST(NonLinkage, TamperedCertificateFailsVerification) {
  auto F = tower(2, {"a", "b", "x"});
  auto A = SymbolAlgebra::make(2, F.generator("a"), F.generator("b"));
  auto B = SymbolAlgebra::make(2, F.generator("a"), F.generator("x"));
  auto cert = *certify_not_inseparably_linked(A, B, DiscreteValuation(F, "x"), small_budget());
  auto bad = cert;
  bad.ramified.residue_extension_nontrivial = false;
  EXPECT_FALSE(bad.verify());
  auto swapped = cert;
  std::swap(swapped.ramified, swapped.unramified);
  EXPECT_FALSE(swapped.verify());
  auto other = cert;
  other.residue_division.chain.clear();
  EXPECT_FALSE(other.verify());
}
