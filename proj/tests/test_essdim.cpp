#include <gtest/gtest.h>

#include "cyclink/essdim.hpp"
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
  b.max_candidates = 500;
  b.random_candidates = 8;
  return b;
}

}  // namespace

TEST(Descent, Examples) {
  auto F = tower(2, {"a", "b", "x"});
  auto a = F.generator("a"), b = F.generator("b"), x = F.generator("x");
  auto d = descent_generators({2, a, b, x});
  EXPECT_EQ(d.generators, (std::vector<std::string>{"a", "b", "x"}));
  EXPECT_EQ(d.bound, 3u);

  auto e = descent_generators({2, a, b, b});
  EXPECT_EQ(e.generators, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(e.bound, 2u);

  auto f = descent_generators({2, F.zero(), b, b * b});
  EXPECT_EQ(f.generators, (std::vector<std::string>{"b"}));
  EXPECT_EQ(f.bound, 1u);
}

TEST(Descent, AlgebraicStepsDoNotCount) {
  auto F = tower(3, {"x"});
  auto K = F.adjoin_algebraic("s", {-F.generator("x"), F.zero(), F.one()});
  auto s = K.generator("s");
  auto d = descent_generators({3, s, s + K.one(), K.one()});
  EXPECT_EQ(d.generators, (std::vector<std::string>{"s"}));
  EXPECT_EQ(d.bound, 0u);
}

TEST(Classify, Three) {
  for (unsigned p : {2u, 3u}) {
    auto F = tower(p, {"a", "b", "x"});
    LinkedPair pair{p, F.generator("a"), F.generator("b"), F.generator("x")};
    auto c = classify_essdim_p(pair, small_budget());
    EXPECT_EQ(c.label, EssDimClass::Label::Three) << c.label_name();
    ASSERT_TRUE(c.nonlinkage);
    EXPECT_EQ(c.nonlinkage->variable, "x");
    EXPECT_TRUE(c.verify(pair));
  }
}

TEST(Classify, Zero) {
  auto F = FieldTower::finite(2);
  LinkedPair pair{2, F.zero(), F.one(), F.one()};
  auto c = classify_essdim_p(pair, small_budget());
  EXPECT_EQ(c.label, EssDimClass::Label::Zero);
  EXPECT_TRUE(c.verify(pair));

  // alpha in the Artin-Schreier image: both split over a function field too
  auto G = tower(2, {"x"});
  auto x = G.generator("x");
  LinkedPair translated{2, x * x + x, x, x + G.one()};
  auto d = classify_essdim_p(translated, small_budget());
  EXPECT_EQ(d.label, EssDimClass::Label::Zero);
  EXPECT_TRUE(d.verify(translated));
}

TEST(Classify, Two) {
  auto F = tower(2, {"a", "b"});
  auto a = F.generator("a"), b = F.generator("b");
  LinkedPair pair{2, a, b, a + b};
  auto c = classify_essdim_p(pair, small_budget());
  EXPECT_EQ(c.label, EssDimClass::Label::Two) << c.label_name();
  ASSERT_TRUE(c.linkage);
  auto A = SymbolAlgebra::make(2, a, b);
  EXPECT_EQ(c.linkage->z, A.scalar(a) + A.j() + A.i() * A.j());
  ASSERT_TRUE(c.nonsplit);
  EXPECT_EQ(c.nonsplit_which, 'A');
  EXPECT_TRUE(c.verify(pair));
}

TEST(Classify, UnknownBoundsAreJustified) {
  std::mt19937_64 rng(0x5eed0601);
  auto F = tower(2, {"a", "b"});
  Budget b = small_budget();
  b.max_candidates = 100;
  for (int n = 0; n < 6; ++n) {
    LinkedPair pair{2, random_element(F, rng, 1), random_nonzero(F, rng, 1), random_nonzero(F, rng, 1)};
    auto c = classify_essdim_p(pair, b);
    EXPECT_TRUE(c.verify(pair)) << pair.to_string() << " " << c.label_name();
    if (c.label == EssDimClass::Label::Unknown) {
      EXPECT_TRUE(c.lower == 0 || c.lower == 2);
      EXPECT_TRUE(c.upper == 2 || c.upper == 3);
    }
  }
}

TEST(Classify, LargerBudgetKeepsDecidedLabels) {
  auto F = tower(2, {"a", "b", "x"});
  auto a = F.generator("a"), b = F.generator("b"), x = F.generator("x");
  for (const LinkedPair& pair : {LinkedPair{2, a, b, x}, LinkedPair{2, a, b, a + b}, LinkedPair{2, a, b, b}}) {
    Budget lo = small_budget(), hi = small_budget();
    lo.max_candidates = 50;
    hi.max_candidates = 1000;
    auto c_lo = classify_essdim_p(pair, lo);
    auto c_hi = classify_essdim_p(pair, hi);
    if (c_lo.label != EssDimClass::Label::Unknown) EXPECT_EQ(c_lo.label, c_hi.label) << pair.to_string();
    EXPECT_GE(c_hi.lower, c_lo.lower);
    EXPECT_LE(c_hi.upper, c_lo.upper);
  }
}

TEST(Classify, TamperedEvidenceIsRejected) {
  auto F = tower(2, {"a", "b", "x"});
  LinkedPair pair{2, F.generator("a"), F.generator("b"), F.generator("x")};
  auto c = classify_essdim_p(pair, small_budget());
  auto relabeled = c;
  relabeled.label = EssDimClass::Label::Two;
  relabeled.lower = relabeled.upper = 2;
  EXPECT_FALSE(relabeled.verify(pair));
  LinkedPair other{2, F.generator("a"), F.generator("b"), F.generator("b")};
  EXPECT_FALSE(c.verify(other));
}
