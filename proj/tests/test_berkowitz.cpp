#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclink/berkowitz.hpp"

using namespace cyclink;

namespace {

using IntPoly = std::vector<long long>;  // low to high degree

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// det(X I - a) by the Leibniz expansion over Z[X].
IntPoly leibniz_charpoly(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly total(n + 1, 0);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    IntPoly term{sign};
    for (std::size_t r = 0; r < n; ++r) {
      IntPoly entry{-a[r][perm[r]]};
      if (perm[r] == r) entry.push_back(1);
      term = mul(term, entry);
    }
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Berkowitz, MatchesLeibnizExpansion) {
  std::mt19937_64 rng(0x5eed0101);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
      for (auto& row : a)
        for (auto& e : row) e = entry(rng);
      auto got = characteristic_polynomial(a, ValueRing<long long>{0, 1});
      auto want = leibniz_charpoly(a);
      ASSERT_EQ(got.size(), n + 1);
      for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(got[k], want[n - k]) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Berkowitz, SmallCases) {
  auto r = ValueRing<long long>{0, 1};
  EXPECT_EQ(characteristic_polynomial(std::vector<std::vector<long long>>{}, r), (std::vector<long long>{1}));
  // [[1,2],[3,4]]: X^2 - 5X - 2
  EXPECT_EQ(characteristic_polynomial(std::vector<std::vector<long long>>{{1, 2}, {3, 4}}, r),
            (std::vector<long long>{1, -5, -2}));
  // nilpotent shift
  EXPECT_EQ(characteristic_polynomial(std::vector<std::vector<long long>>{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, r),
            (std::vector<long long>{1, 0, 0, 0}));
}
