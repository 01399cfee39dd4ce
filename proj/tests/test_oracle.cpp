#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qkc/oracle.hpp"

using namespace qkc;
using oracle::Partition;

namespace {

using QH = std::map<std::pair<Partition, int>, long long>;

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int maxpart) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= maxpart; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(cols);
  return out;
}

}  // namespace

TEST(Oracle, LittlewoodRichardsonExamples) {
  EXPECT_EQ(oracle::lr_product({1}, {1}, 5), (std::map<Partition, long long>{{{2}, 1}, {{1, 1}, 1}}));
  const std::map<Partition, long long> sq = {{{4, 2}, 1},    {{4, 1, 1}, 1}, {{3, 3}, 1},       {{3, 2, 1}, 2},
                                             {{3, 1, 1, 1}, 1}, {{2, 2, 2}, 1}, {{2, 2, 1, 1}, 1}};
  EXPECT_EQ(oracle::lr_product({2, 1}, {2, 1}, 6), sq);
  EXPECT_EQ(oracle::lr_product({2, 1}, {}, 3), (std::map<Partition, long long>{{{2, 1}, 1}}));
  EXPECT_TRUE(oracle::lr_product({1, 1, 1}, {1}, 2).empty());
}

TEST(Oracle, LittlewoodRichardsonMatchesJacobiTrudi) {
  const auto parts = partitions_in_box(3, 3);
  for (const auto& a : parts)
    for (const auto& b : parts) EXPECT_EQ(oracle::lr_product(a, b, 4), qkc::testing::jacobi_trudi_product(a, b, 4));
}

TEST(Oracle, RimHookExamples) {
  auto r = oracle::rim_hook_reduce({3, 1}, 2, 4);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->sign, 1);
  EXPECT_EQ(r->q_degree, 1);
  EXPECT_TRUE(r->shape.empty());
  r = oracle::rim_hook_reduce({2, 1}, 2, 4);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->q_degree, 0);
  EXPECT_EQ(r->shape, (Partition{2, 1}));
  EXPECT_FALSE(oracle::rim_hook_reduce({3}, 2, 4).has_value());
  EXPECT_FALSE(oracle::rim_hook_reduce({1, 1, 1}, 2, 4).has_value());
  // sigma_2 * pt = q sigma_{1,1}.
  r = oracle::rim_hook_reduce({4, 2}, 2, 4);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->q_degree, 1);
  EXPECT_EQ(r->shape, (Partition{1, 1}));
  EXPECT_EQ(r->sign, 1);
  r = oracle::rim_hook_reduce({4, 1}, 3, 5);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->sign, -1);
  EXPECT_EQ(r->q_degree, 1);
  EXPECT_TRUE(r->shape.empty());
}

TEST(Oracle, QuantumProductsOnTwoFour) {
  EXPECT_EQ(oracle::qh_product(2, 4, {1}, {1}), (QH{{{{2}, 0}, 1}, {{{1, 1}, 0}, 1}}));
  EXPECT_EQ(oracle::qh_product(2, 4, {1}, {1, 1}), (QH{{{{2, 1}, 0}, 1}}));
  EXPECT_EQ(oracle::qh_product(2, 4, {1}, {2}), (QH{{{{2, 1}, 0}, 1}}));
  EXPECT_EQ(oracle::qh_product(2, 4, {1}, {2, 1}), (QH{{{{2, 2}, 0}, 1}, {{{}, 1}, 1}}));
  EXPECT_EQ(oracle::qh_product(2, 4, {1}, {2, 2}), (QH{{{{1}, 1}, 1}}));
  EXPECT_EQ(oracle::distance_oracle(2, 4, {1}, {}), 1);
}

TEST(Oracle, QuantumProductIsCommutativeAndNonnegative) {
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      const auto box = oracle::box_partitions(k, n);
      for (const auto& a : box)
        for (const auto& b : box) {
          const QH ab = oracle::qh_product(k, n, a, b);
          EXPECT_EQ(ab, oracle::qh_product(k, n, b, a));
          int deg_a = 0, deg_b = 0;
          for (int v : a) deg_a += v;
          for (int v : b) deg_b += v;
          for (const auto& [key, c] : ab) {
            EXPECT_GT(c, 0);
            int deg = n * key.second;
            for (int v : key.first) deg += v;
            EXPECT_EQ(deg, deg_a + deg_b);
          }
        }
    }
}

TEST(Oracle, PointClassSquares) {
  // X^pt * X^pt = q^{min(k,n-k)} X^{...}; nonzero and a single term.
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
    const Partition pt(k, n - k);
    const QH sq = oracle::qh_product(k, n, pt, pt);
    ASSERT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq.begin()->first.second, std::min(k, n - k));
  }
}

TEST(Oracle, BoxAndComplement) {
  EXPECT_EQ(oracle::box_partitions(2, 4).size(), 6u);
  EXPECT_EQ(oracle::box_partitions(3, 7).size(), 35u);
  EXPECT_EQ(oracle::complement(2, 4, {2, 1}), (Partition{1}));
  EXPECT_EQ(oracle::complement(3, 7, {3, 2}), (Partition{4, 2, 1}));
  EXPECT_TRUE(oracle::complement(2, 4, {2, 2}).empty());
  for (const auto& p : oracle::box_partitions(3, 6)) EXPECT_EQ(oracle::complement(3, 6, oracle::complement(3, 6, p)), p);
}
