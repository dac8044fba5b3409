#include <gtest/gtest.h>

#include "supercong/padic.hpp"
#include "supercong/quadrep.hpp"

using namespace supercong;

namespace {

const FormSpec kSquares{1, 1, 1};
const FormSpec kA3B{1, 3, 1};

}  // namespace

TEST(FindRep, Examples) {
  auto r5 = find_rep(kSquares, 5);
  ASSERT_TRUE(r5);
  EXPECT_EQ(r5->x, 1);
  EXPECT_EQ(r5->y, 2);
  auto r7 = find_rep(kA3B, 7);
  ASSERT_TRUE(r7);
  EXPECT_EQ(r7->x, 2);
  EXPECT_EQ(r7->y, 1);
  EXPECT_FALSE(find_rep(kSquares, 7));
}

TEST(FindRep, MultiplierFourAndNonPrincipalForms) {
  auto r = find_rep({1, 27, 4}, 7);  // 28 = 1 + 27
  ASSERT_TRUE(r);
  EXPECT_EQ(r->x, 1);
  EXPECT_EQ(r->y, 1);
  auto s = find_rep({2, 3, 1}, 5);  // 5 = 2 + 3
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->valid());
  EXPECT_FALSE(find_rep({1, 2, 1}, 7));
}

TEST(Normalize, Examples) {
  Representation r13{3, 2, kSquares, 13};
  Representation n13 = normalize(r13, NormalizationRule::x_mod(4, 1));
  EXPECT_EQ(n13.x, -3);
  EXPECT_EQ(n13.y, 2);
  Representation r7{2, 1, kA3B, 7};
  Representation n7 = normalize(r7, NormalizationRule::x_mod(3, 1));
  EXPECT_EQ(n7.x, -2);
  EXPECT_EQ(n7.y, 1);
  Representation r5{1, 2, kSquares, 5};
  Representation n5 = normalize(r5, NormalizationRule::x_mod(4, 1));
  EXPECT_EQ(n5.x, 1);
  EXPECT_EQ(n5.y, 2);
}

TEST(Normalize, UnsatisfiableRuleThrows) {
  Representation r5{1, 2, kSquares, 5};
  EXPECT_THROW(normalize(r5, NormalizationRule::y_mod(4, 1)), Unsatisfiable);
}

TEST(Admissible, OrderAndDedup) {
  Representation r{3, 0, {1, 1, 1}, 9};
  auto all = admissible(r, NormalizationRule::none());
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].x, 3);
  EXPECT_EQ(all[1].x, -3);
}

TEST(QuadRepProperties, SumOfTwoSquaresParity) {
  for (std::uint64_t p : odd_primes_between(3, 2000)) {
    auto rep = find_rep(kSquares, p);
    if (p % 4 == 3) {
      EXPECT_FALSE(rep) << p;
      continue;
    }
    ASSERT_TRUE(rep) << p;
    EXPECT_TRUE(rep->valid());
    EXPECT_EQ(rep->x % 2, 1) << p;
    EXPECT_EQ(rep->y % 2, 0) << p;
  }
}

TEST(QuadRepProperties, ThreeDividesAMinusOneIsUnique) {
  for (std::uint64_t p : odd_primes_between(5, 2000)) {
    auto rep = find_rep(kA3B, p);
    if (p % 3 == 2) {
      EXPECT_FALSE(rep) << p;
      continue;
    }
    ASSERT_TRUE(rep) << p;
    auto choices = admissible(*rep, NormalizationRule::x_mod(3, 1));
    ASSERT_FALSE(choices.empty());
    for (const auto& c : choices) EXPECT_EQ(c.x, choices.front().x) << p;  // A pinned; B keeps a free sign
  }
}

TEST(QuadRepProperties, NormalizeIdempotentAndValid) {
  const NormalizationRule rules[] = {NormalizationRule::none(), NormalizationRule::x_mod(4, 1), NormalizationRule::y_mod(3, 1)};
  for (std::uint64_t p : odd_primes_between(3, 1000)) {
    for (const FormSpec& f : {kSquares, kA3B, FormSpec{1, 2, 1}, FormSpec{1, 27, 4}, FormSpec{5, 3, 1}}) {
      auto rep = find_rep(f, p);
      if (!rep) continue;
      for (const auto& rule : rules) {
        if (admissible(*rep, rule).empty()) continue;
        Representation once = normalize(*rep, rule);
        EXPECT_TRUE(once.valid());
        EXPECT_TRUE(rule.accepts(once.x, once.y));
        Representation twice = normalize(once, rule);
        EXPECT_EQ(once.x, twice.x);
        EXPECT_EQ(once.y, twice.y);
      }
    }
  }
}

TEST(QuadRepProperties, SignInsensitiveProductIsInvariant) {
  // (x/3) * (10x - p/(2x)) does not change under x -> -x.
  for (std::uint64_t p : odd_primes_between(5, 1000)) {
    auto rep = find_rep({1, 15, 1}, p);
    if (!rep) continue;
    Ring r(p, 2);
    auto value = [&](std::int64_t x) {
      Residue X = r(x);
      return r(jacobi_symbol(x, 3)) * (10 * X - r(static_cast<std::int64_t>(p)) / (2 * X));
    };
    EXPECT_EQ(value(rep->x), value(-rep->x)) << p;
  }
}
