#include <gtest/gtest.h>

#include <random>

#include "supercong/padic.hpp"

using namespace supercong;

namespace {

const std::vector<std::uint64_t> kPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 97, 101, 997, 65537, 1000003};

}  // namespace

TEST(Ring, RejectsBadModuli) {
  EXPECT_THROW(Ring(2, 1), InvalidRing);
  EXPECT_THROW(Ring(9, 1), InvalidRing);
  EXPECT_THROW(Ring(7, 0), InvalidRing);
  EXPECT_THROW(Ring(7, 4), InvalidRing);
  EXPECT_NO_THROW(Ring(7, 3));
  Ring r(5, 3);
  EXPECT_EQ(r.modulus(), 125u);
}

TEST(Reduce, Examples) {
  Ring r5(5, 1), r25(5, 2);
  EXPECT_EQ(reduce(rat(3, 2), r5).value(), 4u);
  EXPECT_EQ(reduce(rat(-1, 2), r25).value(), 12u);
  EXPECT_EQ(reduce(rat(0), r25).value(), 0u);
  EXPECT_THROW(reduce(rat(1, 5), r25), DenominatorDivisibleByP);
}

TEST(Inverse, Examples) {
  Ring r25(5, 2);
  EXPECT_EQ(r25.one().inv().value(), 1u);
  EXPECT_EQ(r25(2).inv().value(), 13u);
  EXPECT_THROW(r25(5).inv(), NotInvertible);
}

TEST(LeastResidue, Examples) {
  EXPECT_EQ(least_residue(rat(4), 7), 4u);
  EXPECT_EQ(least_residue(rat(-1, 3), 7), 2u);
  EXPECT_EQ(least_residue(rat(-1, 2), 5), 2u);
  EXPECT_THROW(least_residue(rat(1, 7), 7), DenominatorDivisibleByP);
}

TEST(LegendreSymbol, Examples) {
  EXPECT_EQ(legendre_symbol(1, 13), 1);
  EXPECT_EQ(legendre_symbol(2, 7), 1);
  EXPECT_EQ(legendre_symbol(3, 7), -1);
  EXPECT_EQ(legendre_symbol(14, 7), 0);
  EXPECT_EQ(legendre_symbol(-3, 7), 1);
}

TEST(JacobiSymbol, AgreesWithLegendreOnPrimesAndMultiplies) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::int64_t a = -30; a <= 30; ++a) EXPECT_EQ(jacobi_symbol(a, p), legendre_symbol(a, p));
  }
  for (std::int64_t a = -20; a <= 20; ++a) EXPECT_EQ(jacobi_symbol(a, 51), legendre_symbol(a, 3) * legendre_symbol(a, 17));
}

TEST(FermatQuotient, Examples) {
  Ring r5(5, 1);
  EXPECT_EQ(fermat_quotient(1, r5).value(), 0u);
  EXPECT_EQ(fermat_quotient(2, r5).value(), 3u);
  EXPECT_EQ(fermat_quotient(3, r5).value(), 1u);
  EXPECT_THROW(fermat_quotient(10, r5), BaseDivisibleByP);
  Ring r25(5, 2);
  EXPECT_EQ(fermat_quotient(2, r25).value(), 3u);  // (16-1)/5 = 3 exactly
}

TEST(Harmonic, Examples) {
  Ring r5(5, 1), r25(5, 2);
  EXPECT_EQ(harmonic(0, r25).value(), 0u);
  EXPECT_EQ(harmonic(2, r5).value(), 4u);
  EXPECT_EQ(harmonic(4, r25).value(), 0u);
  EXPECT_THROW(harmonic(5, r25), TermNotInvertible);
  auto table = harmonic_table(r25);
  for (std::uint64_t n = 0; n < 5; ++n) EXPECT_EQ(table[n], harmonic(n, r25).value());
}

TEST(DivByP, Examples) {
  PrimeTower t5(5), t7(7);
  EXPECT_EQ(div_by_p(Residue(t5.ring(3), 0), t5.ring(2)).value(), 0u);
  EXPECT_EQ(div_by_p(Residue(t5.ring(2), 10), t5.ring(1)).value(), 2u);
  EXPECT_EQ(div_by_p(Residue(t7.ring(2), 7), t7.ring(1)).value(), 1u);
  EXPECT_THROW(div_by_p(Residue(t7.ring(2), 8), t7.ring(1)), NotDivisible);
  EXPECT_EQ(mul_by_p(Residue(t7.ring(1), 3), t7.ring(2)).value(), 21u);
  EXPECT_EQ(project(Residue(t7.ring(3), 300), t7.ring(1)).value(), 300u % 7);
}

TEST(RingProperties, AxiomsOnRandomResidues) {
  std::mt19937_64 rng(1234);
  for (std::uint64_t p : kPrimes) {
    for (int e = 1; e <= 3; ++e) {
      if (p > 2000000 && e == 3) continue;
      Ring r(p, e);
      std::uniform_int_distribution<std::uint64_t> d(0, r.modulus() - 1);
      for (int i = 0; i < 1000; ++i) {
        Residue a(r, d(rng)), b(r, d(rng)), c(r, d(rng));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a - a, r.zero());
        if (a.is_unit()) {
          EXPECT_EQ(a * a.inv(), r.one());
        }
      }
    }
  }
}

TEST(RingProperties, BarrettMatchesWideMultiply) {
  std::mt19937_64 rng(99);
  for (std::uint64_t p : {3u, 65521u, 1000003u}) {
    Ring r(p, 2);
    std::uniform_int_distribution<std::uint64_t> d(0, r.modulus() - 1);
    for (int i = 0; i < 10000; ++i) {
      std::uint64_t a = d(rng), b = d(rng);
      EXPECT_EQ(r.mul(a, b), static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % r.modulus()));
    }
  }
}

TEST(ReduceProperties, Homomorphism) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 101u}) {
    Ring r(p, 2);
    for (int i = 0; i < 500; ++i) {
      Rational q1 = rat(num(rng), den(rng)), q2 = rat(num(rng), den(rng));
      Rational s = q1 + q2, m = q1 * q2;
      if (!is_p_integral(q1, p) || !is_p_integral(q2, p) || !is_p_integral(s, p)) continue;
      EXPECT_EQ(reduce(s, r), reduce(q1, r) + reduce(q2, r));
      EXPECT_EQ(reduce(m, r), reduce(q1, r) * reduce(q2, r));
      EXPECT_EQ(least_residue(q1, p), reduce(q1, Ring(p, 1)).value());
    }
  }
}

TEST(SymbolProperties, EulerCriterion) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 97u, 101u, 499u}) {
    Ring r(p, 1);
    for (std::uint64_t a = 1; a < p; ++a) {
      std::uint64_t e = r.pow(a, (p - 1) / 2);
      EXPECT_EQ(legendre_symbol(static_cast<std::int64_t>(a), p), e == 1 ? 1 : -1);
    }
  }
}

TEST(FermatQuotientProperties, Logarithmic) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 97u, 499u}) {
    Ring r(p, 1);
    for (std::int64_t a = 1; a < 25; ++a) {
      for (std::int64_t b = 1; b < 25; ++b) {
        if (legendre_symbol(a, p) == 0 || legendre_symbol(b, p) == 0) continue;
        EXPECT_EQ(fermat_quotient(a * b, r), fermat_quotient(a, r) + fermat_quotient(b, r));
      }
    }
  }
}

TEST(HarmonicProperties, LehmerCongruences) {
  for (std::uint64_t p : odd_primes_between(5, 2000)) {
    Ring r(p, 1);
    Residue q2 = fermat_quotient(2, r), q3 = fermat_quotient(3, r);
    EXPECT_EQ(harmonic((p - 1) / 2, r), -2 * q2) << p;
    EXPECT_EQ(harmonic(p / 4, r), -3 * q2) << p;
    EXPECT_EQ(harmonic(p / 3, r), q3 * r(-3) / r(2)) << p;
    EXPECT_EQ(harmonic(p / 6, r), -2 * q2 + q3 * r(-3) / r(2)) << p;
  }
}

TEST(Primes, SieveAndMillerRabinAgree) {
  auto ps = odd_primes_between(1, 5000);
  EXPECT_EQ(ps.front(), 3u);
  std::size_t idx = 0;
  for (std::uint64_t n = 3; n <= 5000; n += 2) {
    bool listed = idx < ps.size() && ps[idx] == n;
    EXPECT_EQ(is_prime(n), listed) << n;
    if (listed) ++idx;
  }
  EXPECT_TRUE(is_prime(1000000007ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2,3,5,7
  EXPECT_EQ(odd_primes_between(3, 100).size(), 24u);
}
