#include <gtest/gtest.h>

#include <random>

#include "supercong/binom.hpp"
#include "supercong/oracle.hpp"

using namespace supercong;
namespace ex = supercong::oracle;

namespace {

std::vector<std::uint64_t> raw(const CoeffPoly& f) { return {f.raw().begin(), f.raw().end()}; }

Rational random_p_integral(std::mt19937_64& rng, std::uint64_t p) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  for (;;) {
    Rational q = rat(num(rng), den(rng));
    if (is_p_integral(q, p)) return q;
  }
}

const std::vector<std::uint64_t> kSmall = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97};

}  // namespace

TEST(Gbinom, Examples) {
  Ring r49(7, 2), r11(11, 1);
  EXPECT_EQ(gbinom(rat(-5, 3), 0, r49).value(), 1u);
  EXPECT_EQ(gbinom(rat(-1, 2), 2, r49).value(), 31u);
  EXPECT_EQ(gbinom(rat(-1, 2), 2, r49), reduce(rat(3, 8), r49));
  EXPECT_EQ(gbinom(rat(5), 7, r11).value(), 0u);
  EXPECT_THROW(gbinom(rat(1), 11, r11), KTooLarge);
  EXPECT_THROW(gbinom(rat(1, 11), 2, r11), DenominatorDivisibleByP);
}

TEST(HyperSum, Examples) {
  Ring r25(5, 2), r49(7, 2);
  EXPECT_EQ(hyper_sum(rat(2, 3), rat(-7), rat(0), 4, r25).value(), 1u);
  EXPECT_EQ(hyper_sum(rat(-1, 2), rat(-1, 2), rat(1), 4, r25).value(), 1u);
  // (-3/7) = +1 because 7 = 1 mod 3, so this sum is 1 mod 49.
  EXPECT_EQ(hyper_sum(rat(-1, 3), rat(-2, 3), rat(1), 6, r49).value(), 1u);
}

TEST(PnEval, Examples) {
  Ring r25(5, 2), r49(7, 2);
  EXPECT_EQ(pn_eval(rat(-1, 3), rat(1), 4, r25).value(), 1u);
  for (long x = -3; x <= 3; ++x) EXPECT_EQ(pn_eval(rat(1), rat(x), 3, r49), reduce(rat(x), r49));
  EXPECT_EQ(pn_eval(rat(-1, 2), rat(-1), 4, r25).value(), 1u);
}

TEST(PnCoeffs, Examples) {
  Ring r49(7, 2);
  EXPECT_EQ(raw(pn_coeffs(rat(1), 1, r49)), (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(raw(pn_coeffs(rat(2), 2, r49)),
            (std::vector<std::uint64_t>{reduce(rat(-1, 2), r49).value(), 0, reduce(rat(3, 2), r49).value()}));
  EXPECT_EQ(raw(pn_coeffs(rat(-1, 2), 0, r49)), (std::vector<std::uint64_t>{1}));
}

TEST(PolyDerivative, Examples) {
  Ring r49(7, 2);
  EXPECT_EQ(raw(poly_derivative(CoeffPoly(r49, {5}))), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(raw(poly_derivative(CoeffPoly(r49, {0, 1}))), (std::vector<std::uint64_t>{1}));
  CoeffPoly p2(r49, {reduce(rat(-1, 2), r49).value(), 0, reduce(rat(3, 2), r49).value()});
  EXPECT_EQ(raw(poly_derivative(p2)), (std::vector<std::uint64_t>{0, 3}));
}

TEST(SnEval, Examples) {
  Ring r49(7, 2), r7(7, 1);
  for (const Rational& a : {rat(-1, 2), rat(3), rat(2, 5)}) {
    for (std::uint64_t n : {0u, 1u, 4u, 6u}) EXPECT_EQ(sn_eval(a, 2 * a, n, r49), hyper_sum(a, a, rat(1), n, r49));
    EXPECT_EQ(sn_eval(a, rat(0), 1, r49), reduce(1 - a * a, r49));
  }
  EXPECT_EQ(sn_eval(rat(3), rat(5), 6, r7).value(), 3u);
}

TEST(LegendrePn, Examples) {
  Ring r11(11, 1);
  for (std::uint64_t n = 0; n < 11; ++n) EXPECT_EQ(legendre_pn(n, rat(1), r11).value(), 1u);
  for (long x = 0; x < 11; ++x) EXPECT_EQ(legendre_pn(1, rat(x), r11), reduce(rat(x), r11));
  EXPECT_EQ(legendre_pn(2, rat(3), r11).value(), 2u);
}

TEST(BinomTransform, Examples) {
  Ring r49(7, 2);
  std::vector<Residue> f, ones, central;
  for (std::uint64_t m = 0; m < 7; ++m) {
    f.push_back(r49(static_cast<std::int64_t>(3 * m * m + 2)));
    ones.push_back(r49.one());
    central.push_back(reduce(ex::exact_binomial(2 * m, m) / ex::exact_pow(rat(4), m), r49));
  }
  EXPECT_EQ(binom_transform(f, 0), f[0]);
  for (std::uint64_t k = 1; k < 7; ++k) EXPECT_TRUE(binom_transform(ones, k).is_zero());
  for (std::uint64_t k = 0; k < 7; ++k) EXPECT_EQ(binom_transform(central, k), central[k]);
  std::vector<std::uint64_t> fr;
  for (const auto& v : f) fr.push_back(v.value());
  auto all = binom_transform_all(r49, fr);
  for (std::uint64_t k = 0; k < 7; ++k) EXPECT_EQ(all[k], binom_transform(f, k).value());
}

TEST(KernelProperties, RecurrenceMatchesNaiveSum) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, kSmall.size() - 1);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t p = kSmall[pick(rng)];
    Ring r(p, 2);
    Rational a = random_p_integral(rng, p), c = random_p_integral(rng, p), z = random_p_integral(rng, p);
    std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
    Residue naive = r.zero();
    for (std::uint64_t k = 0; k <= n; ++k) naive += gbinom(a, k, r) * gbinom(c, k, r) * reduce(z, r).pow(k);
    EXPECT_EQ(hyper_sum(a, c, z, n, r), naive) << "p=" << p << " a=" << a << " c=" << c << " z=" << z;
  }
}

TEST(KernelProperties, MatchesExactOracle) {
  std::mt19937_64 rng(77);
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (int e = 1; e <= 3; ++e) {
      Ring r(p, e);
      for (int i = 0; i < 20; ++i) {
        Rational a = random_p_integral(rng, p), c = random_p_integral(rng, p), z = random_p_integral(rng, p);
        EXPECT_EQ(hyper_sum(a, c, z, p - 1, r), reduce(ex::exact_hyper_sum(a, c, z, p - 1), r));
      }
    }
  }
}

TEST(KernelProperties, ReflectionInA) {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : kSmall) {
    Ring r(p, 2);
    for (int i = 0; i < 20; ++i) {
      Rational a = random_p_integral(rng, p), x = random_p_integral(rng, p);
      std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
      EXPECT_EQ(pn_eval(a, x, n, r), pn_eval(-1 - a, x, n, r));
    }
  }
}

TEST(KernelProperties, CoefficientsAgreeWithEvaluation) {
  for (std::uint64_t p : {5u, 7u, 13u, 31u}) {
    Ring r(p, 2);
    for (const Rational& a : {rat(-1, 2), rat(-1, 3), rat(2), rat(static_cast<long>(p) + 1), rat(7, 4)}) {
      if (!is_p_integral(a, p)) continue;
      CoeffPoly f = pn_coeffs(a, p - 1, r);
      for (std::uint64_t x = 0; x < p; ++x) EXPECT_EQ(f.eval(Residue(r, x)), pn_eval(reduce(a, r), Residue(r, x), p - 1));
    }
  }
}

TEST(KernelProperties, FastCoefficientsMatchPascal) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 53u, 101u}) {
    for (int e = 1; e <= 3; ++e) {
      Ring r(p, e);
      std::vector<Rational> as = {rat(-1, 2), rat(0), rat(static_cast<long>(p) - 1), rat(static_cast<long>(p)),
                                  rat(2 * static_cast<long>(p) - 1), random_p_integral(rng, p)};
      for (const Rational& a : as) {
        if (!is_p_integral(a, p)) continue;
        for (std::uint64_t n : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2}, p / 2, p - 1}) {
          EXPECT_EQ(pn_coeffs_fast(reduce(a, r), n), pn_coeffs(a, n, r)) << "p=" << p << " e=" << e << " a=" << a << " n=" << n;
        }
      }
    }
  }
}

TEST(KernelProperties, CoefficientsMatchOracle) {
  for (std::uint64_t p : {5u, 7u, 11u}) {
    Ring r(p, 2);
    for (const Rational& a : {rat(-1, 2), rat(-2, 3), rat(3)}) {
      auto want = ex::exact_pn_coeffs(a, p - 1);
      CoeffPoly got = pn_coeffs(a, p - 1, r);
      for (std::size_t j = 0; j < want.size(); ++j) EXPECT_EQ(got[j], reduce(want[j], r));
    }
  }
}

TEST(KernelProperties, ComposeOneMinusX) {
  Ring r(11, 2);
  std::vector<std::uint64_t> u = {3, 0, 5, 7, 1};
  auto v = compose_one_minus_x(r, u);
  CoeffPoly U(r, u), V(r, v);
  for (std::uint64_t x = 0; x < 121; ++x) EXPECT_EQ(V.eval(Residue(r, x)), U.eval(Residue(r, 1) - Residue(r, x)));
}

TEST(KernelProperties, EvalManyMatchesHorner) {
  Ring r(1009, 2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> d(0, r.modulus() - 1);
  std::vector<std::uint64_t> coeffs(200), xs(37), out(37);
  for (auto& c : coeffs) c = d(rng);
  for (auto& x : xs) x = d(rng);
  eval_many(r, coeffs, xs, out);
  CoeffPoly f(r, coeffs);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(out[i], f.eval(Residue(r, xs[i])).value());
}

TEST(KernelProperties, ThreeTermRelationInA) {
  std::mt19937_64 rng(21);
  for (std::uint64_t p : kSmall) {
    Ring r(p, 2);
    for (int i = 0; i < 20; ++i) {
      Residue a = reduce(random_p_integral(rng, p), r), x = reduce(random_p_integral(rng, p), r);
      std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
      Residue lhs = (a + 1) * pn_eval(a + 1, x, n) - (2 * a + 1) * x * pn_eval(a, x, n) + a * pn_eval(a - 1, x, n);
      Residue rhs = -2 * (2 * a + 1) * gbinom(a, n) * gbinom(a + n, n) * ((x - 1) * r(2).inv()).pow(n + 1);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(KernelProperties, ShiftedSumOverKPlusOne) {
  std::mt19937_64 rng(22);
  for (std::uint64_t p : kSmall) {
    if (p == 3) continue;
    Ring r(p, 2);
    for (int i = 0; i < 20; ++i) {
      Residue a = reduce(random_p_integral(rng, p), r);
      std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, p - 2)(rng);
      auto terms = hyper_terms(a, -1 - a, r.one(), n);
      Residue lhs = r.zero();
      for (std::uint64_t k = 0; k <= n; ++k) lhs += Residue(r, terms[k]) / r(static_cast<std::int64_t>(k + 1));
      Residue rhs = gbinom(a - 1, n) * gbinom(-2 - a, n) / r(static_cast<std::int64_t>(n + 1));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(KernelProperties, TwoParameterRecurrence) {
  std::mt19937_64 rng(23);
  for (std::uint64_t p : kSmall) {
    Ring r(p, 2);
    for (int i = 0; i < 20; ++i) {
      Residue a = reduce(random_p_integral(rng, p), r), b = reduce(random_p_integral(rng, p), r);
      std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
      Residue lhs = (a - b) * sn_eval(a, b, n) + (a + 1) * sn_eval(a + 1, b, n);
      Residue rhs = (2 * a - b + 1) * gbinom(a, n) * gbinom(b - a - 1, n);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(KernelProperties, ClosedFormsAgainstOracle) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  for (int i = 0; i < 30; ++i) {
    Rational a = rat(num(rng), den(rng));
    for (std::uint64_t n = 0; n <= 20; ++n) {
      Rational N(static_cast<unsigned long>(n));
      EXPECT_EQ(ex::exact_sn(a, 0, n), ex::exact_gbinom(N + a, n) * ex::exact_gbinom(N - a, n));
      if (n == 0) continue;
      EXPECT_EQ(ex::exact_sn(a, 1, n),
                -(a * a - a - N) / (N * N) * ex::exact_gbinom(a - 2, n - 1) * ex::exact_gbinom(-a - 1, n - 1));
    }
  }
}

TEST(KernelProperties, LegendreReflectionModP) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 101u}) {
    Ring r(p, 1);
    for (std::uint64_t x = 0; x < p; ++x) {
      auto table = legendre_table(p - 1, Residue(r, x));
      for (std::uint64_t m = 0; m <= (p - 1) / 2; ++m) EXPECT_EQ(table[p - 1 - m], table[m]);
      for (std::uint64_t n = 0; n < p; ++n) EXPECT_EQ(legendre_pn(n, Residue(r, x)).value(), table[n]);
    }
  }
}

TEST(KernelProperties, LegendreAgainstExplicitFormula) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    Ring r(p, 1);
    for (const Rational& x : {rat(0), rat(1), rat(2), rat(-1), rat(1, 2), rat(5)}) {
      if (!is_p_integral(x, p)) continue;
      for (std::uint64_t n = 0; n < p; ++n) EXPECT_EQ(legendre_pn(n, x, r), reduce(ex::exact_legendre(n, x), r));
    }
  }
}

TEST(KernelProperties, GeneralizedMatchesClassicalAtInteger) {
  for (std::uint64_t p : {7u, 11u, 13u}) {
    Ring r(p, 1);
    for (std::uint64_t n = 0; n < p; ++n) {
      for (std::uint64_t x = 0; x < p; ++x) {
        EXPECT_EQ(pn_eval(r(static_cast<std::int64_t>(n)), Residue(r, x), n), legendre_pn(n, Residue(r, x)));
      }
    }
  }
}

TEST(KernelProperties, SquaredSumCongruences) {
  std::mt19937_64 rng(25);
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u}) {
    Ring r(p, 1);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
      Rational a = random_p_integral(rng, p), t = random_p_integral(rng, p);
      Residue ar = reduce(a, r), tr = reduce(t, r);
      if (ar.is_zero() || tr.is_zero() || tr == r.one()) continue;
      std::uint64_t A = least_residue(a, p);
      Residue lhs = hyper_sum(a, a, t, p - 1, r);
      EXPECT_EQ(lhs, tr.pow(A) * hyper_sum(a, a, 1 / t, p - 1, r));
      EXPECT_EQ(lhs, (tr - 1).pow(A) * legendre_pn(A, (tr + 1) / (tr - 1)));
      ++checked;
    }
    EXPECT_GT(checked, 10);
  }
}
