#pragma once

// Ground truth by exact rational arithmetic.  Nothing here touches Ring or
// the term recurrences of binom.hpp: binomials are rebuilt from falling
// factorials for every k, and reduction to Z/p^e happens only in callers.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "supercong/padic.hpp"

namespace supercong::oracle {

using RatPoly = std::vector<Rational>;  // index = power of x

inline Rational exact_gbinom(const Rational& a, std::uint64_t k) {
  Rational num = 1;
  mpz_class den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= a - Rational(static_cast<unsigned long>(i));
    den *= static_cast<unsigned long>(i + 1);
  }
  Rational out = num / Rational(den);
  out.canonicalize();
  return out;
}

inline Rational exact_pow(const Rational& z, std::uint64_t k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), z.get_num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), z.get_den().get_mpz_t(), static_cast<unsigned long>(k));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

/// sum_{k=0}^{n} C(a,k) C(c,k) z^k.
inline Rational exact_hyper_sum(const Rational& a, const Rational& c, const Rational& z, std::uint64_t n) {
  Rational sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) sum += exact_gbinom(a, k) * exact_gbinom(c, k) * exact_pow(z, k);
  return sum;
}

/// sum_{k=0}^{n} C(a,k) C(c,k) z^k w_k for arbitrary rational weights.
inline Rational exact_weighted_sum(const Rational& a, const Rational& c, const Rational& z, const std::vector<Rational>& w) {
  Rational sum = 0;
  for (std::uint64_t k = 0; k < w.size(); ++k) sum += exact_gbinom(a, k) * exact_gbinom(c, k) * exact_pow(z, k) * w[k];
  return sum;
}

inline Rational exact_pn(const Rational& a, const Rational& x, std::uint64_t n) {
  return exact_hyper_sum(a, -1 - a, (1 - x) / 2, n);
}

inline Rational exact_sn(const Rational& a, const Rational& b, std::uint64_t n) {
  return exact_hyper_sum(a, b - a, 1, n);
}

inline Rational poly_eval(const RatPoly& f, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

inline RatPoly poly_derivative(const RatPoly& f) {
  if (f.size() <= 1) return {Rational(0)};
  RatPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * Rational(static_cast<unsigned long>(i));
  return out;
}

/// Integer binomial C(n, k) as a rational (0 when k > n).
inline Rational exact_binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

/// (1 - x)^k = sum_j C(k,j) (-1)^j x^j
inline RatPoly one_minus_x_pow(std::uint64_t k) {
  RatPoly out(k + 1);
  for (std::uint64_t j = 0; j <= k; ++j) out[j] = (j % 2 ? -1 : 1) * exact_binomial(k, j);
  return out;
}

/// Coefficients of U(1 - x) from those of U(x).
inline RatPoly exact_compose_one_minus_x(const RatPoly& u) {
  RatPoly out(u.size(), Rational(0));
  for (std::uint64_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    RatPoly w = one_minus_x_pow(i);
    for (std::uint64_t j = 0; j <= i; ++j) out[j] += u[i] * w[j];
  }
  return out;
}

/// Coefficients of P_n(a, x) in x.
inline RatPoly exact_pn_coeffs(const Rational& a, std::uint64_t n) {
  RatPoly out(n + 1, Rational(0));
  for (std::uint64_t k = 0; k <= n; ++k) {
    Rational ck = exact_gbinom(a, k) * exact_gbinom(-1 - a, k) / exact_pow(Rational(2), k);
    RatPoly u = one_minus_x_pow(k);
    for (std::uint64_t j = 0; j <= k; ++j) out[j] += ck * u[j];
  }
  return out;
}

inline Rational exact_harmonic(std::uint64_t n) {
  Rational h = 0;
  for (std::uint64_t k = 1; k <= n; ++k) h += Rational(1, static_cast<unsigned long>(k));
  return h;
}

/// Classical Legendre polynomial by the explicit sum
/// 2^{-n} sum_{k<=n/2} C(n,k) (-1)^k C(2n-2k, n) x^{n-2k}.
inline Rational exact_legendre(std::uint64_t n, const Rational& x) {
  Rational sum = 0;
  for (std::uint64_t k = 0; 2 * k <= n; ++k) {
    Rational term = exact_binomial(n, k) * exact_binomial(2 * n - 2 * k, n) * exact_pow(x, n - 2 * k);
    sum += (k % 2 ? -term : term);
  }
  return sum / exact_pow(Rational(2), n);
}

}  // namespace supercong::oracle
