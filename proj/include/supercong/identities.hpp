#pragma once

// The exact polynomial identities, evaluated over Q with no modulus.

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "supercong/oracle.hpp"

namespace supercong::oracle {

struct IdentityTuple {
  Rational a, b, x;
  std::uint64_t n = 0;
};

struct IdentityReport {
  std::string id;
  std::uint64_t tried = 0;
  std::uint64_t held = 0;
  std::optional<IdentityTuple> first_failure;
};

inline Rational exact_three_term(const Rational& a, const Rational& x, std::uint64_t n) {
  return (a + 1) * exact_pn(a + 1, x, n) - (2 * a + 1) * x * exact_pn(a, x, n) + a * exact_pn(a - 1, x, n);
}

/// lhs - rhs for each identity; zero means it holds at t.
inline std::optional<Rational> identity_defect(const std::string& id, const IdentityTuple& t) {
  const Rational& a = t.a;
  const Rational& b = t.b;
  const std::uint64_t n = t.n;
  const Rational N(static_cast<unsigned long>(n));
  if (id == "L2.1") {
    const Rational rhs = -2 * (2 * a + 1) * exact_gbinom(a, n) * exact_gbinom(a + N, n) * exact_pow((t.x - 1) / 2, n + 1);
    return Rational(exact_three_term(a, t.x, n) - rhs);
  }
  if (id == "L2.4") {
    std::vector<Rational> w;
    for (std::uint64_t k = 0; k <= n; ++k) w.push_back(Rational(1, static_cast<unsigned long>(k + 1)));
    const Rational rhs = exact_gbinom(a - 1, n) * exact_gbinom(-2 - a, n) / (N + 1);
    return Rational(exact_weighted_sum(a, -1 - a, 1, w) - rhs);
  }
  if (id == "I4.2") {
    const Rational lhs = (a - b) * exact_sn(a, b, n) + (a + 1) * exact_sn(a + 1, b, n);
    return Rational(lhs - (2 * a - b + 1) * exact_gbinom(a, n) * exact_gbinom(b - a - 1, n));
  }
  if (id == "I4.5") return Rational(exact_sn(a, 0, n) - exact_gbinom(N + a, n) * exact_gbinom(N - a, n));
  if (id == "I4.6") {
    const Rational rhs = -((a * a - a - N) / (N * N)) * exact_gbinom(a - 2, n - 1) * exact_gbinom(-a - 1, n - 1);
    return Rational(exact_sn(a, 1, n) - rhs);
  }
  return std::nullopt;
}

inline const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{"L2.1", "L2.4", "I4.2", "I4.5", "I4.6"};
  return ids;
}

/// `count` tuples with numerators in [-30,30], denominators in [1,9] and
/// 1 <= n <= 9, drawn from a generator seeded by (seed, id).
inline IdentityReport certify_identity(const std::string& id, std::uint64_t count, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (char c : id) h = h * 131 + static_cast<unsigned char>(c);
  std::mt19937_64 rng(h);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  std::uniform_int_distribution<std::uint64_t> nd(1, 9);
  auto q = [&] {
    Rational r(num(rng), static_cast<unsigned long>(den(rng)));
    r.canonicalize();
    return r;
  };
  IdentityReport rep{id, 0, 0, std::nullopt};
  for (std::uint64_t i = 0; i < count; ++i) {
    IdentityTuple t{q(), q(), q(), nd(rng)};
    const auto d = identity_defect(id, t);
    if (!d) return rep;
    ++rep.tried;
    if (*d == 0) {
      ++rep.held;
    } else if (!rep.first_failure) {
      rep.first_failure = t;
    }
  }
  return rep;
}

}  // namespace supercong::oracle
