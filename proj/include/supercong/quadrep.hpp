#pragma once

// Representations c1*x^2 + c2*y^2 = mult*p and the sign conventions that pin
// down (x, y) uniquely inside right-hand sides.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercong/errors.hpp"

namespace supercong {

struct FormSpec {
  std::int64_t c1 = 1;
  std::int64_t c2 = 1;
  int multiplier = 1;

  std::string str() const {
    std::string s = (multiplier == 4 ? "4p=" : "p=");
    s += (c1 == 1 ? "" : std::to_string(c1)) + "x^2+" + (c2 == 1 ? "" : std::to_string(c2)) + "y^2";
    return s;
  }
};

struct Representation {
  std::int64_t x = 0;
  std::int64_t y = 0;
  FormSpec form;
  std::uint64_t p = 0;

  bool valid() const {
    __int128 lhs = static_cast<__int128>(form.c1) * x * x + static_cast<__int128>(form.c2) * y * y;
    return lhs == static_cast<__int128>(form.multiplier) * p;
  }
  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

/// Residue-class constraints on the coordinates; an empty rule accepts all.
struct NormalizationRule {
  struct Constraint {
    char coord;  // 'x' or 'y'
    std::int64_t modulus;
    std::int64_t residue;
  };
  std::string id;
  std::vector<Constraint> constraints;

  bool accepts(std::int64_t x, std::int64_t y) const {
    for (const auto& c : constraints) {
      std::int64_t v = c.coord == 'x' ? x : y;
      std::int64_t r = ((v % c.modulus) + c.modulus) % c.modulus;
      std::int64_t want = ((c.residue % c.modulus) + c.modulus) % c.modulus;
      if (r != want) return false;
    }
    return true;
  }

  static NormalizationRule none() { return {"none", {}}; }
  static NormalizationRule x_mod(std::int64_t m, std::int64_t r) {
    return {"x=" + std::to_string(r) + " mod " + std::to_string(m), {{'x', m, r}}};
  }
  static NormalizationRule y_mod(std::int64_t m, std::int64_t r) {
    return {"y=" + std::to_string(r) + " mod " + std::to_string(m), {{'y', m, r}}};
  }
};

namespace detail {

inline std::optional<std::int64_t> exact_isqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace detail

/// Exhaustive search over y >= 0, smallest y first, x >= 0.  For symmetric
/// forms (c1 == c2) the coordinates are ordered so that x is odd, which is
/// the convention every sum-of-two-squares right-hand side relies on.
inline std::optional<Representation> find_rep(const FormSpec& form, std::uint64_t p) {
  if (form.c1 < 1 || form.c2 < 1 || (form.multiplier != 1 && form.multiplier != 4)) return std::nullopt;
  const auto target = static_cast<std::int64_t>(form.multiplier * p);
  for (std::int64_t y = 0; form.c2 * y * y <= target; ++y) {
    std::int64_t rest = target - form.c2 * y * y;
    if (rest % form.c1 != 0) continue;
    auto x = detail::exact_isqrt(rest / form.c1);
    if (!x) continue;
    Representation rep{*x, y, form, p};
    if (form.c1 == form.c2 && (rep.x % 2 == 0) && (rep.y % 2 != 0)) std::swap(rep.x, rep.y);
    return rep;
  }
  return std::nullopt;
}

/// Every sign choice (+-x, +-y) accepted by the rule, without duplicates,
/// in the order (+,+), (-,+), (+,-), (-,-).
inline std::vector<Representation> admissible(const Representation& rep, const NormalizationRule& rule) {
  std::vector<Representation> out;
  const std::int64_t sx[] = {1, -1, 1, -1};
  const std::int64_t sy[] = {1, 1, -1, -1};
  for (int i = 0; i < 4; ++i) {
    Representation r = rep;
    r.x = std::abs(rep.x) * sx[i];
    r.y = std::abs(rep.y) * sy[i];
    bool dup = false;
    for (const auto& o : out) dup = dup || (o.x == r.x && o.y == r.y);
    if (!dup && rule.accepts(r.x, r.y)) out.push_back(r);
  }
  return out;
}

/// First admissible sign choice; unconstrained coordinates stay nonnegative.
inline Representation normalize(const Representation& rep, const NormalizationRule& rule) {
  auto all = admissible(rep, rule);
  if (all.empty()) {
    throw Unsatisfiable("no sign choice of " + rep.str() + " satisfies " + rule.id + " for p=" + std::to_string(rep.p));
  }
  return all.front();
}

}  // namespace supercong
