#pragma once

// Small helpers shared by the statement bodies.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/binom.hpp"
#include "supercong/grids.hpp"
#include "supercong/oracle.hpp"
#include "supercong/padic.hpp"
#include "supercong/quadrep.hpp"
#include "supercong/statement.hpp"

namespace supercong::stmt {

namespace ex = supercong::oracle;

using SkipFn = std::function<std::optional<std::string>(std::uint64_t)>;

inline std::string str(const Rational& q) { return q.get_str(); }
inline std::string str(std::int64_t v) { return std::to_string(v); }
inline std::string str(std::uint64_t v) { return std::to_string(v); }
inline std::string str(int v) { return std::to_string(v); }

inline Residue R(const Ring& ring, const Rational& q) { return reduce(q, ring); }

/// (-1)^n for a possibly negative exponent.
inline int sgn_pow(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

inline Rational Q(std::int64_t v) { return Rational(static_cast<long>(v)); }
inline Rational Q(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }

inline std::int64_t sp(std::uint64_t p) { return static_cast<std::int64_t>(p); }

/// Integer binomial C(n, k) for 0 <= n < p, computed in the ring.
inline Residue ibinom(std::uint64_t n, std::uint64_t k, const Ring& ring) {
  if (k > n) return ring.zero();
  return gbinom(ring(static_cast<std::int64_t>(n)), k);
}

/// C(n, k) for integers of any size, reduced into the ring.
inline Residue big_binom(std::uint64_t n, std::uint64_t k, const Ring& ring) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Residue(ring, mpz_fdiv_ui(b.get_mpz_t(), ring.modulus()));
}

/// p * num / den in the ring, den a unit.
inline Residue p_times(const Ring& ring, const Residue& num, const Residue& den) {
  return ring(sp(ring.p())) * num / den;
}

/// 2X - p/(2X) and its relatives: c*X - d*p/(e*X).
inline Residue lin_minus_p_over(const Ring& ring, std::int64_t c, std::int64_t X, std::int64_t d, std::int64_t e) {
  Residue x = ring(X);
  return ring(c) * x - p_times(ring, ring(d), ring(e) * x);
}

inline Rational least(const Rational& q, std::uint64_t p) { return Q(least_residue(q, p)); }

// -- applicability helpers ---------------------------------------------------

inline SkipFn always() {
  return [](std::uint64_t) -> std::optional<std::string> { return std::nullopt; };
}

/// Skip unless p exceeds `bound`; the reason names `why`.
inline SkipFn p_greater(std::uint64_t bound, std::string why) {
  return [bound, why](std::uint64_t p) -> std::optional<std::string> {
    if (p > bound) return std::nullopt;
    return "p > " + std::to_string(bound) + " required: " + why;
  };
}

inline SkipFn p_in_classes(std::uint64_t m, std::vector<std::uint64_t> rs, std::uint64_t min_p = 3,
                           std::string min_why = "") {
  return [m, rs, min_p, min_why](std::uint64_t p) -> std::optional<std::string> {
    if (p < min_p) return "p >= " + std::to_string(min_p) + " required" + (min_why.empty() ? "" : ": " + min_why);
    for (auto r : rs) {
      if (p % m == r) return std::nullopt;
    }
    std::string s = "requires p ≡ ";
    for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? "," : "") + std::to_string(rs[i]);
    return s + " mod " + std::to_string(m);
  };
}

inline SkipFn p_not_in(std::vector<std::uint64_t> bad, std::string why) {
  return [bad, why](std::uint64_t p) -> std::optional<std::string> {
    for (auto b : bad) {
      if (p == b) return "p = " + std::to_string(b) + " excluded: " + why;
    }
    return std::nullopt;
  };
}

inline SkipFn all_of(std::vector<SkipFn> fs) {
  return [fs](std::uint64_t p) -> std::optional<std::string> {
    for (const auto& f : fs) {
      if (auto r = f(p)) return r;
    }
    return std::nullopt;
  };
}

/// Skip unless the Legendre symbol (d/p) equals `want`.
inline SkipFn symbol_is(std::int64_t d, int want) {
  return [d, want](std::uint64_t p) -> std::optional<std::string> {
    if (legendre_symbol(d, p) == want) return std::nullopt;
    return "requires (" + std::to_string(d) + "/p) = " + std::to_string(want);
  };
}

// -- sums used by many statements --------------------------------------------

/// sum_{k<p} C(a,k) C(c,k) z^k at precision e, with its exact twin when asked.
struct SumValue {
  Residue mod;
  std::optional<Rational> exact;
};

inline SumValue full_sum(const Context& ctx, int e, const Rational& a, const Rational& c, const Rational& z) {
  const std::uint64_t n = ctx.p() - 1;
  return {hyper_sum(a, c, z, n, ctx.ring(e)), ctx.exact([&]() -> Rational { return ex::exact_hyper_sum(a, c, z, n); })};
}

inline SumValue scaled(const SumValue& v, const Residue& s, const Rational& s_exact) {
  SumValue out{v.mod * s, std::nullopt};
  if (v.exact) out.exact = *v.exact * s_exact;
  return out;
}

inline const Representation* find_cached(std::optional<Representation>& slot, const FormSpec& f, std::uint64_t p) {
  if (!slot) slot = find_rep(f, p);
  return slot ? &*slot : nullptr;
}


inline SumValue project(const SumValue& v, const Ring& coarse) { return {supercong::project(v.mod, coarse), v.exact}; }

/// delta_p(a): 0 unless a = 0 or -1 mod p, then a or -1-a respectively.
inline Rational delta_p(const Rational& a, std::uint64_t p) {
  std::uint64_t r = least_residue(a, p);
  if (r == 0) return a;
  if (r == p - 1) return -1 - a;
  return Rational(0);
}

// -- emission ----------------------------------------------------------------

struct Opt {
  Residue rhs;
  std::string choice;
};

/// One check whose lhs may match any of several right-hand sides.
inline void check_any(Context& ctx, std::string label, Bindings b, const SumValue& lhs, const std::vector<Opt>& opts,
                      bool informational = false) {
  Check c{std::move(label), std::move(b), {}, informational};
  for (const Opt& o : opts) c.candidates.push_back(Candidate{lhs.mod, o.rhs, o.choice, lhs.exact});
  if (c.candidates.empty()) throw std::logic_error("check without a right-hand side");
  ctx.emit(std::move(c));
}

inline void check_sum(Context& ctx, std::string label, Bindings b, const SumValue& lhs, const Residue& rhs,
                      bool informational = false) {
  ctx.check(std::move(label), std::move(b), lhs.mod, rhs, lhs.exact, informational);
}

/// Right-hand sides built from every admissible representation under `rule`.
template <class F>
std::vector<Opt> rep_options(std::uint64_t p, const FormSpec& form, const NormalizationRule& rule, F&& value) {
  auto rep = find_rep(form, p);
  if (!rep) throw Unsatisfiable(form.str() + " has no solution for p=" + std::to_string(p));
  std::vector<Opt> out;
  for (const Representation& r : admissible(*rep, rule)) out.push_back({value(r), form.str() + " " + r.str()});
  if (out.empty()) throw Unsatisfiable("no representation satisfies " + rule.id);
  return out;
}

/// Adds `b` to a binding list (copying).
inline Bindings with(Bindings base, std::string key, std::string value) {
  base.emplace_back(std::move(key), std::move(value));
  return base;
}

/// Every coefficient of a polynomial that should vanish becomes a check.
inline void emit_zero_coeffs(Context& ctx, const std::string& label, const Bindings& b, const Ring& ring,
                             std::span<const std::uint64_t> coeffs, const ex::RatPoly* exact) {
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    std::optional<Rational> e;
    if (exact) e = j < exact->size() ? (*exact)[j] : Rational(0);
    ctx.check(label, with(b, "j", str(static_cast<std::uint64_t>(j))), Residue(ring, coeffs[j]), ring.zero(), e);
  }
}

/// Integer lifts 0..p-1 as residues of `ring`.
inline std::vector<std::uint64_t> all_points(const Ring& ring) {
  std::vector<std::uint64_t> xs(ring.p());
  for (std::uint64_t i = 0; i < xs.size(); ++i) xs[i] = i;
  return xs;
}

// -- statement registration --------------------------------------------------

inline void add(Registry& reg, std::string id, Kind kind, int mod_exp, std::string hypothesis, std::string formula,
                SkipFn skip, std::function<void(Context&)> body) {
  reg.push_back(StatementDescriptor{std::move(id), kind, mod_exp, std::move(hypothesis), std::move(formula),
                                    std::move(skip), std::move(body)});
}

/// Skip when any of the given denominators is divisible by p.
inline SkipFn denominators(std::vector<std::uint64_t> dens) {
  return [dens](std::uint64_t p) -> std::optional<std::string> {
    for (auto d : dens) {
      if (d % p != 0) continue;
      if (p == 3) return "p > 3 required: denominator " + std::to_string(d);
      return "p divides denominator " + std::to_string(d);
    }
    return std::nullopt;
  };
}

}  // namespace supercong::stmt
