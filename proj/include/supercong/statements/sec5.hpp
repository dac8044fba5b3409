#pragma once

// Sums of C(a,k)^2 t^k, mostly with a = -1/4, and what they reduce to mod p.

#include "supercong/statements/common.hpp"

namespace supercong::stmt {

namespace sec5 {

/// sum_{k<p} C(a,k)^2 z^k.
inline SumValue sq_sum(const Context& ctx, int e, const Rational& a, const Rational& z) {
  return full_sum(ctx, e, a, a, z);
}

inline std::vector<Rational> t_values(std::uint64_t p) {
  return grids::p_integral(p, {rat(2), rat(3), rat(-1), rat(1, 2), rat(-8), rat(9), rat(4), rat(64)});
}

/// Both displayed sums of a "ratio then value" statement, each checked against
/// the value; the first is also checked against the scaled second.
inline void ratio_and_value(Context& ctx, const SumValue& up, const SumValue& down, const Residue& factor,
                            const Rational& factor_exact, const std::vector<Opt>& value) {
  const SumValue scaled_down = scaled(down, factor, factor_exact);
  check_sum(ctx, "ratio", {}, up, scaled_down.mod);
  check_any(ctx, "value", {}, up, value);
  check_any(ctx, "scaled second sum", {}, scaled_down, value);
}

inline Residue signed_value(const Ring& r, std::int64_t exponent, std::int64_t c, std::int64_t v) {
  return r(sgn_pow(exponent) * c * v);
}

inline void add_all(Registry& reg) {
  add(reg, "T5.1", Kind::theorem, 2, "p odd prime",
      "sum C(-1/4,k)^2 = 2p/C((p-1)/2,(p+1)/4) if p = 3 mod 4; 2x - p/(2x) if p = x^2+y^2, 4 | x-1 (mod p^2)",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        std::vector<Opt> opts;
        if (p % 4 == 3) {
          opts.push_back({p_times(r, r(2), ibinom((p - 1) / 2, (p + 1) / 4, r)), "p=3 mod 4"});
        } else {
          opts = rep_options(p, {1, 1, 1}, NormalizationRule::x_mod(4, 1),
                             [&](const Representation& rep) { return lin_minus_p_over(r, 2, rep.x, 1, 2); });
        }
        check_any(ctx, "sum", {}, sq_sum(ctx, 2, rat(-1, 4), 1), opts);
      });

  add(reg, "R5.1", Kind::theorem, 2, "a p-integral", "sum C(a,k)^2 = C(2a, <a>) mod p^2", always(), [](Context& ctx) {
    const Ring& r = ctx.ring(2);
    const std::uint64_t p = ctx.p();
    for (const Rational& a : grids::a_grid(p)) {
      const std::uint64_t A = least_residue(a, p);
      check_sum(ctx, "central", {{"a", str(a)}}, sq_sum(ctx, 2, a, 1), gbinom(R(r, 2 * a), A));
    }
    // The a = -1/4 specialisation, with the index written out.
    const std::uint64_t k = p % 4 == 1 ? (p - 1) / 4 : (3 * p - 1) / 4;
    check_sum(ctx, "a=-1/4", {{"k", str(k)}}, sq_sum(ctx, 2, rat(-1, 4), 1), gbinom(R(r, rat(-1, 2)), k));
  });

  add(reg, "L5.1", Kind::lemma, 1, "n >= 0, x != 1",
      "P_n(x) = ((x-1)/2)^n sum_k C(n,k)^2 ((x+1)/(x-1))^k (checked mod p, n < p)", always(), [](Context& ctx) {
        const Ring& r = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        for (const Rational& x : grids::x_grid(p)) {
          const Residue X = R(r, x);
          if (!(X - 1).is_unit()) {
            ctx.skip_binding("x = 1 mod p");
            continue;
          }
          const auto table = legendre_table(p - 1, X);
          const Residue ratio = (X + 1) / (X - 1), half = (X - 1) / r(2);
          for (std::uint64_t n = 0; n < p; ++n) {
            Residue sum = r.zero(), pw = r.one(), c = r.one();
            for (std::uint64_t k = 0; k <= n; ++k) {
              sum += c * c * pw;
              pw *= ratio;
              if (k < n) c = c * r(sp(n - k)) / r(sp(k + 1));
            }
            ctx.check("square form", {{"n", str(n)}, {"x", str(x)}}, Residue(r, table[n]), half.pow(n) * sum,
                      ctx.exact([&]() -> Rational { return ex::exact_legendre(n, x); }));
          }
        }
      });

  add(reg, "L5.2", Kind::lemma, 1, "a != 0 mod p",
      "sum C(a,k)^2 t^k = t^<a> sum C(a,k)^2 t^-k = (t-1)^<a> P_<a>((t+1)/(t-1)) (mod p)", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        for (const Rational& a : grids::a_grid_small(p, ctx.options().seed)) {
          const std::uint64_t A = least_residue(a, p);
          if (A == 0) {
            ctx.skip_binding("a = 0 mod p");
            continue;
          }
          for (const Rational& t : t_values(p)) {
            const Residue T = R(r, t);
            if (T.value() == 0 || T.value() == 1) {
              ctx.skip_binding("t = 0 or 1 mod p");
              continue;
            }
            const Bindings b{{"a", str(a)}, {"t", str(t)}};
            const SumValue lhs = sq_sum(ctx, 1, a, t);
            check_sum(ctx, "reflected", b, lhs, T.pow(A) * sq_sum(ctx, 1, a, 1 / t).mod);
            check_sum(ctx, "Legendre", b, lhs, (T - 1).pow(A) * legendre_pn(A, (T + 1) / (T - 1)));
          }
        }
      });

  add(reg, "L5.3", Kind::lemma, 1, "1 <= m <= (p-1)/2", "P_{p-1-m}(x) = P_m(x) mod p", always(), [](Context& ctx) {
    const Ring& r = ctx.ring(1);
    const std::uint64_t p = ctx.p();
    for (std::uint64_t x = 0; x < p; ++x) {
      const auto table = legendre_table(p - 1, Residue(r, x));
      for (std::uint64_t m = 1; 2 * m < p; ++m) {
        ctx.check("reflection", {{"m", str(m)}, {"x", str(x)}}, Residue(r, table[p - 1 - m]), Residue(r, table[m]),
                  ctx.exact([&]() -> Rational { return ex::exact_legendre(p - 1 - m, Q(x)); }));
      }
    }
  });

  add(reg, "T5.2", Kind::theorem, 1, "a != -1, t != 1 mod p",
      "sum C(-1-a,k)^2 t^k = (t-1)^{-2<a>} sum C(a,k)^2 t^k mod p", always(), [](Context& ctx) {
        const Ring& r = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        for (const Rational& a : grids::a_grid_small(p, ctx.options().seed)) {
          const std::uint64_t A = least_residue(a, p);
          if (A == p - 1) {
            ctx.skip_binding("a = -1 mod p");
            continue;
          }
          for (const Rational& t : grids::p_integral(p, {rat(0), rat(2), rat(3), rat(-1), rat(1, 2), rat(-8), rat(64)})) {
            const Residue T = R(r, t);
            if (T.value() == 1) {
              ctx.skip_binding("t = 1 mod p");
              continue;
            }
            check_sum(ctx, "mirror", {{"a", str(a)}, {"t", str(t)}}, sq_sum(ctx, 1, -1 - a, t),
                      (T - 1).pow_signed(-2 * sp(A)) * sq_sum(ctx, 1, a, t).mod);
          }
        }
      });

  add(reg, "T5.3", Kind::theorem, 1, "p > 3",
      "sum C(-1/3,k)^2 9^k = 3^{-[p/3]} sum C(-1/3,k)^2/9^k = L if 4p = L^2+27M^2, 3 | L-2; 0 if p = 2 mod 3 (mod p)",
      p_greater(3, "denominator 3"), [](Context& ctx) {
        const Ring& r = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        std::vector<Opt> value;
        if (p % 3 == 1) {
          value = rep_options(p, {1, 27, 4}, NormalizationRule::x_mod(3, 2),
                              [&](const Representation& rep) { return r(rep.x); });
        } else {
          value.push_back({r.zero(), "p=2 mod 3"});
        }
        const std::int64_t e = -sp(p / 3);
        ratio_and_value(ctx, sq_sum(ctx, 1, rat(-1, 3), 9), sq_sum(ctx, 1, rat(-1, 3), rat(1, 9)), r(3).pow_signed(e),
                        1 / ex::exact_pow(Rational(3), p / 3), value);
      });

  add(reg, "T5.4", Kind::theorem, 1, "p odd prime",
      "sum C(-1/4,k)^2 (-8)^k = (-1)^{(p-1)/4} 2x; sum C(-1/4,k)^2/(-8)^k = (-1)^{y/4} 2x (p = 1 mod 8) or "
      "(-1)^{(y-2)/4} 2y (p = 5 mod 8); both 0 if p = 3 mod 4 (mod p; p = x^2+y^2, 4 | x-1)",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        std::vector<Opt> up, down;
        if (p % 4 == 3) {
          up.push_back({r.zero(), "p=3 mod 4"});
          down = up;
        } else {
          const FormSpec f{1, 1, 1};
          up = rep_options(p, f, NormalizationRule::x_mod(4, 1), [&](const Representation& rep) {
            return signed_value(r, sp((p - 1) / 4), 2, rep.x);
          });
          if (p % 8 == 1) {
            down = rep_options(p, f, NormalizationRule::x_mod(4, 1),
                               [&](const Representation& rep) { return signed_value(r, rep.y / 4, 2, rep.x); });
          } else {
            down = rep_options(p, f, NormalizationRule::none(),
                               [&](const Representation& rep) { return signed_value(r, (rep.y - 2) / 4, 2, rep.y); });
          }
        }
        check_any(ctx, "(-8)^k", {}, sq_sum(ctx, 1, rat(-1, 4), -8), up);
        check_any(ctx, "(-8)^-k", {}, sq_sum(ctx, 1, rat(-1, 4), rat(-1, 8)), down);
      });

  add(reg, "T5.5", Kind::theorem, 1, "p > 3",
      "sum C(-1/4,k)^2 4^k = (3-(-1)^{(p-1)/2})/2 (2/p) sum C(-1/4,k)^2/4^k = (-1)^{(p-1)/4+(A-1)/2} 2A "
      "(p = 1 mod 12); (-1)^{(p+1)/4} 6B (p = 7 mod 12, 4 | B-1); 0 if p = 2 mod 3 (mod p; p = A^2+3B^2)",
      p_greater(3, "p = 3 excluded"), [](Context& ctx) {
        const Ring& r = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        const FormSpec f{1, 3, 1};
        std::vector<Opt> value;
        if (p % 12 == 1) {
          value = rep_options(p, f, NormalizationRule::none(), [&](const Representation& rep) {
            return signed_value(r, sp((p - 1) / 4) + (rep.x - 1) / 2, 2, rep.x);
          });
        } else if (p % 12 == 7) {
          value = rep_options(p, f, NormalizationRule::y_mod(4, 1), [&](const Representation& rep) {
            return signed_value(r, sp((p + 1) / 4), 6, rep.y);
          });
        } else {
          value.push_back({r.zero(), "p=2 mod 3"});
        }
        const std::int64_t factor = (p % 4 == 1 ? 1 : 2) * legendre_symbol(2, p);
        ratio_and_value(ctx, sq_sum(ctx, 1, rat(-1, 4), 4), sq_sum(ctx, 1, rat(-1, 4), rat(1, 4)), r(factor),
                        Q(factor), value);
      });

  add(reg, "T5.6", Kind::theorem, 1, "p != 2, 7",
      "sum C(-1/4,k)^2 64^k = (9-7(-1)^{(p-1)/2})/2 (2/p) sum C(-1/4,k)^2/64^k = (-1)^{(p-1)/4+(x-1)/2} 2x "
      "(p = 1 mod 4); (-1)^{(p+1)/4+(y-1)/2} 42y (p = 3 mod 4); 0 if p = 3,5,6 mod 7 (mod p; p = x^2+7y^2)",
      p_not_in({7}, "denominator 63 in the derivation"), [](Context& ctx) {
        const Ring& r = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        const FormSpec f{1, 7, 1};
        std::vector<Opt> value;
        const std::uint64_t c = p % 7;
        if (c == 1 || c == 2 || c == 4) {
          value = rep_options(p, f, NormalizationRule::none(), [&](const Representation& rep) {
            if (p % 4 == 1) return signed_value(r, sp((p - 1) / 4) + (rep.x - 1) / 2, 2, rep.x);
            return signed_value(r, sp((p + 1) / 4) + (rep.y - 1) / 2, 42, rep.y);
          });
        } else {
          value.push_back({r.zero(), "p=3,5,6 mod 7"});
        }
        const std::int64_t factor = (p % 4 == 1 ? 1 : 8) * legendre_symbol(2, p);
        ratio_and_value(ctx, sq_sum(ctx, 1, rat(-1, 4), 64), sq_sum(ctx, 1, rat(-1, 4), rat(1, 64)), r(factor),
                        Q(factor), value);
      });
}

}  // namespace sec5

inline void add_section5(Registry& reg) { sec5::add_all(reg); }

}  // namespace supercong::stmt
