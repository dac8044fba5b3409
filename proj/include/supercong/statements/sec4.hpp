#pragma once

// S_n(a,b) = sum_{k<=n} C(a,k) C(b-a,k) and its value at n = p-1.

#include "supercong/statements/common.hpp"

namespace supercong::stmt {

namespace sec4 {

inline SumValue s_full(const Context& ctx, int e, const Rational& a, const Rational& b) {
  return full_sum(ctx, e, a, b - a, 1);
}

/// Theorem-style value of S_{p-1}(a,b) mod p^2.
inline Residue general_value(const Ring& r, const Rational& a, const Rational& b) {
  const std::uint64_t p = r.p();
  const std::uint64_t A = least_residue(a, p), B = least_residue(b, p);
  if (A > B) {
    const std::int64_t d = sp(A) - sp(B);
    return r(sgn_pow(d - 1)) / (r(d) * ibinom(A, B, r)) * R(r, b - Q(B));
  }
  const Rational ba = b - a;
  const std::uint64_t C = least_residue(ba, p);
  return ibinom(B, A, r) *
         (1 + R(r, b - Q(B)) * harmonic(B, r) - R(r, a - Q(A)) * harmonic(A, r) - R(r, ba - Q(C)) * harmonic(C, r));
}

inline std::vector<std::uint64_t> n_sample(const Context& ctx, const char* tag, std::uint64_t lo = 0) {
  const std::uint64_t p = ctx.p();
  return grids::int_sample(lo, p - 1, 16, 5, {lo, 1, 2, (p - 1) / 2, p - 1}, ctx.options().seed, p, tag);
}

inline void add_all(Registry& reg) {
  add(reg, "I4.2", Kind::identity, 2, "n >= 0",
      "(a-b)S_n(a,b) + (a+1)S_n(a+1,b) = (2a-b+1)C(a,n)C(b-a-1,n)", always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        const auto as = grids::a_grid_small(p, ctx.options().seed);
        const auto bs = grids::p_integral(p, {rat(-1, 2), rat(-3, 4), rat(0), rat(1), rat(-1, 3), rat(2), rat(1, 2)});
        for (std::uint64_t n : n_sample(ctx, "I4.2")) {
          for (const Rational& a : as) {
            const Residue A = R(r, a);
            for (const Rational& b : bs) {
              const Residue B = R(r, b);
              const Residue lhs = (A - B) * sn_eval(A, B, n) + (A + 1) * sn_eval(A + 1, B, n);
              const Residue rhs = (2 * A - B + 1) * gbinom(A, n) * gbinom(B - A - 1, n);
              ctx.check("identity", {{"a", str(a)}, {"b", str(b)}, {"n", str(n)}}, lhs, rhs, ctx.exact([&]() -> Rational {
                return (a - b) * ex::exact_sn(a, b, n) + (a + 1) * ex::exact_sn(a + 1, b, n);
              }));
            }
          }
        }
      });

  add(reg, "L4.1", Kind::lemma, 2, "b, c, t p-integral",
      "sum_{k<p} C(pt,k)C(b+cpt,k) = 1 + pt H_<b> mod p^2", always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        for (const Rational& b : grids::b_grid(p, ctx.options().seed)) {
          const std::uint64_t B = least_residue(b, p);
          for (const Rational& c : grids::p_integral(p, {rat(0), rat(1), rat(-1, 2)})) {
            for (const Rational& t : grids::p_integral(p, {rat(0), rat(1), rat(2), rat(1, 2)})) {
              const Rational pt = Q(p) * t;
              const Residue rhs = 1 + R(r, pt) * harmonic(B, r);
              check_sum(ctx, "sum", {{"b", str(b)}, {"c", str(c)}, {"t", str(t)}}, full_sum(ctx, 2, pt, b + c * pt, 1),
                        rhs);
            }
          }
        }
      });

  add(reg, "L4.2", Kind::lemma, 3, "1 <= m <= p-1, t p-integral",
      "C(m+pt-1, p-1) = pt/m - p^2t^2/m^2 + (p^2 t/m) H_m mod p^3", always(), [](Context& ctx) {
        const Ring& r3 = ctx.ring(3);
        const Ring& r2 = ctx.ring(2);
        const Ring& r1 = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        const auto h = harmonic_table(r1);
        for (const Rational& t : grids::p_integral(p, {rat(0), rat(1), rat(2), rat(1, 2), rat(-1, 3)})) {
          for (std::uint64_t m = 1; m < p; ++m) {
            const Rational top = Q(m) + Q(p) * t - 1;
            const Residue lhs = gbinom(R(r3, top), p - 1);
            const Rational tm = t / Q(m);
            const Residue first = mul_by_p(R(r2, tm), r3);
            const Residue second_inner = r1(-1) * R(r1, tm * tm) + R(r1, tm) * Residue(r1, h[m]);
            const Residue rhs = first + mul_by_p(mul_by_p(second_inner, r2), r3);
            ctx.check("binomial", {{"m", str(m)}, {"t", str(t)}}, lhs, rhs,
                      ctx.exact([&]() -> Rational { return ex::exact_gbinom(top, p - 1); }));
          }
        }
      });

  add(reg, "L4.3", Kind::lemma, 2, "1 <= m <= p-1; b, t p-integral",
      "C(b-(m+pt), p-1) = 1 if m = b+1; (b-<b>-pt)/(b+1-m) if m <= <b>; (b-<b>-p(t+1))/(b+1-m) if m > <b>+1 (mod p^2)",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        for (const Rational& b : grids::b_grid(p, ctx.options().seed)) {
          const std::uint64_t B = least_residue(b, p);
          auto ms = grids::int_sample(1, p - 1, 16, 5, {1, B, B + 1, B + 2, p - 1}, ctx.options().seed, p, "L4.3");
          for (std::uint64_t m : ms) {
            for (const Rational& t : grids::p_integral(p, {rat(0), rat(1), rat(2), rat(1, 2)})) {
              const Rational top = b - (Q(m) + Q(p) * t);
              // The displayed quotients carry the wrong sign: expanding the falling
              // factorial gives denominator b+1-m.  Both versions are kept.
              Residue rhs, stated;
              std::string branch;
              if (m == B + 1) {
                rhs = stated = r.one();
                branch = "m=b+1";
              } else {
                const Rational num = b - Q(B) - Q(p) * (m <= B ? t : Rational(t + 1));
                rhs = R(r, num / (b + 1 - Q(m)));
                stated = -rhs;
                branch = m <= B ? "m<=<b>" : "m><b>+1";
              }
              const Bindings bind{{"b", str(b)}, {"m", str(m)}, {"t", str(t)}};
              const Residue lhs = gbinom(R(r, top), p - 1);
              const auto exact = ctx.exact([&]() -> Rational { return ex::exact_gbinom(top, p - 1); });
              Check c{"binomial", bind, {}, false};
              c.candidates.push_back(Candidate{lhs, rhs, branch, exact});
              ctx.emit(std::move(c));
              Check d{"stated sign", bind, {}, true};
              d.candidates.push_back(Candidate{lhs, stated, branch, exact});
              ctx.emit(std::move(d));
            }
          }
        }
      });

  add(reg, "T4.1", Kind::theorem, 2, "a, b p-integral",
      "S_{p-1}(a,b) = (-1)^{A-B-1}(b-B)/((A-B)C(A,B)) if A > B; else C(B,A)(1 + (b-B)H_B - (a-A)H_A "
      "- (b-a-<b-a>)H_<b-a>) (mod p^2; A=<a>, B=<b>)",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        const auto bs = grids::b_grid(p, ctx.options().seed);
        for (const Rational& a : grids::a_grid(p)) {
          for (const Rational& b : bs) {
            const bool above = least_residue(a, p) > least_residue(b, p);
            Check c{"sum", {{"a", str(a)}, {"b", str(b)}}, {}, false};
            SumValue lhs = s_full(ctx, 2, a, b);
            c.candidates.push_back(Candidate{lhs.mod, general_value(r, a, b), above ? "<a> > <b>" : "<a> <= <b>", lhs.exact});
            ctx.emit(std::move(c));
          }
        }
      });

  add(reg, "C4.1", Kind::corollary, 1, "a, b p-integral", "S_{p-1}(a,b) = C(<b>,<a>) mod p", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        const auto bs = grids::b_grid(p, ctx.options().seed);
        for (const Rational& a : grids::a_grid(p)) {
          for (const Rational& b : bs) {
            check_sum(ctx, "sum", {{"a", str(a)}, {"b", str(b)}}, s_full(ctx, 1, a, b),
                      ibinom(least_residue(b, p), least_residue(a, p), r));
          }
        }
      });

  add(reg, "C4.2", Kind::corollary, 2, "a p-integral", "sum_{k<p} C(a,k)C(-a,k) = 0 if a != 0, 1 if a = 0 (mod p^2)",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        for (const Rational& a : grids::a_grid(ctx.p())) {
          const bool zero = least_residue(a, ctx.p()) == 0;
          check_sum(ctx, "sum", {{"a", str(a)}}, s_full(ctx, 2, a, 0), zero ? r.one() : r.zero());
        }
      });

  add(reg, "I4.5", Kind::identity, 2, "n >= 0", "S_n(a,0) = C(n+a,n)C(n-a,n)", always(), [](Context& ctx) {
    const Ring& r = ctx.ring(2);
    for (std::uint64_t n : n_sample(ctx, "I4.5")) {
      for (const Rational& a : grids::a_grid_small(ctx.p(), ctx.options().seed)) {
        const Residue A = R(r, a);
        ctx.check("identity", {{"a", str(a)}, {"n", str(n)}}, sn_eval(A, r.zero(), n),
                  gbinom(A + sp(n), n) * gbinom(sp(n) - A, n), ctx.exact([&]() -> Rational { return ex::exact_sn(a, 0, n); }));
      }
    }
  });

  add(reg, "C4.3", Kind::corollary, 2, "a p-integral",
      "sum_{k<p} C(a,k)C(1-a,k) = 0 if a(1-a) != 0; 1+a if a = 0; 2-a if a = 1 (mod p^2)", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        for (const Rational& a : grids::a_grid(ctx.p())) {
          const std::uint64_t A = least_residue(a, ctx.p());
          Residue rhs = r.zero();
          if (A == 0) rhs = 1 + R(r, a);
          if (A == 1) rhs = 2 - R(r, a);
          check_sum(ctx, "sum", {{"a", str(a)}}, s_full(ctx, 2, a, 1), rhs);
        }
      });

  add(reg, "I4.6", Kind::identity, 2, "n >= 1", "S_n(a,1) = -((a^2-a-n)/n^2) C(a-2,n-1)C(-a-1,n-1)", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        for (std::uint64_t n : n_sample(ctx, "I4.6", 1)) {
          for (const Rational& a : grids::a_grid_small(ctx.p(), ctx.options().seed)) {
            const Residue A = R(r, a);
            const Residue N = r(sp(n));
            const Residue rhs = -(A * A - A - N) / (N * N) * gbinom(A - 2, n - 1) * gbinom(-A - 1, n - 1);
            ctx.check("identity", {{"a", str(a)}, {"n", str(n)}}, sn_eval(A, r.one(), n), rhs,
                      ctx.exact([&]() -> Rational { return ex::exact_sn(a, 1, n); }));
          }
        }
      });

  add(reg, "T4.2", Kind::theorem, 2, "p odd prime",
      "sum C(-1/4,k)C(-1/2,k) = (-1)^{(p+1)/4} p / C((p-1)/2,(p+1)/4) if p = 3 mod 4; "
      "(-1)^{(p-1)/4}(2x - p/(2x)) if p = x^2+y^2, 4 | x-1 (mod p^2)",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        std::vector<Opt> opts;
        if (p % 4 == 3) {
          opts.push_back({r(sgn_pow(sp((p + 1) / 4))) * r(sp(p)) / ibinom((p - 1) / 2, (p + 1) / 4, r), "p=3 mod 4"});
        } else {
          const int sg = sgn_pow(sp((p - 1) / 4));
          opts = rep_options(p, {1, 1, 1}, NormalizationRule::x_mod(4, 1),
                             [&](const Representation& rep) { return r(sg) * lin_minus_p_over(r, 2, rep.x, 1, 2); });
        }
        check_any(ctx, "sum", {}, full_sum(ctx, 2, rat(-1, 4), rat(-1, 2), 1), opts);
      });

  add(reg, "T4.3", Kind::theorem, 2, "p > 3",
      "sum C(-1/6,k)C(-1/3,k) = (3p/2)/C((p-1)/2,(p-5)/6) if p = 2 mod 3; 2A - p/(2A) if p = A^2+3B^2, 3 | A-1 "
      "(mod p^2)",
      p_greater(3, "denominator 3"), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        std::vector<Opt> opts;
        if (p % 3 == 2) {
          opts.push_back({r(3 * sp(p)) / r(2) / ibinom((p - 1) / 2, (p - 5) / 6, r), "p=2 mod 3"});
        } else {
          opts = rep_options(p, {1, 3, 1}, NormalizationRule::x_mod(3, 1),
                             [&](const Representation& rep) { return lin_minus_p_over(r, 2, rep.x, 1, 2); });
        }
        check_any(ctx, "sum", {}, full_sum(ctx, 2, rat(-1, 6), rat(-1, 3), 1), opts);
      });
}

}  // namespace sec4

inline void add_section4(Registry& reg) { sec4::add_all(reg); }

}  // namespace supercong::stmt
