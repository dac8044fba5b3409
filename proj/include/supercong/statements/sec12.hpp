#pragma once

// P_{p-1}(a, x) modulo p^2 and p^3: the defining identities, the
// (-1/p) family, the symmetry theorem and what follows from it.

#include <map>

#include "supercong/statements/common.hpp"

namespace supercong::stmt {

namespace sec12 {

inline int sign_of(const Rational& a, std::uint64_t p) { return least_residue(a, p) % 2 == 0 ? 1 : -1; }

inline std::vector<std::uint64_t> pn_terms(const Ring& ring, const Rational& a) {
  Residue A = R(ring, a);
  return hyper_terms(A, -1 - A, ring.one(), ring.p() - 1);
}

/// The four sums C(ak,k)C(bk,k)/D^k equal to C(-1/m,k)C(-1+1/m,k).
struct RvSum {
  long m;
  Rational (*literal)(std::uint64_t k);
  const char* text;
};

inline Rational rv2(std::uint64_t k) {
  Rational c = ex::exact_binomial(2 * k, k);
  return c * c / ex::exact_pow(Rational(16), k);
}
inline Rational rv3(std::uint64_t k) {
  return ex::exact_binomial(2 * k, k) * ex::exact_binomial(3 * k, k) / ex::exact_pow(Rational(27), k);
}
inline Rational rv4(std::uint64_t k) {
  return ex::exact_binomial(2 * k, k) * ex::exact_binomial(4 * k, 2 * k) / ex::exact_pow(Rational(64), k);
}
inline Rational rv6(std::uint64_t k) {
  return ex::exact_binomial(3 * k, k) * ex::exact_binomial(6 * k, 3 * k) / ex::exact_pow(Rational(432), k);
}

inline const RvSum& rv(long m) {
  static const RvSum table[] = {{2, rv2, "C(2k,k)^2/16^k"},
                                {3, rv3, "C(2k,k)C(3k,k)/27^k"},
                                {4, rv4, "C(2k,k)C(4k,2k)/64^k"},
                                {6, rv6, "C(3k,k)C(6k,3k)/432^k"}};
  for (const auto& r : table) {
    if (r.m == m) return r;
  }
  throw std::logic_error("no such family");
}

/// Terms of the literal sum times an extra weight w_k:
/// the ratio of consecutive terms is (mk-m+1)(mk-1)/(m k)^2.
enum class Extra { none, half_power, central_over_4k };

inline SumValue rv_literal(const Context& ctx, long m, Extra extra) {
  const Ring& r = ctx.ring(2);
  const std::uint64_t p = ctx.p();
  Residue t = r.one(), w = r.one(), sum = r.one();
  const Residue half = r(2).inv();
  for (std::uint64_t k = 1; k < p; ++k) {
    const std::int64_t kk = sp(k);
    t = t * r(m * kk - m + 1) * r(m * kk - 1) / (r(m * kk) * r(m * kk));
    if (extra == Extra::half_power) w = w * half;
    if (extra == Extra::central_over_4k) w = w * r(2 * kk - 1) / r(2 * kk);
    sum += t * w;
  }
  auto exact = ctx.exact([&]() -> Rational {
    Rational s = 0;
    for (std::uint64_t k = 0; k < p; ++k) {
      Rational e = rv(m).literal(k);
      if (extra == Extra::half_power) e /= ex::exact_pow(Rational(2), k);
      if (extra == Extra::central_over_4k) e *= ex::exact_binomial(2 * k, k) / ex::exact_pow(Rational(4), k);
      s += e;
    }
    return s;
  });
  return {sum, exact};
}

/// sum_k C(a,k)C(-1-a,k) w_k against precomputed terms.
inline Residue dot(const Ring& ring, const std::vector<std::uint64_t>& c, const std::vector<std::uint64_t>& w) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < c.size() && k < w.size(); ++k) acc = ring.add(acc, ring.mul(c[k], w[k]));
  return Residue(ring, acc);
}

inline ex::RatPoly exact_pn_poly(const Rational& a, std::uint64_t n) { return ex::exact_pn_coeffs(a, n); }

// P(a+1), P(a), P(a-1) combination of the three-term relation, evaluated.
inline Residue three_term(const Residue& a, const Residue& x, std::uint64_t n) {
  return (a + 1) * pn_eval(a + 1, x, n) - (2 * a + 1) * x * pn_eval(a, x, n) + a * pn_eval(a - 1, x, n);
}

inline Rational exact_three_term(const Rational& a, const Rational& x, std::uint64_t n) {
  return (a + 1) * ex::exact_pn(a + 1, x, n) - (2 * a + 1) * x * ex::exact_pn(a, x, n) + a * ex::exact_pn(a - 1, x, n);
}

inline void rv_statement(Registry& reg, const char* id, long m, int symbol_base) {
  std::string formula = std::string("sum_{k<p} ") + rv(m).text + " = (" + std::to_string(symbol_base) + "/p) mod p^2";
  add(reg, id, Kind::theorem, 2, "p odd prime", formula, denominators({static_cast<std::uint64_t>(m)}),
      [m, symbol_base](Context& ctx) {
        const Ring& r = ctx.ring(2);
        Residue rhs = r(legendre_symbol(symbol_base, ctx.p()));
        SumValue lit = rv_literal(ctx, m, Extra::none);
        check_sum(ctx, "literal sum", {}, lit, rhs);
        Rational a = rat(-1, m);
        check_sum(ctx, "binomial form", {{"a", str(a)}}, full_sum(ctx, 2, a, -1 - a, 1), rhs);
      });
}

inline void vanishing_rv(Registry& reg, const char* id, long m, Extra extra, std::uint64_t mod,
                         std::vector<std::uint64_t> classes, std::string literal_text) {
  add(reg, id, Kind::theorem, 2, "p in the stated classes", "sum_{k<p} " + literal_text + " = 0 mod p^2",
      all_of({denominators({static_cast<std::uint64_t>(m)}), p_in_classes(mod, classes)}), [m, extra](Context& ctx) {
        const Ring& r = ctx.ring(2);
        check_sum(ctx, "literal sum", {}, rv_literal(ctx, m, extra), r.zero());
      });
}

inline void add_intro(Registry& reg) {
  add(reg, "I1.1", Kind::identity, 2, "any a, x; n <= p-1",
      "sum C(a,k)C(-1-a,k)((1-x)/2)^k = sum C(a,k)C(a+k,k)((x-1)/2)^k = sum C(a+k,2k)C(2k,k)((x-1)/2)^k",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        const Residue half = r(2).inv();
        for (std::uint64_t n : {p - 1, (p - 1) / 2}) {
          for (const Rational& a : grids::a_grid_small(p, ctx.options().seed)) {
            const Residue A = R(r, a);
            for (const Rational& x : grids::x_grid(p)) {
              const Residue h = (R(r, x) - 1) * half;  // (x-1)/2
              Bindings b{{"a", str(a)}, {"x", str(x)}, {"n", str(n)}};
              const Residue first = hyper_sum(A, -1 - A, -h, n);
              auto exact = ctx.exact([&]() -> Rational { return ex::exact_pn(a, x, n); });

              Residue ca = r.one(), cak = r.one(), pw = r.one(), second = r.one();
              for (std::uint64_t k = 0; k < n; ++k) {
                ca = ca * (A - sp(k)) / r(sp(k + 1));
                cak = cak * (A + sp(k + 1)) / r(sp(k + 1));
                pw = pw * h;
                second += ca * cak * pw;
              }
              ctx.check("second form", b, first, second, exact);

              if (2 * n < p) {
                Residue b1 = r.one(), b2 = r.one(), third = r.one();
                pw = r.one();
                for (std::uint64_t k = 0; k < n; ++k) {
                  const std::int64_t kk = sp(k);
                  b1 = b1 * (A + (kk + 1)) * (A - kk) / (r(2 * kk + 1) * r(2 * kk + 2));
                  b2 = b2 * r(2 * kk + 1) * r(2 * kk + 2) / (r(kk + 1) * r(kk + 1));
                  pw = pw * h;
                  third += b1 * b2 * pw;
                }
                ctx.check("third form", b, first, third, exact);
              }
            }
          }
        }
      });

  add(reg, "I1.2", Kind::identity, 2, "integer n < p",
      "P_n(n,x) = 2^{-n} sum_{k<=n/2} C(n,k)(-1)^k C(2n-2k,n) x^{n-2k} = classical P_n(x)", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        auto ns = grids::int_sample(0, p - 1, 40, 8, {0, 1, 2, (p - 1) / 2, p - 2, p - 1}, ctx.options().seed, p, "I1.2");
        for (std::uint64_t n : ns) {
          std::vector<Residue> coef;  // C(n,k)(-1)^k C(2n-2k,n)
          for (std::uint64_t k = 0; 2 * k <= n; ++k) {
            Residue c = big_binom(n, k, r) * big_binom(2 * n - 2 * k, n, r);
            coef.push_back(k % 2 ? -c : c);
          }
          const Residue scale = r(2).inv().pow(n);
          for (const Rational& x : grids::x_grid(p)) {
            const Residue X = R(r, x);
            Bindings b{{"n", str(n)}, {"x", str(x)}};
            const Residue lhs = pn_eval(r(sp(n)), X, n);
            auto exact = ctx.exact([&]() -> Rational { return ex::exact_pn(Q(n), x, n); });
            Residue explicit_sum = r.zero();
            for (std::uint64_t k = 0; k < coef.size(); ++k) explicit_sum += coef[k] * X.pow(n - 2 * k);
            ctx.check("explicit sum", b, lhs, scale * explicit_sum, exact);
            ctx.check("three-term recurrence", b, lhs, Residue(r, legendre_table(n, X)[n]), exact);
          }
        }
      });

  rv_statement(reg, "E1.3", 2, -1);
  rv_statement(reg, "E1.4", 3, -3);
  rv_statement(reg, "E1.5", 4, -2);
  rv_statement(reg, "E1.6", 6, -1);
}

inline void add_symmetry(Registry& reg) {
  add(reg, "L2.1", Kind::lemma, 2, "n >= 1",
      "(a+1)P_n(a+1,x) - (2a+1)x P_n(a,x) + a P_n(a-1,x) = -2(2a+1) C(a,n)C(a+n,n)((x-1)/2)^{n+1}", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        auto ns = grids::int_sample(1, p - 1, 24, 6, {1, 2, (p - 1) / 2, p - 2, p - 1}, ctx.options().seed, p, "L2.1");
        for (std::uint64_t n : ns) {
          for (const Rational& a : grids::a_grid_small(p, ctx.options().seed)) {
            const Residue A = R(r, a);
            for (const Rational& x : grids::x_grid(p)) {
              const Residue X = R(r, x);
              const Residue rhs = r(-2) * (2 * A + 1) * gbinom(A, n) * gbinom(A + sp(n), n) * ((X - 1) / r(2)).pow(n + 1);
              ctx.check("identity", {{"a", str(a)}, {"x", str(x)}, {"n", str(n)}}, three_term(A, X, n), rhs,
                        ctx.exact([&]() -> Rational { return exact_three_term(a, x, n); }));
            }
          }
        }
      });

  add(reg, "T2.1", Kind::theorem, 3, "p odd prime, a p-integral",
      "(a+1)P(a+1,x) - (2a+1)xP(a,x) + aP(a-1,x) = -2p^2(1/A+1/(A+1))u(1+u)((x-1)/2)^p, "
      "-2a(p+a+1)((x-1)/2)^p if a=0, 2(a+1)(a-p)((x-1)/2)^p if a=-1 (mod p^3; A=<a>, u=(a-A)/p)",
      always(), [](Context& ctx) {
        const Ring& r3 = ctx.ring(3);
        const Ring& r1 = ctx.ring(1);
        const Ring& r2 = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        const std::int64_t P = sp(p);
        for (const Rational& a : grids::a_grid(p)) {
          const std::uint64_t A = least_residue(a, p);
          const Residue a3 = R(r3, a);
          for (const Rational& x : grids::x_grid(p)) {
            const Residue X = R(r3, x);
            const Residue hp = ((X - 1) / r3(2)).pow(p);
            Residue rhs;
            std::string branch;
            if (A == 0) {
              rhs = r3(-2) * a3 * (a3 + (P + 1)) * hp;
              branch = "a=0";
            } else if (A == p - 1) {
              rhs = r3(2) * (a3 + 1) * (a3 - P) * hp;
              branch = "a=-1";
            } else {
              const Rational u = (a - Q(A)) / Q(p);
              const Residue u1 = R(r1, u);
              const Residue factor = (r1(sp(A)).inv() + r1(sp(A) + 1).inv()) * u1 * (u1 + 1) *
                                     ((R(r1, x) - 1) / r1(2)).pow(p);
              rhs = mul_by_p(mul_by_p(r1(-2) * factor, r2), r3);
              branch = "generic";
            }
            Check c{"three-term relation", {{"a", str(a)}, {"x", str(x)}}, {}, false};
            c.candidates.push_back(Candidate{three_term(a3, X, p - 1), rhs, branch,
                                             ctx.exact([&]() -> Rational { return exact_three_term(a, x, p - 1); })});
            ctx.emit(std::move(c));
          }
        }
      });

  add(reg, "L2.2", Kind::lemma, 2, "t p-integral",
      "P_{p-1}(pt,x) = 1 - t + t((1+x)/2)^p + t((1-x)/2)^p mod p^2, = 1 mod p", always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const Ring& r1 = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        for (const Rational& t : grids::p_integral(p, {rat(0), rat(1), rat(2), rat(1, 2)})) {
          const Rational a = Q(p) * t;
          const Residue T = R(r, t);
          for (const Rational& x : grids::x_grid(p)) {
            const Residue X = R(r, x);
            const Residue hp = ((1 + X) / r(2)).pow(p), hm = ((1 - X) / r(2)).pow(p);
            Bindings b{{"t", str(t)}, {"x", str(x)}};
            SumValue lhs{pn_eval(R(r, a), X, p - 1), ctx.exact([&]() -> Rational { return ex::exact_pn(a, x, p - 1); })};
            check_sum(ctx, "mod p^2", b, lhs, 1 - T + T * hp + T * hm);
            check_sum(ctx, "mod p", b, project(lhs, r1), r1.one());
          }
        }
      });

  add(reg, "L2.3", Kind::lemma, 2, "t p-integral",
      "P_{p-1}(1+pt,x) = (1-t)x + pt(x-1)/2 + t{(p+1)(x-1)/2 (h+^p + h-^p) + (p+1)^2 h-^p + h+^{p+1} - h-^{p+1}} "
      "mod p^2 with h+-=(1+-x)/2; = x mod p",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const Ring& r1 = ctx.ring(1);
        const std::uint64_t p = ctx.p();
        const std::int64_t P = sp(p);
        for (const Rational& t : grids::p_integral(p, {rat(0), rat(1), rat(2), rat(1, 2)})) {
          const Rational a = 1 + Q(p) * t;
          const Residue T = R(r, t);
          for (const Rational& x : grids::x_grid(p)) {
            const Residue X = R(r, x);
            const Residue hp = (1 + X) / r(2), hm = (1 - X) / r(2);
            const Residue hpp = hp.pow(p), hmp = hm.pow(p);
            const Residue brace = r(P + 1) * ((X - 1) / r(2)) * (hpp + hmp) + r(P + 1) * r(P + 1) * hmp + hpp * hp -
                                  hmp * hm;
            const Residue rhs = (1 - T) * X + r(P) * T * (X - 1) / r(2) + T * brace;
            Bindings b{{"t", str(t)}, {"x", str(x)}};
            SumValue lhs{pn_eval(R(r, a), X, p - 1), ctx.exact([&]() -> Rational { return ex::exact_pn(a, x, p - 1); })};
            check_sum(ctx, "mod p^2", b, lhs, rhs);
            check_sum(ctx, "mod p", b, project(lhs, r1), R(r1, x));
          }
        }
      });

  add(reg, "T2.2", Kind::theorem, 2, "p odd prime, a p-integral",
      "P_{p-1}(a,x) = (-1)^<a> P_{p-1}(a,-x) mod p^2; equivalently sum C(a,k)C(-1-a,k)(x^k - (-1)^<a>(1-x)^k) = 0",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        const std::uint64_t n = p - 1;
        const auto xs_all = all_points(r);
        for (const Rational& a : grids::a_grid(p)) {
          const Residue A = R(r, a);
          const int s = sign_of(a, p);
          Bindings b{{"a", str(a)}};
          if (ctx.coeffwise()) {
            // P(a,x) - sP(a,-x) has coefficient (1 - s(-1)^j) d_j; only one parity survives.
            CoeffPoly d = pn_coeffs(A, n);
            std::optional<ex::RatPoly> e;
            if (ctx.oracle()) e = exact_pn_poly(a, n);
            for (std::uint64_t j = (s == 1 ? 1 : 0); j <= n; j += 2) {
              std::optional<Rational> ej;
              if (e) ej = 2 * (*e)[j];
              ctx.check("coefficient", with(b, "j", str(j)), 2 * d[j], r.zero(), ej);
            }
            ctx.check("fast recurrence", b, pn_coeffs_fast(A, n).eval(r(3)), d.eval(r(3)),
                      ctx.exact([&]() -> Rational { return ex::exact_pn(a, Rational(3), n); }));

            // Restated form, coefficients of U(x) - sU(1-x).
            std::vector<std::uint64_t> u = hyper_terms(A, -1 - A, r.one(), n);
            std::vector<std::uint64_t> v = compose_one_minus_x(r, u);
            std::vector<std::uint64_t> diff(u.size());
            for (std::size_t j = 0; j < u.size(); ++j) diff[j] = s == 1 ? r.sub(u[j], v[j]) : r.add(u[j], v[j]);
            std::optional<ex::RatPoly> ed;
            if (ctx.oracle()) {
              ex::RatPoly eu(n + 1);
              for (std::uint64_t k = 0; k <= n; ++k) eu[k] = ex::exact_gbinom(a, k) * ex::exact_gbinom(-1 - a, k);
              ex::RatPoly ev = ex::exact_compose_one_minus_x(eu);
              ed = ex::RatPoly(n + 1);
              for (std::uint64_t k = 0; k <= n; ++k) (*ed)[k] = eu[k] - s * ev[k];
            }
            emit_zero_coeffs(ctx, "restated coefficient", b, r, diff, ed ? &*ed : nullptr);
          } else {
            // D(x) = 2 x^eps E(x^2); evaluate at every x in 1..p-1.
            CoeffPoly d = pn_coeffs_fast(A, n);
            std::vector<std::uint64_t> half_poly;
            for (std::uint64_t j = (s == 1 ? 1 : 0); j <= n; j += 2) half_poly.push_back(r.add(d.raw()[j], d.raw()[j]));
            std::vector<std::uint64_t> sq(p - 1), vals(p - 1);
            for (std::uint64_t x = 1; x < p; ++x) sq[x - 1] = r.mul(x, x);
            eval_many(r, half_poly, sq, vals);
            std::uint64_t bad = 0;
            for (std::uint64_t x = 1; x < p && bad == 0; ++x) {
              std::uint64_t v = s == 1 ? r.mul(vals[x - 1], x) : vals[x - 1];
              if (v != 0) bad = x;
            }
            const std::uint64_t x0 = bad ? bad : 1;
            Residue at = Residue(r, vals[x0 - 1]) * (s == 1 ? r(sp(x0)) : r.one());
            ctx.check("every x in 1..p-1", with(b, "x", str(x0)), at, r.zero(), ctx.exact([&]() -> Rational {
              return ex::exact_pn(a, Q(x0), n) - s * ex::exact_pn(a, -Q(x0), n);
            }));
            ctx.add_points(p - 1);
            for (const Rational& x : grids::x_grid(p)) {
              const Residue X = R(r, x);
              Bindings bx = with(b, "x", str(x));
              SumValue direct{pn_eval(A, X, n), ctx.exact([&]() -> Rational { return ex::exact_pn(a, x, n); })};
              check_sum(ctx, "fast recurrence", bx, direct, d.eval(X));
              check_sum(ctx, "direct evaluation", bx, direct, r(s) * pn_eval(A, -X, n));
              SumValue restated{hyper_sum(A, -1 - A, X, n), ctx.exact([&]() -> Rational { return ex::exact_hyper_sum(a, -1 - a, x, n); })};
              check_sum(ctx, "restated at x", bx, restated, r(s) * hyper_sum(A, -1 - A, 1 - X, n));
            }
          }
        }
      });

  add(reg, "C2.1", Kind::corollary, 2, "a != 0, -1 mod p",
      "(a+1)P'(a+1,x) - (2a+1)xP'(a,x) - (2a+1)P(a,x) + aP'(a-1,x) = 0 mod p^2 (n = p-1)",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        const std::uint64_t n = p - 1;
        const bool cw = ctx.coeffwise();
        std::map<std::uint64_t, CoeffPoly> cache;
        auto coeffs = [&](const Residue& A) -> const CoeffPoly& {
          auto it = cache.find(A.value());
          if (it == cache.end()) it = cache.emplace(A.value(), cw ? pn_coeffs(A, n) : pn_coeffs_fast(A, n)).first;
          return it->second;
        };
        const auto xs = all_points(r);
        for (const Rational& a : grids::a_grid(p)) {
          const std::uint64_t res = least_residue(a, p);
          if (res == 0 || res == p - 1) {
            ctx.skip_binding("a = 0 or -1 mod p");
            continue;
          }
          const Residue A = R(r, a);
          const CoeffPoly d1 = poly_derivative(coeffs(A + 1));
          const CoeffPoly d0 = poly_derivative(coeffs(A));
          const CoeffPoly dm = poly_derivative(coeffs(A - 1));
          const CoeffPoly& p0 = coeffs(A);
          std::vector<std::uint64_t> g(n + 1, 0);
          for (std::uint64_t j = 0; j <= n; ++j) {
            Residue v = (A + 1) * d1[j] - (2 * A + 1) * p0[j] + A * dm[j];
            if (j >= 1) v -= (2 * A + 1) * d0[j - 1];
            g[j] = v.value();
          }
          Bindings b{{"a", str(a)}};
          if (cw) {
            std::optional<ex::RatPoly> eg;
            if (ctx.oracle()) {
              ex::RatPoly e1 = ex::poly_derivative(exact_pn_poly(a + 1, n));
              ex::RatPoly e0 = ex::poly_derivative(exact_pn_poly(a, n));
              ex::RatPoly em = ex::poly_derivative(exact_pn_poly(a - 1, n));
              ex::RatPoly ep = exact_pn_poly(a, n);
              auto at = [](const ex::RatPoly& f, std::uint64_t j) { return j < f.size() ? f[j] : Rational(0); };
              eg = ex::RatPoly(n + 1);
              for (std::uint64_t j = 0; j <= n; ++j) {
                (*eg)[j] = (a + 1) * at(e1, j) - (2 * a + 1) * at(ep, j) + a * at(em, j) -
                           (j >= 1 ? (2 * a + 1) * at(e0, j - 1) : Rational(0));
              }
            }
            emit_zero_coeffs(ctx, "coefficient", b, r, g, eg ? &*eg : nullptr);
          } else {
            std::vector<std::uint64_t> vals(p);
            eval_many(r, g, xs, vals);
            std::uint64_t x0 = 0;
            while (x0 + 1 < p && vals[x0] == 0) ++x0;
            if (vals[x0] == 0) x0 = 0;
            ctx.check("every x in 0..p-1", with(b, "x", str(x0)), Residue(r, vals[x0]), r.zero());
            ctx.add_points(p);
          }
        }
      });

  add(reg, "C2.2", Kind::corollary, 2, "p odd prime, a p-integral", "sum_{k<p} C(a,k)C(-1-a,k) = (-1)^<a> mod p^2",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        for (const Rational& a : grids::a_grid(ctx.p())) {
          check_sum(ctx, "sum", {{"a", str(a)}}, full_sum(ctx, 2, a, -1 - a, 1), r(sign_of(a, ctx.p())));
        }
      });

  add(reg, "C2.3", Kind::corollary, 2, "<a> odd", "sum_{k<p} C(a,k)C(-1-a,k)/2^k = 0 mod p^2", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        for (const Rational& a : grids::a_grid(ctx.p())) {
          if (sign_of(a, ctx.p()) == 1) {
            ctx.skip_binding("<a> even");
            continue;
          }
          check_sum(ctx, "sum", {{"a", str(a)}}, full_sum(ctx, 2, a, -1 - a, rat(1, 2)), r.zero());
        }
      });

  vanishing_rv(reg, "E2.3", 2, Extra::half_power, 4, {3}, "C(2k,k)^2/32^k");
  vanishing_rv(reg, "E2.4", 3, Extra::half_power, 3, {2}, "C(2k,k)C(3k,k)/54^k");
  vanishing_rv(reg, "E2.5", 4, Extra::half_power, 8, {5, 7}, "C(2k,k)C(4k,2k)/128^k");
  vanishing_rv(reg, "E2.6", 6, Extra::half_power, 4, {3}, "C(3k,k)C(6k,3k)/864^k");

  add(reg, "L2.4", Kind::lemma, 2, "1 <= n",
      "sum_{k<=n} C(a,k)C(-1-a,k)/(k+1) = C(a-1,n)C(-2-a,n)/(n+1)", always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        auto ns = grids::int_sample(1, p - 2, 24, 6, {1, 2, (p - 1) / 2, p - 2}, ctx.options().seed, p, "L2.4");
        for (const Rational& a : grids::a_grid_small(p, ctx.options().seed)) {
          const Residue A = R(r, a);
          const auto c = hyper_terms(A, -1 - A, r.one(), p - 1);
          for (std::uint64_t n : ns) {
            Residue lhs = r.zero();
            for (std::uint64_t k = 0; k <= n; ++k) lhs += Residue(r, c[k]) / r(sp(k + 1));
            const Residue rhs = gbinom(A - 1, n) * gbinom(-2 - A, n) / r(sp(n + 1));
            ctx.check("identity", {{"a", str(a)}, {"n", str(n)}}, lhs, rhs, ctx.exact([&]() -> Rational {
              std::vector<Rational> w;
              for (std::uint64_t k = 0; k <= n; ++k) w.push_back(Rational(1, static_cast<unsigned long>(k + 1)));
              return ex::exact_weighted_sum(a, -1 - a, 1, w);
            }));
          }
        }
      });
}

inline void add_derived(Registry& reg) {
  add(reg, "T2.3", Kind::theorem, 2, "1 <= m < p",
      "sum_{k>=m} C(a,k)C(-1-a,k)C(k,m)(x^{k-m} - (-1)^{m+<a>}(1-x)^{k-m}) = 0; "
      "sum_{k<=p-2} C(a,k)C(-1-a,k)(x^{k+1} + (-1)^<a>(1-x)^{k+1})/(k+1) = 0, 1-2a-aQ, 2a+3+(1+a)Q "
      "with Q = (x^p-(x-1)^p-1)/p (mod p^2)",
      always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const Ring& r3 = ctx.ring(3);
        const std::uint64_t p = ctx.p();
        const std::uint64_t n = p - 1;
        const auto xs = all_points(r);
        std::vector<std::uint64_t> xs_mirror(p);
        for (std::uint64_t x = 0; x < p; ++x) xs_mirror[x] = r.from_signed(1 - sp(x));
        for (const Rational& a : grids::a_grid(p)) {
          const Residue A = R(r, a);
          const int s = sign_of(a, p);
          const auto c = hyper_terms(A, -1 - A, r.one(), n);
          // Part one.
          for (std::uint64_t m = 1; m <= 3 && m < p; ++m) {
            const int sm = (m % 2 ? -s : s);
            std::vector<std::uint64_t> u(n + 1 - m);
            Residue binom = r.one();  // C(k, m) for k = m + j
            for (std::uint64_t j = 0; j < u.size(); ++j) {
              if (j > 0) binom = binom * r(sp(m + j)) / r(sp(j));
              u[j] = r.mul(c[m + j], binom.value());
            }
            Bindings b{{"a", str(a)}, {"m", str(m)}};
            if (ctx.coeffwise()) {
              std::vector<std::uint64_t> v = compose_one_minus_x(r, u);
              std::vector<std::uint64_t> diff(u.size());
              for (std::size_t j = 0; j < u.size(); ++j) diff[j] = sm == 1 ? r.sub(u[j], v[j]) : r.add(u[j], v[j]);
              std::optional<ex::RatPoly> ed;
              if (ctx.oracle()) {
                ex::RatPoly eu(u.size());
                for (std::uint64_t j = 0; j < u.size(); ++j) {
                  eu[j] = ex::exact_gbinom(a, m + j) * ex::exact_gbinom(-1 - a, m + j) * ex::exact_binomial(m + j, m);
                }
                ex::RatPoly ev = ex::exact_compose_one_minus_x(eu);
                ed = ex::RatPoly(u.size());
                for (std::size_t j = 0; j < u.size(); ++j) (*ed)[j] = eu[j] - sm * ev[j];
              }
              emit_zero_coeffs(ctx, "part one coefficient", b, r, diff, ed ? &*ed : nullptr);
            } else {
              std::vector<std::uint64_t> v1(p), v2(p);
              eval_many(r, u, xs, v1);
              eval_many(r, u, xs_mirror, v2);
              std::uint64_t x0 = 0;
              Residue at = r.zero();
              for (std::uint64_t x = 0; x < p; ++x) {
                Residue d = Residue(r, v1[x]) - r(sm) * Residue(r, v2[x]);
                if (x == 0 || !d.is_zero()) {
                  at = d;
                  x0 = x;
                  if (!d.is_zero()) break;
                }
              }
              ctx.check("part one, every x in 0..p-1", with(b, "x", str(x0)), at, r.zero());
              ctx.add_points(p);
            }
          }
          // Part two.
          const std::uint64_t res = least_residue(a, p);
          const Rational delta = delta_p(a, p);
          Residue base = r.zero();
          if (res == 0) base = 1 - 2 * A;
          if (res == p - 1) base = 2 * A + 3;
          for (const Rational& x : grids::x_grid(p)) {
            const Residue X = R(r, x);
            Residue lhs = r.zero(), px = X, pm = 1 - X;
            for (std::uint64_t k = 0; k + 1 < p; ++k) {
              lhs += Residue(r, c[k]) * (px + r(s) * pm) / r(sp(k + 1));
              px = px * X;
              pm = pm * (1 - X);
            }
            const Residue X3 = R(r3, x);
            const Residue q = div_by_p(X3.pow(p) - (X3 - 1).pow(p) - 1, r);
            const Residue rhs = base - R(r, delta) * q;
            ctx.check("part two", {{"a", str(a)}, {"x", str(x)}}, lhs, rhs, ctx.exact([&]() -> Rational {
              Rational sum = 0;
              for (std::uint64_t k = 0; k + 1 < p; ++k) {
                sum += ex::exact_gbinom(a, k) * ex::exact_gbinom(-1 - a, k) *
                       (ex::exact_pow(x, k + 1) + s * ex::exact_pow(1 - x, k + 1)) /
                       Rational(static_cast<unsigned long>(k + 1));
              }
              return sum;
            }));
          }
        }
      });

  add(reg, "C2.4", Kind::corollary, 2, "1 <= m < p",
      "sum_{k=m}^{p-1} C(a,k)C(-1-a,k)C(k,m) = (-1)^{m+<a>} C(a,m)C(-1-a,m) mod p^2", always(), [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        auto ms = grids::int_sample(1, p - 1, 24, 6, {1, 2, 3, (p - 1) / 2, p - 2, p - 1}, ctx.options().seed, p, "C2.4");
        for (const Rational& a : grids::a_grid(p)) {
          const Residue A = R(r, a);
          const int s = sign_of(a, p);
          const auto c = hyper_terms(A, -1 - A, r.one(), p - 1);
          for (std::uint64_t m : ms) {
            Residue lhs = r.zero(), binom = r.one();
            for (std::uint64_t k = m; k < p; ++k) {
              if (k > m) binom = binom * r(sp(k)) / r(sp(k - m));
              lhs += Residue(r, c[k]) * binom;
            }
            const int sm = (m % 2 ? -s : s);
            ctx.check("sum", {{"a", str(a)}, {"m", str(m)}}, lhs, r(sm) * Residue(r, c[m]), ctx.exact([&]() -> Rational {
              std::vector<Rational> w(p, Rational(0));
              for (std::uint64_t k = m; k < p; ++k) w[k] = ex::exact_binomial(k, m);
              return ex::exact_weighted_sum(a, -1 - a, 1, w);
            }));
          }
        }
      });

  add(reg, "T2.4", Kind::theorem, 2, "f(0..p-1) p-integral",
      "sum_{k<p} C(a,k)C(-1-a,k)((-1)^<a> f(k) - sum_{m<=k} C(k,m)(-1)^m f(m)) = 0 mod p^2", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        struct Family {
          std::string name;
          std::vector<std::uint64_t> f;
          std::vector<Rational> exact;  // filled in oracle mode
        };
        std::vector<Family> fams;
        {
          Family central{"C(2m,m)/4^m", {}, {}};
          Residue v = r.one();
          for (std::uint64_t m = 0; m < p; ++m) {
            if (m > 0) v = v * r(2 * sp(m) - 1) / r(2 * sp(m));
            central.f.push_back(v.value());
            if (ctx.oracle()) central.exact.push_back(ex::exact_binomial(2 * m, m) / ex::exact_pow(Rational(4), m));
          }
          fams.push_back(std::move(central));
        }
        for (std::uint64_t e = 0; e <= 3; ++e) {
          Family power{"m^" + std::to_string(e), {}, {}};
          for (std::uint64_t m = 0; m < p; ++m) {
            power.f.push_back(r(sp(m)).pow(e).value());
            if (ctx.oracle()) power.exact.push_back(ex::exact_pow(Q(m), e));
          }
          fams.push_back(std::move(power));
        }
        {
          Family random{"seeded", {}, {}};
          auto rng = grids::rng_for(ctx.options().seed, p, "T2.4");
          std::uniform_int_distribution<std::uint64_t> dist(0, r.modulus() - 1);
          for (std::uint64_t m = 0; m < p; ++m) {
            random.f.push_back(dist(rng));
            if (ctx.oracle()) random.exact.push_back(Q(random.f.back()));
          }
          fams.push_back(std::move(random));
        }
        std::vector<std::vector<std::uint64_t>> transforms;
        std::vector<std::vector<Rational>> exact_transforms;
        for (const Family& fam : fams) {
          transforms.push_back(binom_transform_all(r, fam.f));
          if (ctx.oracle()) {
            std::vector<Rational> g(p, Rational(0));
            for (std::uint64_t k = 0; k < p; ++k) {
              for (std::uint64_t m = 0; m <= k; ++m) g[k] += (m % 2 ? -1 : 1) * ex::exact_binomial(k, m) * fam.exact[m];
            }
            exact_transforms.push_back(std::move(g));
          }
        }
        for (const Rational& a : grids::a_grid(p)) {
          const Residue A = R(r, a);
          const int s = sign_of(a, p);
          const auto c = hyper_terms(A, -1 - A, r.one(), p - 1);
          for (std::size_t i = 0; i < fams.size(); ++i) {
            std::vector<std::uint64_t> w(p);
            for (std::uint64_t k = 0; k < p; ++k) {
              w[k] = r.sub(s == 1 ? fams[i].f[k] : r.neg(fams[i].f[k]), transforms[i][k]);
            }
            ctx.check("sum", {{"a", str(a)}, {"f", fams[i].name}}, dot(r, c, w), r.zero(), ctx.exact([&]() -> Rational {
              std::vector<Rational> ew(p);
              for (std::uint64_t k = 0; k < p; ++k) ew[k] = s * fams[i].exact[k] - exact_transforms[i][k];
              return ex::exact_weighted_sum(a, -1 - a, 1, ew);
            }));
          }
        }
      });

  add(reg, "T2.5", Kind::theorem, 2, "<a> odd", "sum_{k<p} C(a,k)C(-1-a,k)C(2k,k)/4^k = 0 mod p^2", always(),
      [](Context& ctx) {
        const Ring& r = ctx.ring(2);
        const std::uint64_t p = ctx.p();
        std::vector<std::uint64_t> w(p);
        Residue v = r.one();
        for (std::uint64_t k = 0; k < p; ++k) {
          if (k > 0) v = v * r(2 * sp(k) - 1) / r(2 * sp(k));
          w[k] = v.value();
        }
        for (const Rational& a : grids::a_grid(p)) {
          if (sign_of(a, p) == 1) {
            ctx.skip_binding("<a> even");
            continue;
          }
          const Residue A = R(r, a);
          const auto c = hyper_terms(A, -1 - A, r.one(), p - 1);
          ctx.check("sum", {{"a", str(a)}}, dot(r, c, w), r.zero(), ctx.exact([&]() -> Rational {
            std::vector<Rational> ew(p);
            for (std::uint64_t k = 0; k < p; ++k) ew[k] = ex::exact_binomial(2 * k, k) / ex::exact_pow(Rational(4), k);
            return ex::exact_weighted_sum(a, -1 - a, 1, ew);
          }));
        }
      });

  vanishing_rv(reg, "E2.7", 2, Extra::central_over_4k, 4, {3}, "C(2k,k)^3/64^k");
  vanishing_rv(reg, "E2.8", 3, Extra::central_over_4k, 6, {5}, "C(2k,k)^2 C(3k,k)/108^k");
  vanishing_rv(reg, "E2.9", 4, Extra::central_over_4k, 8, {5, 7}, "C(2k,k)^2 C(4k,2k)/256^k");
  vanishing_rv(reg, "E2.10", 6, Extra::central_over_4k, 4, {3}, "C(2k,k)C(3k,k)C(6k,3k)/1728^k");
}

}  // namespace sec12

inline void add_section12(Registry& reg) {
  sec12::add_intro(reg);
  sec12::add_symmetry(reg);
  sec12::add_derived(reg);
}

}  // namespace supercong::stmt
