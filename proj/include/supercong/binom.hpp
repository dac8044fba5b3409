#pragma once

// Generalized binomials C(a, k) of rational argument and the truncated sums
// sum_k C(a,k) C(c,k) z^k every left-hand side is assembled from.

#include <cstdint>
#include <span>
#include <vector>

#include "supercong/padic.hpp"

namespace supercong {

/// Dense polynomial over Z/p^e; index = power of x.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(const Ring& ring, std::vector<std::uint64_t> coeffs) : ring_(&ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
  }

  const Ring& ring() const { return *ring_; }
  std::size_t size() const { return coeffs_.size(); }
  Residue operator[](std::size_t i) const { return Residue(*ring_, i < coeffs_.size() ? coeffs_[i] : 0); }
  std::span<const std::uint64_t> raw() const { return coeffs_; }
  std::vector<std::uint64_t>& raw_mut() { return coeffs_; }

  Residue eval(const Residue& x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = ring_->add(ring_->mul(acc, x.value()), coeffs_[i]);
    return Residue(*ring_, acc);
  }

  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  }

 private:
  const Ring* ring_ = nullptr;
  std::vector<std::uint64_t> coeffs_;
};

namespace detail {

inline void require_small_k(std::uint64_t k, const Ring& ring) {
  if (k >= ring.p()) {
    throw KTooLarge("k=" + std::to_string(k) + " must be below p=" + std::to_string(ring.p()));
  }
}

}  // namespace detail

/// C(a, k) = a(a-1)...(a-k+1)/k! for a residue a and k < p.
inline Residue gbinom(const Residue& a, std::uint64_t k) {
  const Ring& ring = a.ring();
  detail::require_small_k(k, ring);
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  std::uint64_t top = a.value();
  for (std::uint64_t i = 0; i < k; ++i) {
    num = ring.mul(num, top);
    den = ring.mul(den, i + 1);
    top = ring.sub(top, 1);
  }
  return Residue(ring, ring.mul(num, ring.inverse(den)));
}

inline Residue gbinom(const Rational& a, std::uint64_t k, const Ring& ring) {
  detail::require_small_k(k, ring);
  return gbinom(reduce(a, ring), k);
}

/// Terms t_k = C(a,k) C(c,k) z^k for k = 0..n via
/// t_{k+1} = t_k (a-k)(c-k) z / (k+1)^2.  Entries after the first vanishing
/// term are zero (every later term carries it as a factor).
inline std::vector<std::uint64_t> hyper_terms(const Residue& a, const Residue& c, const Residue& z, std::uint64_t n) {
  const Ring& ring = a.ring();
  detail::require_small_k(n, ring);
  std::vector<std::uint64_t> terms(n + 1, 0);
  std::uint64_t t = 1 % ring.modulus();
  std::uint64_t am = a.value();
  std::uint64_t cm = c.value();
  for (std::uint64_t k = 0;; ++k) {
    terms[k] = t;
    if (k == n || t == 0) break;
    std::uint64_t inv = ring.inverse(k + 1);
    t = ring.mul(ring.mul(t, ring.mul(am, cm)), ring.mul(z.value(), ring.mul(inv, inv)));
    am = ring.sub(am, 1);
    cm = ring.sub(cm, 1);
  }
  return terms;
}

/// sum_{k=0}^{n} C(a,k) C(c,k) z^k in Z/p^e, n <= p-1.
inline Residue hyper_sum(const Residue& a, const Residue& c, const Residue& z, std::uint64_t n) {
  const Ring& ring = a.ring();
  detail::require_small_k(n, ring);
  std::uint64_t t = 1 % ring.modulus();
  std::uint64_t sum = t;
  std::uint64_t am = a.value();
  std::uint64_t cm = c.value();
  const std::uint64_t zv = z.value();
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t inv = ring.inverse(k + 1);
    t = ring.mul(ring.mul(t, ring.mul(am, cm)), ring.mul(zv, ring.mul(inv, inv)));
    if (t == 0) break;
    sum = ring.add(sum, t);
    am = ring.sub(am, 1);
    cm = ring.sub(cm, 1);
  }
  return Residue(ring, sum);
}

inline Residue hyper_sum(const Rational& a, const Rational& c, const Rational& z, std::uint64_t n, const Ring& ring) {
  return hyper_sum(reduce(a, ring), reduce(c, ring), reduce(z, ring), n);
}

/// Generalized Legendre polynomial P_n(a, x) = sum_k C(a,k) C(-1-a,k) ((1-x)/2)^k.
inline Residue pn_eval(const Residue& a, const Residue& x, std::uint64_t n) {
  const Ring& ring = a.ring();
  Residue half = ring(2).inv();
  return hyper_sum(a, -1 - a, (1 - x) * half, n);
}

inline Residue pn_eval(const Rational& a, const Rational& x, std::uint64_t n, const Ring& ring) {
  return pn_eval(reduce(a, ring), reduce(x, ring), n);
}

/// Coefficients of P_n(a, x) in x, expanding ((1-x)/2)^k against a running
/// row of binomial coefficients.  O(n^2).
inline CoeffPoly pn_coeffs(const Residue& a, std::uint64_t n) {
  const Ring& ring = a.ring();
  std::vector<std::uint64_t> c = hyper_terms(a, -1 - a, ring.one(), n);
  std::vector<std::uint64_t> out(n + 1, 0);
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1 % ring.modulus();
  const std::uint64_t half = ring.inverse(2);
  std::uint64_t scale = 1 % ring.modulus();  // 2^{-k}
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      for (std::uint64_t j = k; j >= 1; --j) row[j] = ring.add(row[j], row[j - 1]);
      scale = ring.mul(scale, half);
    }
    if (c[k] == 0) {
      if (k > 0) break;  // later terms vanish too
      continue;
    }
    const std::uint64_t ck = ring.mul(c[k], scale);
    for (std::uint64_t j = 0; j <= k; ++j) {
      std::uint64_t v = ring.mul(ck, row[j]);
      out[j] = (j & 1U) ? ring.sub(out[j], v) : ring.add(out[j], v);
    }
  }
  return CoeffPoly(ring, std::move(out));
}

inline CoeffPoly pn_coeffs(const Rational& a, std::uint64_t n, const Ring& ring) {
  return pn_coeffs(reduce(a, ring), n);
}

/// Same coefficients in O(n): the truncated series solves the Legendre
/// equation (1-x^2)y'' - 2xy' + a(a+1)y = -(n-a)(n+a+1) c_n ((1-x)/2)^n,
/// which gives a two-step recurrence on the coefficients of x^j.
inline CoeffPoly pn_coeffs_fast(const Residue& a, std::uint64_t n) {
  const Ring& ring = a.ring();
  detail::require_small_k(n, ring);
  std::vector<std::uint64_t> c = hyper_terms(a, -1 - a, ring.one(), n);
  const std::uint64_t half = ring.inverse(2);
  // d0 = y(0) = sum c_k 2^{-k};  d1 = y'(0) = -(1/2) sum k c_k 2^{-(k-1)}.
  std::uint64_t d0 = 0, d1 = 0, scale = 1 % ring.modulus();
  for (std::uint64_t k = 0; k <= n; ++k) {
    d0 = ring.add(d0, ring.mul(c[k], scale));
    d1 = ring.sub(d1, ring.mul(ring.mul(c[k], k % ring.modulus()), scale));
    scale = ring.mul(scale, half);
  }
  std::vector<std::uint64_t> d(n + 1, 0);
  d[0] = d0;
  if (n >= 1) d[1] = d1;
  const std::uint64_t av = a.value();
  const std::uint64_t lambda = ring.mul(av, ring.add(av, 1));
  // Boundary polynomial coefficient: -(n-a)(n+a+1) c_n 2^{-n} (-1)^j C(n,j).
  std::uint64_t boundary = ring.mul(ring.mul(ring.sub(n % ring.modulus(), av), ring.add(ring.add(n % ring.modulus(), av), 1)),
                                    ring.mul(c[n], ring.pow(half, n)));
  boundary = ring.neg(boundary);
  std::uint64_t binom_nj = 1 % ring.modulus();  // C(n, j)
  for (std::uint64_t j = 0; j + 2 <= n; ++j) {
    std::uint64_t r = ring.mul(boundary, binom_nj);
    if (j & 1U) r = ring.neg(r);
    std::uint64_t jj = ring.mul(j % ring.modulus(), (j + 1) % ring.modulus());
    std::uint64_t v = ring.add(ring.mul(ring.sub(jj, lambda), d[j]), r);
    d[j + 2] = ring.mul(v, ring.mul(ring.inverse(j + 1), ring.inverse(j + 2)));
    binom_nj = ring.mul(ring.mul(binom_nj, (n - j) % ring.modulus()), ring.inverse(j + 1));
  }
  return CoeffPoly(ring, std::move(d));
}

/// Horner evaluation of one coefficient vector at many points.  Points are
/// processed eight at a time so the multiply chains overlap.
inline void eval_many(const Ring& ring, std::span<const std::uint64_t> coeffs, std::span<const std::uint64_t> xs,
                      std::span<std::uint64_t> out) {
  constexpr std::size_t kLanes = 8;
  const std::size_t n = coeffs.size();
  std::size_t i = 0;
  for (; i + kLanes <= xs.size(); i += kLanes) {
    std::uint64_t acc[kLanes] = {};
    for (std::size_t j = n; j-- > 0;) {
      const std::uint64_t c = coeffs[j];
      for (std::size_t l = 0; l < kLanes; ++l) acc[l] = ring.add(ring.mul(acc[l], xs[i + l]), c);
    }
    for (std::size_t l = 0; l < kLanes; ++l) out[i + l] = acc[l];
  }
  for (; i < xs.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = n; j-- > 0;) acc = ring.add(ring.mul(acc, xs[i]), coeffs[j]);
    out[i] = acc;
  }
}

/// Coefficients of U(1 - x) given those of U(x).
inline std::vector<std::uint64_t> compose_one_minus_x(const Ring& ring, std::span<const std::uint64_t> u) {
  const std::size_t n = u.size();
  std::vector<std::uint64_t> out(n, 0);
  std::vector<std::uint64_t> row(n, 0);  // row[j] = C(i, j)
  if (n == 0) return out;
  row[0] = 1 % ring.modulus();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      for (std::size_t j = i; j >= 1; --j) row[j] = ring.add(row[j], row[j - 1]);
    }
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      std::uint64_t v = ring.mul(u[i], row[j]);
      out[j] = (j & 1U) ? ring.sub(out[j], v) : ring.add(out[j], v);
    }
  }
  return out;
}

inline CoeffPoly poly_derivative(const CoeffPoly& f) {
  const Ring& ring = f.ring();
  if (f.size() <= 1) return CoeffPoly(ring, {0});
  std::vector<std::uint64_t> out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = ring.mul(f.raw()[i], i % ring.modulus());
  return CoeffPoly(ring, std::move(out));
}

/// S_n(a, b) = sum_{k=0}^{n} C(a,k) C(b-a,k).
inline Residue sn_eval(const Residue& a, const Residue& b, std::uint64_t n) {
  return hyper_sum(a, b - a, a.ring().one(), n);
}

inline Residue sn_eval(const Rational& a, const Rational& b, std::uint64_t n, const Ring& ring) {
  return sn_eval(reduce(a, ring), reduce(b, ring), n);
}

/// Classical Legendre values P_0(x) .. P_{n_max}(x) by
/// (m+1)P_{m+1} = (2m+1)x P_m - m P_{m-1}; needs n_max <= p-1.
inline std::vector<std::uint64_t> legendre_table(std::uint64_t n_max, const Residue& x) {
  const Ring& ring = x.ring();
  detail::require_small_k(n_max, ring);
  std::vector<std::uint64_t> out(n_max + 1);
  out[0] = 1 % ring.modulus();
  if (n_max >= 1) out[1] = x.value();
  for (std::uint64_t m = 1; m + 1 <= n_max; ++m) {
    std::uint64_t v = ring.sub(ring.mul(ring.mul((2 * m + 1) % ring.modulus(), x.value()), out[m]),
                               ring.mul(m % ring.modulus(), out[m - 1]));
    out[m + 1] = ring.mul(v, ring.inverse(m + 1));
  }
  return out;
}

/// Classical Legendre polynomial P_n(x) for n < p.  Uses
/// P_n(x) = ((x-1)/2)^n sum_k C(n,k)^2 ((x+1)/(x-1))^k when x - 1 is a unit,
/// the three-term recurrence otherwise.
inline Residue legendre_pn(std::uint64_t n, const Residue& x) {
  const Ring& ring = x.ring();
  detail::require_small_k(n, ring);
  Residue xm1 = x - 1;
  if (!xm1.is_unit()) return Residue(ring, legendre_table(n, x)[n]);
  Residue ratio = (x + 1) / xm1;
  std::uint64_t sum = 0;
  std::uint64_t binom = 1 % ring.modulus();
  std::uint64_t power = 1 % ring.modulus();
  for (std::uint64_t k = 0; k <= n; ++k) {
    sum = ring.add(sum, ring.mul(ring.mul(binom, binom), power));
    if (k == n) break;
    power = ring.mul(power, ratio.value());
    binom = ring.mul(ring.mul(binom, (n - k) % ring.modulus()), ring.inverse(k + 1));
  }
  Residue half_xm1 = xm1 * ring(2).inv();
  return half_xm1.pow(n) * Residue(ring, sum);
}

inline Residue legendre_pn(std::uint64_t n, const Rational& x, const Ring& ring) {
  return legendre_pn(n, reduce(x, ring));
}

/// sum_{m=0}^{k} C(k,m) (-1)^m f(m).
inline Residue binom_transform(std::span<const Residue> f, std::uint64_t k) {
  if (f.empty()) throw std::invalid_argument("binom_transform: empty sequence");
  const Ring& ring = f[0].ring();
  detail::require_small_k(k, ring);
  if (k >= f.size()) throw std::out_of_range("binom_transform: sequence too short");
  std::uint64_t acc = 0;
  std::uint64_t binom = 1 % ring.modulus();
  for (std::uint64_t m = 0; m <= k; ++m) {
    std::uint64_t v = ring.mul(binom, f[m].value());
    acc = (m & 1U) ? ring.sub(acc, v) : ring.add(acc, v);
    if (m == k) break;
    binom = ring.mul(ring.mul(binom, (k - m) % ring.modulus()), ring.inverse(m + 1));
  }
  return Residue(ring, acc);
}

/// binom_transform for every k < f.size(), via Pascal rows; O(n^2).
inline std::vector<std::uint64_t> binom_transform_all(const Ring& ring, std::span<const std::uint64_t> f) {
  const std::size_t n = f.size();
  std::vector<std::uint64_t> out(n, 0);
  std::vector<std::uint64_t> row(n, 0);
  if (n == 0) return out;
  row[0] = 1 % ring.modulus();
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      for (std::size_t j = k; j >= 1; --j) row[j] = ring.add(row[j], row[j - 1]);
    }
    std::uint64_t acc = 0;
    for (std::size_t m = 0; m <= k; ++m) {
      std::uint64_t v = ring.mul(row[m], f[m]);
      acc = (m & 1U) ? ring.sub(acc, v) : ring.add(acc, v);
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace supercong
