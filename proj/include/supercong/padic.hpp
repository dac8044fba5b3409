#pragma once

// Arithmetic in Z/p^e for an odd prime p and e in {1, 2, 3}, plus the scalar
// number-theoretic functions right-hand sides are built from (least residues,
// Legendre/Jacobi symbols, Fermat quotients, harmonic numbers).

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/primes.hpp"

namespace supercong {

/// Exact rational; gmp keeps it canonical (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "n" or "n/d" (leading '-' allowed).
inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

class Residue;

/// The ring Z/p^e.  Residues refer back to their ring by address, so a Ring
/// is pinned in memory for its whole lifetime.
class Ring {
 public:
  Ring(std::uint64_t p, int e) : p_(p), e_(e) {
    if (p < 3 || !is_prime(p)) throw InvalidRing("modulus base must be an odd prime: " + std::to_string(p));
    if (e < 1 || e > 3) throw InvalidRing("exponent must be 1, 2 or 3");
    unsigned __int128 m = 1;
    for (int i = 0; i < e; ++i) m *= p;
    if (m >= (static_cast<unsigned __int128>(1) << 63)) throw InvalidRing("p^e does not fit in 63 bits");
    mod_ = static_cast<std::uint64_t>(m);
    small_ = mod_ < (std::uint64_t{1} << 32);
    barrett_ = small_ ? ~std::uint64_t{0} / mod_ : 0;
    if (p_ <= kTableLimit) build_inverse_table();
  }

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  std::uint64_t p() const { return p_; }
  int exponent() const { return e_; }
  std::uint64_t modulus() const { return mod_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= mod_ ? s - mod_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + mod_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : mod_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (small_) {
      std::uint64_t x = a * b;
      auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
      std::uint64_t r = x - q * mod_;
      while (r >= mod_) r -= mod_;
      return r;
    }
    return detail::mulmod_u64(a, b, mod_);
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const {
    std::uint64_t result = 1 % mod_;
    while (exp != 0) {
      if (exp & 1U) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1U;
    }
    return result;
  }

  /// Canonical least nonnegative lift of a signed integer.
  std::uint64_t from_signed(std::int64_t v) const {
    if (v >= 0) return static_cast<std::uint64_t>(v) % mod_;
    std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % mod_;
    return mod_ - 1 - r;
  }

  bool is_unit(std::uint64_t a) const { return a % p_ != 0; }

  std::uint64_t inverse(std::uint64_t a) const {
    if (a % p_ == 0) throw NotInvertible(std::to_string(a) + " is not a unit mod " + std::to_string(mod_));
    if (!inv_table_.empty() && a < inv_table_.size()) return inv_table_[a];
    __int128 r0 = mod_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      __int128 t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    if (s0 < 0) s0 += mod_;
    return static_cast<std::uint64_t>(s0);
  }

  Residue operator()(std::int64_t v) const;
  Residue zero() const;
  Residue one() const;

 private:
  static constexpr std::uint64_t kTableLimit = 1U << 16;

  // Inverses of 1..p-1 by batch inversion.
  void build_inverse_table() {
    std::vector<std::uint64_t> prefix(p_);
    prefix[0] = 1;
    for (std::uint64_t k = 1; k < p_; ++k) prefix[k] = mul(prefix[k - 1], k);
    std::uint64_t running = inverse(prefix[p_ - 1]);  // before the table exists
    inv_table_.assign(p_, 0);
    for (std::uint64_t k = p_ - 1; k >= 1; --k) {
      inv_table_[k] = mul(running, prefix[k - 1]);
      running = mul(running, k);
    }
  }

  std::uint64_t p_;
  int e_;
  std::uint64_t mod_ = 0;
  bool small_ = false;
  std::uint64_t barrett_ = 0;
  std::vector<std::uint64_t> inv_table_;
};

/// Element of Z/p^e stored as its least nonnegative lift.
class Residue {
 public:
  Residue() = default;
  Residue(const Ring& ring, std::uint64_t value) : ring_(&ring), value_(value % ring.modulus()) {}

  static Residue from_signed(const Ring& ring, std::int64_t v) { return Residue(ring, ring.from_signed(v)); }

  std::uint64_t value() const { return value_; }
  const Ring& ring() const { return *ring_; }
  bool has_ring() const { return ring_ != nullptr; }
  std::uint64_t modulus() const { return ring_->modulus(); }

  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return ring_->is_unit(value_); }

  Residue operator-() const { return raw(ring_->neg(value_)); }
  Residue& operator+=(const Residue& o) {
    check(o);
    value_ = ring_->add(value_, o.value_);
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    check(o);
    value_ = ring_->sub(value_, o.value_);
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    check(o);
    value_ = ring_->mul(value_, o.value_);
    return *this;
  }
  Residue& operator/=(const Residue& o) {
    check(o);
    value_ = ring_->mul(value_, ring_->inverse(o.value_));
    return *this;
  }
  Residue& operator+=(std::int64_t v) { return *this += from_signed(*ring_, v); }
  Residue& operator-=(std::int64_t v) { return *this -= from_signed(*ring_, v); }
  Residue& operator*=(std::int64_t v) { return *this *= from_signed(*ring_, v); }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend Residue operator+(Residue a, std::int64_t b) { return a += b; }
  friend Residue operator-(Residue a, std::int64_t b) { return a -= b; }
  friend Residue operator*(Residue a, std::int64_t b) { return a *= b; }
  friend Residue operator+(std::int64_t a, const Residue& b) { return from_signed(b.ring(), a) + b; }
  friend Residue operator-(std::int64_t a, const Residue& b) { return from_signed(b.ring(), a) - b; }
  friend Residue operator*(std::int64_t a, Residue b) { return b *= a; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.ring_->modulus() == b.ring_->modulus() && a.value_ == b.value_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  Residue pow(std::uint64_t exp) const { return raw(ring_->pow(value_, exp)); }
  /// Signed exponent; negative powers require a unit.
  Residue pow_signed(std::int64_t exp) const {
    if (exp >= 0) return pow(static_cast<std::uint64_t>(exp));
    return inv().pow(static_cast<std::uint64_t>(-exp));
  }
  Residue inv() const { return raw(ring_->inverse(value_)); }

  std::string str() const { return std::to_string(value_); }

 private:
  Residue raw(std::uint64_t v) const {
    Residue r;
    r.ring_ = ring_;
    r.value_ = v;
    return r;
  }
  void check(const Residue& o) const {
    if (ring_->modulus() != o.ring_->modulus()) throw RingMismatch("residues from different rings");
  }

  const Ring* ring_ = nullptr;
  std::uint64_t value_ = 0;
};

inline Residue Ring::operator()(std::int64_t v) const { return Residue::from_signed(*this, v); }
inline Residue Ring::zero() const { return Residue(*this, 0); }
inline Residue Ring::one() const { return Residue(*this, 1); }

/// Z/p, Z/p^2 and Z/p^3 for one prime, built together so precision-changing
/// maps (division by p, projection) have a target ring to land in.
class PrimeTower {
 public:
  explicit PrimeTower(std::uint64_t p) : r1_(p, 1), r2_(p, 2), r3_(p, 3) {}
  PrimeTower(const PrimeTower&) = delete;
  PrimeTower& operator=(const PrimeTower&) = delete;

  std::uint64_t p() const { return r1_.p(); }
  const Ring& ring(int e) const {
    switch (e) {
      case 1: return r1_;
      case 2: return r2_;
      case 3: return r3_;
      default: throw InvalidRing("exponent must be 1, 2 or 3");
    }
  }

 private:
  Ring r1_, r2_, r3_;
};

/// Embeds a rational p-integer: num * den^{-1} in Z/p^e.
inline Residue reduce(const Rational& q, const Ring& ring) {
  const unsigned long m = ring.modulus();
  if (mpz_fdiv_ui(q.get_den().get_mpz_t(), ring.p()) == 0) {
    throw DenominatorDivisibleByP("denominator of " + q.get_str() + " is divisible by " + std::to_string(ring.p()));
  }
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), m);
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), m);
  return Residue(ring, ring.mul(num, ring.inverse(den)));
}

inline bool is_p_integral(const Rational& q, std::uint64_t p) {
  return mpz_fdiv_ui(q.get_den().get_mpz_t(), p) != 0;
}

inline Residue inv(const Residue& r) { return r.inv(); }

/// Least nonnegative residue <q>_p.
inline std::uint64_t least_residue(const Rational& q, std::uint64_t p) {
  if (mpz_fdiv_ui(q.get_den().get_mpz_t(), p) == 0) {
    throw DenominatorDivisibleByP("denominator of " + q.get_str() + " is divisible by " + std::to_string(p));
  }
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  std::uint64_t den_inv = detail::powmod_u64(den, p - 2, p);
  return detail::mulmod_u64(num, den_inv, p);
}

/// Legendre symbol (a/p) by Euler's criterion.
inline int legendre_symbol(std::int64_t a, std::uint64_t p) {
  std::uint64_t r = a >= 0 ? static_cast<std::uint64_t>(a) % p
                           : (p - static_cast<std::uint64_t>(-(a + 1)) % p - 1) % p;
  if (r == 0) return 0;
  return detail::powmod_u64(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Jacobi symbol (a/n) for odd positive n.
inline int jacobi_symbol(std::int64_t a, std::uint64_t n) {
  if (n == 0 || (n & 1U) == 0) throw std::invalid_argument("jacobi_symbol needs odd positive n");
  std::uint64_t x = a >= 0 ? static_cast<std::uint64_t>(a) % n
                           : (n - static_cast<std::uint64_t>(-(a + 1)) % n - 1) % n;
  int sign = 1;
  while (x != 0) {
    while ((x & 1U) == 0) {
      x >>= 1U;
      std::uint64_t r = n % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) sign = -sign;
    x %= n;
  }
  return n == 1 ? sign : 0;
}

/// Fermat quotient q_p(a) = (a^{p-1} - 1)/p, returned in the given ring
/// (computed from a^{p-1} mod p^{e+1}, so it is exact at the ring's precision).
inline Residue fermat_quotient(std::int64_t a, const Ring& ring) {
  const std::uint64_t p = ring.p();
  if (legendre_symbol(a, p) == 0) throw BaseDivisibleByP("base divisible by " + std::to_string(p));
  mpz_class pe1;
  mpz_ui_pow_ui(pe1.get_mpz_t(), p, static_cast<unsigned long>(ring.exponent() + 1));
  mpz_class base = a;
  mpz_class power;
  mpz_powm_ui(power.get_mpz_t(), base.get_mpz_t(), p - 1, pe1.get_mpz_t());
  power -= 1;
  if (power < 0) power += pe1;
  power /= p;
  return Residue(ring, mpz_get_ui(power.get_mpz_t()));
}

/// H_n = 1 + 1/2 + ... + 1/n in Z/p^e; every denominator must be a unit.
inline Residue harmonic(std::uint64_t n, const Ring& ring) {
  if (n >= ring.p()) {
    throw TermNotInvertible("H_" + std::to_string(n) + " has a term 1/k with p | k (p=" + std::to_string(ring.p()) + ")");
  }
  std::uint64_t acc = 0;
  for (std::uint64_t k = 1; k <= n; ++k) acc = ring.add(acc, ring.inverse(k));
  return Residue(ring, acc);
}

/// H_0 .. H_{p-1} in one pass.
inline std::vector<std::uint64_t> harmonic_table(const Ring& ring) {
  std::vector<std::uint64_t> h(ring.p(), 0);
  for (std::uint64_t k = 1; k < ring.p(); ++k) h[k] = ring.add(h[k - 1], ring.inverse(k));
  return h;
}

/// r / p for r in Z/p^e divisible by p, landing in Z/p^{e-1}.
inline Residue div_by_p(const Residue& r, const Ring& target) {
  const Ring& src = r.ring();
  if (src.exponent() < 2 || target.p() != src.p() || target.exponent() != src.exponent() - 1) {
    throw RingMismatch("div_by_p needs Z/p^e -> Z/p^(e-1)");
  }
  if (r.value() % src.p() != 0) throw NotDivisible(r.str() + " is not divisible by " + std::to_string(src.p()));
  return Residue(target, r.value() / src.p());
}

/// Multiplication by p, from Z/p^{e-1} into Z/p^e.
inline Residue mul_by_p(const Residue& r, const Ring& target) {
  const Ring& src = r.ring();
  if (target.p() != src.p() || target.exponent() != src.exponent() + 1) {
    throw RingMismatch("mul_by_p needs Z/p^e -> Z/p^(e+1)");
  }
  return Residue(target, r.value() * src.p());
}

/// Reduction Z/p^e -> Z/p^f for f <= e.
inline Residue project(const Residue& r, const Ring& target) {
  if (target.p() != r.ring().p() || target.exponent() > r.ring().exponent()) {
    throw RingMismatch("project needs a coarser ring over the same prime");
  }
  return Residue(target, r.value() % target.modulus());
}

}  // namespace supercong
