#pragma once

// Parameter grids shared by the statement bodies.  Everything is a pure
// function of (p, seed), so sweeps are reproducible under any worker count.

#include <cstdint>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "supercong/padic.hpp"

namespace supercong::grids {

/// mt19937_64 keyed on (seed, p, tag).
inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t p, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the tag
  for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

inline const std::vector<Rational>& featured_rationals() {
  static const std::vector<Rational> v = {rat(-1, 2), rat(-1, 3), rat(-2, 3), rat(-1, 4), rat(-3, 4), rat(-1, 6),
                                          rat(-5, 6), rat(1, 2),  rat(1, 3),  rat(1, 4),  rat(1, 6)};
  return v;
}

namespace detail {

inline void push_unique(std::vector<Rational>& out, std::set<Rational>& seen, const Rational& q, std::uint64_t p) {
  if (!is_p_integral(q, p)) return;
  if (seen.insert(q).second) out.push_back(q);
}

inline void push_shifted_lifts(std::vector<Rational>& out, std::set<Rational>& seen, std::uint64_t p) {
  const auto pp = static_cast<long>(p);
  const long ms[] = {0, 1, 2, pp - 2, pp - 1};
  const Rational ts[] = {rat(1), rat(-1), rat(1, 2)};
  for (long m : ms) {
    for (const Rational& t : ts) push_unique(out, seen, Rational(m) + Rational(pp) * t, p);
  }
}

}  // namespace detail

/// Featured rationals, then 0..p-1, then m + p*t for m near 0 and p-1.
inline std::vector<Rational> a_grid(std::uint64_t p) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  for (const Rational& q : featured_rationals()) detail::push_unique(out, seen, q, p);
  for (std::uint64_t m = 0; m < p; ++m) detail::push_unique(out, seen, Rational(static_cast<unsigned long>(m)), p);
  detail::push_shifted_lifts(out, seen, p);
  return out;
}

/// Reduced a-grid for identity checks that also loop over n or b: featured
/// rationals, a few integers near 0 and p-1, shifted lifts, 4 seeded lifts.
inline std::vector<Rational> a_grid_small(std::uint64_t p, std::uint64_t seed) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  for (const Rational& q : featured_rationals()) detail::push_unique(out, seen, q, p);
  const auto pp = static_cast<long>(p);
  for (long m : {0L, 1L, 2L, pp - 2, pp - 1}) detail::push_unique(out, seen, Rational(m), p);
  auto rng = rng_for(seed, p, "a-small");
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (int i = 0; i < 4; ++i) detail::push_unique(out, seen, Rational(static_cast<unsigned long>(dist(rng))), p);
  detail::push_shifted_lifts(out, seen, p);
  return out;
}

inline std::vector<Rational> x_grid(std::uint64_t p) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  for (const Rational& q : {rat(0), rat(1), rat(2), rat(-1), rat(1, 2), rat(1, 3), rat(2, 3), rat(5)}) {
    detail::push_unique(out, seen, q, p);
  }
  return out;
}

/// Values filtered to p-integral rationals, original order kept.
inline std::vector<Rational> p_integral(std::uint64_t p, std::initializer_list<Rational> values) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  for (const Rational& q : values) detail::push_unique(out, seen, q, p);
  return out;
}

/// Second parameter for two-parameter sums: the rationals paired with the
/// featured a-values, every lift when p <= 31 (16 seeded lifts otherwise),
/// and shifted lifts.
inline std::vector<Rational> b_grid(std::uint64_t p, std::uint64_t seed) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  for (const Rational& q : {rat(-1, 2), rat(-3, 4), rat(0), rat(1), rat(-1, 3), rat(-2, 3), rat(1, 2), rat(-1, 4)}) {
    detail::push_unique(out, seen, q, p);
  }
  if (p <= 31) {
    for (std::uint64_t m = 0; m < p; ++m) detail::push_unique(out, seen, Rational(static_cast<unsigned long>(m)), p);
  } else {
    auto rng = rng_for(seed, p, "b-grid");
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (int i = 0; i < 16; ++i) detail::push_unique(out, seen, Rational(static_cast<unsigned long>(dist(rng))), p);
  }
  detail::push_shifted_lifts(out, seen, p);
  return out;
}

/// Sorted distinct integers in [lo, hi]: all of them when the range is at
/// most `full` long, otherwise the given anchors plus `count` seeded draws.
inline std::vector<std::uint64_t> int_sample(std::uint64_t lo, std::uint64_t hi, std::uint64_t full, std::uint64_t count,
                                             std::initializer_list<std::uint64_t> anchors, std::uint64_t seed,
                                             std::uint64_t p, std::string_view tag) {
  std::set<std::uint64_t> s;
  if (lo > hi) return {};
  if (hi - lo + 1 <= full) {
    for (std::uint64_t v = lo; v <= hi; ++v) s.insert(v);
  } else {
    for (std::uint64_t v : anchors) {
      if (v >= lo && v <= hi) s.insert(v);
    }
    auto rng = rng_for(seed, p, tag);
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    for (std::uint64_t i = 0; i < count; ++i) s.insert(dist(rng));
  }
  return {s.begin(), s.end()};
}

}  // namespace supercong::grids
