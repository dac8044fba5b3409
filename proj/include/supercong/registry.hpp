#pragma once

// The statement registry and the drivers that run it.

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "supercong/primes.hpp"
#include "supercong/statement.hpp"
#include "supercong/statements/conjectures.hpp"
#include "supercong/statements/sec12.hpp"
#include "supercong/statements/sec3.hpp"
#include "supercong/statements/sec4.hpp"
#include "supercong/statements/sec5.hpp"

namespace supercong {

inline constexpr std::uint64_t kOracleMaxP = 13;

inline Registry build_registry() {
  Registry reg;
  stmt::add_section12(reg);
  stmt::add_section3(reg);
  stmt::add_section4(reg);
  stmt::add_section5(reg);
  stmt::add_conjectures(reg);
  // Conjectures sharing a body are registered together; list them by number.
  auto numeric = [](const StatementDescriptor& d) {
    const auto dot = d.id.find('.');
    return std::make_pair(std::stoi(d.id.substr(2, dot - 2)), std::stoi(d.id.substr(dot + 1)));
  };
  auto first = std::find_if(reg.begin(), reg.end(), [](const auto& d) { return d.kind == Kind::conjecture; });
  std::stable_sort(first, reg.end(), [&](const auto& a, const auto& b) { return numeric(a) < numeric(b); });
  return reg;
}

/// Built once; immutable afterwards.
inline const Registry& default_registry() {
  static const Registry reg = build_registry();
  return reg;
}

inline const StatementDescriptor& find_statement(const Registry& reg, const std::string& id) {
  auto it = std::find_if(reg.begin(), reg.end(), [&](const StatementDescriptor& d) { return d.id == id; });
  if (it == reg.end()) throw UnknownStatement("unknown statement id: " + id);
  return *it;
}

/// nullopt when the statement applies at p, else the reason it is skipped.
inline std::optional<std::string> applicability(const Registry& reg, const std::string& id, std::uint64_t p) {
  return find_statement(reg, id).skip_reason(p);
}

inline std::optional<std::string> applicability(const std::string& id, std::uint64_t p) {
  return applicability(default_registry(), id, p);
}

inline VerificationOutcome verify_one(const StatementDescriptor& d, std::uint64_t p, const Options& opts = {},
                                      bool oracle_mode = false) {
  VerificationOutcome base;
  base.id = d.id;
  base.kind = d.kind;
  base.p = p;
  if (auto why = d.skip_reason(p)) {
    base.status = Status::skip;
    base.skip_reason = *why;
    return base;
  }
  const PrimeTower tower(p);
  Sink sink;
  Context ctx(tower, opts, oracle_mode, sink);
  try {
    d.body(ctx);
  } catch (const std::exception& e) {
    // Never silent: the outcome says what went wrong.
    base.status = Status::skip;
    base.skip_reason = std::string("internal: ") + e.what();
    base.internal_error = true;
    return base;
  }
  VerificationOutcome out = sink.finish(base);
  if (oracle_mode && out.witness.oracle_missing > 0) {
    out.internal_error = true;
    out.witness.notes.push_back("checks without an exact left-hand side: " + std::to_string(out.witness.oracle_missing));
  }
  return out;
}

inline VerificationOutcome verify_one(const Registry& reg, const std::string& id, std::uint64_t p, const Options& opts = {}) {
  return verify_one(find_statement(reg, id), p, opts, false);
}

inline VerificationOutcome verify_one(const std::string& id, std::uint64_t p, const Options& opts = {}) {
  return verify_one(default_registry(), id, p, opts);
}

/// Same as verify_one with the exact-rational twin of every left-hand side.
inline VerificationOutcome cross_check(const Registry& reg, const std::string& id, std::uint64_t p, const Options& opts = {},
                                       std::uint64_t oracle_max_p = kOracleMaxP) {
  const StatementDescriptor& d = find_statement(reg, id);
  if (p > oracle_max_p) {
    throw OraclePrimeTooLarge("p=" + std::to_string(p) + " exceeds the oracle bound " + std::to_string(oracle_max_p));
  }
  return verify_one(d, p, opts, true);
}

inline VerificationOutcome cross_check(const std::string& id, std::uint64_t p, const Options& opts = {}) {
  return cross_check(default_registry(), id, p, opts);
}

/// Ids in registry order; "all" expands to every statement.
inline std::vector<std::string> resolve_ids(const Registry& reg, const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  const bool all = std::find(ids.begin(), ids.end(), "all") != ids.end();
  for (const auto& d : reg) {
    if (all || std::find(ids.begin(), ids.end(), d.id) != ids.end()) out.push_back(d.id);
  }
  for (const auto& id : ids) {
    if (id != "all") find_statement(reg, id);  // throws on unknown ids
  }
  return out;
}

struct RangeRequest {
  std::vector<std::string> ids;
  std::uint64_t prime_lo = 3;
  std::uint64_t prime_hi = 3;
  Options options;
  unsigned jobs = 1;
  bool oracle = false;
};

/// Every (id, p) pair, ordered by the id order of resolve_ids and then by p,
/// whatever the number of workers.
inline std::vector<VerificationOutcome> verify_range(const Registry& reg, const RangeRequest& req) {
  const auto ids = resolve_ids(reg, req.ids);
  const auto primes = odd_primes_between(std::max<std::uint64_t>(req.prime_lo, 3), req.prime_hi);
  struct Task {
    const StatementDescriptor* d;
    std::uint64_t p;
  };
  std::vector<Task> tasks;
  for (const auto& id : ids) {
    const StatementDescriptor& d = find_statement(reg, id);
    for (auto p : primes) tasks.push_back({&d, p});
  }
  std::vector<VerificationOutcome> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      out[i] = verify_one(*tasks[i].d, tasks[i].p, req.options, req.oracle);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(req.jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline std::vector<VerificationOutcome> verify_range(const RangeRequest& req) { return verify_range(default_registry(), req); }

}  // namespace supercong
