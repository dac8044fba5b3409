#pragma once

// Executable statements: a descriptor binds an id to an applicability rule
// and a body that walks its parameter grid, emitting one Check per binding.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/padic.hpp"

namespace supercong {

enum class Kind { theorem, corollary, lemma, identity, conjecture };
enum class Status { pass, fail, skip };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::theorem: return "theorem";
    case Kind::corollary: return "corollary";
    case Kind::lemma: return "lemma";
    case Kind::identity: return "identity";
    case Kind::conjecture: return "conjecture";
  }
  return "?";
}

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

using Bindings = std::vector<std::pair<std::string, std::string>>;

/// One way a check can hold.  Several candidates model sign-undetermined
/// right-hand sides and disjunctions; the check passes if any candidate does.
struct Candidate {
  Residue lhs;
  Residue rhs;
  std::string choice;
  std::optional<Rational> exact_lhs;  // filled only in oracle mode
};

struct Check {
  std::string label;
  Bindings bindings;
  std::vector<Candidate> candidates;
  bool informational = false;  // reported in notes, never decides the status
};

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t coeffwise_max_p = 199;
};

struct Witness {
  Bindings bindings;
  std::string check;
  std::string choice;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped_bindings = 0;
  std::uint64_t points = 0;  // extra evaluation points folded into pointwise checks
  std::uint64_t oracle_compared = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t oracle_missing = 0;
  std::vector<std::string> notes;
};

struct VerificationOutcome {
  std::string id;
  Kind kind = Kind::theorem;
  std::uint64_t p = 0;
  Status status = Status::skip;
  std::string lhs;
  std::string rhs;
  std::string modulus;
  std::string skip_reason;
  bool internal_error = false;
  Witness witness;
};

/// Accumulates checks for one (statement, prime) work item.
class Sink {
 public:
  void add(Check&& c, bool oracle_mode);
  void skip_binding(const std::string& reason) {
    ++skipped_;
    if (skip_reasons_.size() < 4 && std::find(skip_reasons_.begin(), skip_reasons_.end(), reason) == skip_reasons_.end()) {
      skip_reasons_.push_back(reason);
    }
  }
  void add_points(std::uint64_t n) { points_ += n; }

  VerificationOutcome finish(VerificationOutcome base) const;

 private:
  struct Record {
    Check check;
    std::size_t candidate = 0;
  };
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::uint64_t skipped_ = 0;
  std::uint64_t points_ = 0;
  std::uint64_t oracle_compared_ = 0;
  std::uint64_t oracle_mismatches_ = 0;
  std::uint64_t oracle_missing_ = 0;
  std::optional<Record> first_pass_;
  std::optional<Record> first_fail_;
  std::optional<Record> first_oracle_mismatch_;
  std::vector<std::string> skip_reasons_;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> info_;  // label -> (held, failed)
};

class Context {
 public:
  Context(const PrimeTower& tower, const Options& opts, bool oracle_mode, Sink& sink)
      : tower_(tower), opts_(opts), oracle_(oracle_mode), sink_(sink) {}

  std::uint64_t p() const { return tower_.p(); }
  const Ring& ring(int e) const { return tower_.ring(e); }
  const PrimeTower& tower() const { return tower_; }
  const Options& options() const { return opts_; }
  bool oracle() const { return oracle_; }
  bool coeffwise() const { return p() <= opts_.coeffwise_max_p; }

  /// Runs f only when an exact left-hand side is wanted.
  template <class F>
  std::optional<Rational> exact(F&& f) const {
    // A deduced return type would hand back a GMP expression that refers to
    // temporaries already destroyed.
    static_assert(std::is_same_v<std::invoke_result_t<F>, Rational>, "exact lambdas must return Rational");
    if (!oracle_) return std::nullopt;
    return f();
  }

  void emit(Check c) { sink_.add(std::move(c), oracle_); }

  /// Shorthand for the common single-candidate check.
  void check(std::string label, Bindings b, const Residue& lhs, const Residue& rhs,
             std::optional<Rational> exact_lhs = std::nullopt, bool informational = false) {
    Check c{std::move(label), std::move(b), {}, informational};
    c.candidates.push_back(Candidate{lhs, rhs, "", std::move(exact_lhs)});
    emit(std::move(c));
  }

  void skip_binding(const std::string& reason) { sink_.skip_binding(reason); }
  void add_points(std::uint64_t n) { sink_.add_points(n); }

 private:
  const PrimeTower& tower_;
  const Options& opts_;
  bool oracle_;
  Sink& sink_;
};

struct StatementDescriptor {
  std::string id;
  Kind kind = Kind::theorem;
  int mod_exp = 2;
  std::string hypothesis;  // short ASCII summary for listings
  std::string formula;     // ASCII rendering of the congruence
  std::function<std::optional<std::string>(std::uint64_t p)> skip_reason;
  std::function<void(Context&)> body;
};

using Registry = std::vector<StatementDescriptor>;

// ---------------------------------------------------------------------------

inline void Sink::add(Check&& c, bool oracle_mode) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < c.candidates.size(); ++i) {
    const Candidate& cand = c.candidates[i];
    if (cand.lhs == cand.rhs) {
      hit = i;
      break;
    }
  }
  if (oracle_mode) {
    for (const Candidate& cand : c.candidates) {
      if (!cand.exact_lhs) {
        ++oracle_missing_;
        continue;
      }
      ++oracle_compared_;
      bool same = false;
      try {
        same = reduce(*cand.exact_lhs, cand.lhs.ring()) == cand.lhs;
      } catch (const ArithmeticError&) {
        same = false;
      }
      if (!same) {
        ++oracle_mismatches_;
        if (!first_oracle_mismatch_) first_oracle_mismatch_ = Record{c, 0};
      }
    }
  }
  if (c.informational) {
    auto& slot = info_[c.label];
    (hit ? slot.first : slot.second) += 1;
    return;
  }
  ++checks_;
  if (hit) {
    if (!first_pass_) first_pass_ = Record{std::move(c), *hit};
  } else {
    ++failures_;
    if (!first_fail_) first_fail_ = Record{std::move(c), 0};
  }
}

inline VerificationOutcome Sink::finish(VerificationOutcome out) const {
  Witness& w = out.witness;
  w.checks = checks_;
  w.failures = failures_;
  w.skipped_bindings = skipped_;
  w.points = points_;
  w.oracle_compared = oracle_compared_;
  w.oracle_mismatches = oracle_mismatches_;
  w.oracle_missing = oracle_missing_;
  for (const auto& [label, counts] : info_) {
    w.notes.push_back(label + ": held " + std::to_string(counts.first) + ", failed " + std::to_string(counts.second));
  }
  for (const auto& r : skip_reasons_) w.notes.push_back("skipped binding: " + r);

  const Record* shown = nullptr;
  if (oracle_mismatches_ > 0) out.internal_error = true;
  if (first_fail_) {
    out.status = Status::fail;
    shown = &*first_fail_;
  } else if (oracle_mismatches_ > 0) {
    out.status = Status::fail;
    shown = &*first_oracle_mismatch_;
    w.notes.push_back("exact and modular left-hand sides disagree");
  } else if (first_pass_) {
    out.status = Status::pass;
    shown = &*first_pass_;
  } else {
    out.status = Status::skip;
    out.skip_reason = skip_reasons_.empty() ? "no applicable parameter binding" : skip_reasons_.front();
  }
  if (shown) {
    const Candidate& cand = shown->check.candidates[shown->candidate];
    out.lhs = cand.lhs.str();
    out.rhs = cand.rhs.str();
    out.modulus = std::to_string(cand.lhs.modulus());
    w.bindings = shown->check.bindings;
    w.check = shown->check.label;
    w.choice = cand.choice;
  }
  return out;
}

}  // namespace supercong
