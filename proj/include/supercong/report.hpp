#pragma once

// Report rendering: JSON, CSV and plain text.  Wall time is never part of a
// report so that equal inputs give byte-identical output.

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "supercong/statement.hpp"

namespace supercong {

using ordered_json = nlohmann::ordered_json;

struct Counts {
  std::uint64_t pass = 0, fail = 0, skip = 0;
};

struct Summary {
  std::vector<std::pair<std::string, Counts>> per_statement;  // first-seen order
  Counts total;
  std::uint64_t theorem_fails = 0;      // every non-conjecture kind counts here
  std::uint64_t conjecture_fails = 0;
  std::uint64_t internal_errors = 0;
};

inline Summary summarize(const std::vector<VerificationOutcome>& outs) {
  Summary s;
  std::map<std::string, std::size_t> index;
  for (const auto& o : outs) {
    auto [it, fresh] = index.try_emplace(o.id, s.per_statement.size());
    if (fresh) s.per_statement.push_back({o.id, {}});
    Counts& c = s.per_statement[it->second].second;
    switch (o.status) {
      case Status::pass: ++c.pass; ++s.total.pass; break;
      case Status::fail:
        ++c.fail;
        ++s.total.fail;
        (o.kind == Kind::conjecture ? s.conjecture_fails : s.theorem_fails) += 1;
        break;
      case Status::skip: ++c.skip; ++s.total.skip; break;
    }
    if (o.internal_error) ++s.internal_errors;
  }
  return s;
}

/// 0: clean; 1: a non-conjecture FAIL or an internal error; 2: only conjecture FAILs.
inline int exit_code_for(const Summary& s) {
  if (s.theorem_fails > 0 || s.internal_errors > 0) return 1;
  if (s.conjecture_fails > 0) return 2;
  return 0;
}

inline ordered_json bindings_json(const Bindings& b) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : b) j[k] = v;
  return j;
}

inline ordered_json outcome_json(const VerificationOutcome& o) {
  const Witness& w = o.witness;
  ordered_json wj;
  wj["bindings"] = bindings_json(w.bindings);
  wj["check"] = w.check;
  wj["choice"] = w.choice;
  wj["checks"] = w.checks;
  wj["failures"] = w.failures;
  wj["skipped_bindings"] = w.skipped_bindings;
  wj["points"] = w.points;
  wj["oracle_compared"] = w.oracle_compared;
  wj["oracle_mismatches"] = w.oracle_mismatches;
  wj["oracle_missing"] = w.oracle_missing;
  wj["notes"] = w.notes;
  ordered_json j;
  j["id"] = o.id;
  j["kind"] = to_string(o.kind);
  j["p"] = o.p;
  j["status"] = to_string(o.status);
  j["modulus"] = o.modulus;
  j["lhs"] = o.lhs;
  j["rhs"] = o.rhs;
  j["witness"] = std::move(wj);
  j["skip_reason"] = o.skip_reason;
  j["internal_error"] = o.internal_error;
  return j;
}

inline ordered_json counts_json(const Counts& c) { return {{"PASS", c.pass}, {"FAIL", c.fail}, {"SKIP", c.skip}}; }

inline ordered_json report_json(const std::vector<VerificationOutcome>& outs, const ordered_json& config) {
  const Summary s = summarize(outs);
  ordered_json j;
  j["config"] = config;
  j["results"] = ordered_json::array();
  for (const auto& o : outs) j["results"].push_back(outcome_json(o));
  ordered_json per = ordered_json::object();
  for (const auto& [id, c] : s.per_statement) per[id] = counts_json(c);
  j["summary"] = {{"statements", std::move(per)},
                  {"total", counts_json(s.total)},
                  {"theorem_fails", s.theorem_fails},
                  {"conjecture_fails", s.conjecture_fails},
                  {"internal_errors", s.internal_errors},
                  {"exit_code", exit_code_for(s)}};
  return j;
}

inline std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string bindings_text(const Bindings& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

inline void write_csv(std::ostream& os, const std::vector<VerificationOutcome>& outs) {
  os << "id,kind,p,status,modulus,lhs,rhs,bindings,check,choice,checks,failures,skipped_bindings,points,"
        "oracle_compared,oracle_mismatches,oracle_missing,notes,skip_reason,internal_error\n";
  for (const auto& o : outs) {
    const Witness& w = o.witness;
    std::string notes;
    for (const auto& n : w.notes) notes += (notes.empty() ? "" : "; ") + n;
    os << csv_field(o.id) << ',' << to_string(o.kind) << ',' << o.p << ',' << to_string(o.status) << ',' << o.modulus << ','
       << o.lhs << ',' << o.rhs << ',' << csv_field(bindings_text(w.bindings)) << ',' << csv_field(w.check) << ','
       << csv_field(w.choice) << ',' << w.checks << ',' << w.failures << ',' << w.skipped_bindings << ',' << w.points << ','
       << w.oracle_compared << ',' << w.oracle_mismatches << ',' << w.oracle_missing << ',' << csv_field(notes) << ','
       << csv_field(o.skip_reason) << ',' << (o.internal_error ? "true" : "false") << '\n';
  }
}

inline void write_text(std::ostream& os, const std::vector<VerificationOutcome>& outs) {
  for (const auto& o : outs) {
    os << o.id << " p=" << o.p << ' ' << to_string(o.status);
    if (o.status == Status::skip) {
      os << " (" << o.skip_reason << ")";
    } else {
      os << " mod " << o.modulus << ": lhs=" << o.lhs << " rhs=" << o.rhs << " [" << o.witness.check;
      if (!o.witness.bindings.empty()) os << "; " << bindings_text(o.witness.bindings);
      if (!o.witness.choice.empty()) os << "; " << o.witness.choice;
      os << "] checks=" << o.witness.checks;
      if (o.witness.failures) os << " failures=" << o.witness.failures;
    }
    if (o.internal_error) os << " INTERNAL";
    os << '\n';
  }
  const Summary s = summarize(outs);
  os << "--\n";
  for (const auto& [id, c] : s.per_statement) {
    os << id << ": PASS " << c.pass << ", FAIL " << c.fail << ", SKIP " << c.skip << '\n';
  }
  os << "total: PASS " << s.total.pass << ", FAIL " << s.total.fail << ", SKIP " << s.total.skip
     << "; theorem FAILs " << s.theorem_fails << ", conjecture FAILs " << s.conjecture_fails << ", internal errors "
     << s.internal_errors << '\n';
}

}  // namespace supercong
