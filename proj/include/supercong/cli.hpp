#pragma once

// Command-line front end.  parse_args never exits the process; run() returns
// the exit code so tests can drive both halves in-process.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supercong/quadrep.hpp"
#include "supercong/registry.hpp"
#include "supercong/report.hpp"

namespace supercong {

inline constexpr int kExitUsage = 64;

enum class Mode { list, verify, oracle, represent };

struct RunConfig {
  Mode mode = Mode::verify;
  std::vector<std::string> ids{"all"};
  std::uint64_t prime_lo = 3;
  std::uint64_t prime_hi = 3;
  std::string format = "json";
  std::string out;  // empty: standard output
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t coeffwise_max_p = 199;
  std::uint64_t oracle_max_p = kOracleMaxP;
  bool timing = false;
  // represent
  std::int64_t c1 = 1, c2 = 1;
  int mult = 1;
  std::uint64_t rep_p = 0;
  std::string x_mod, y_mod;  // "m:r"
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = 0;  // meaningful when config is empty (help or usage error)
};

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "lo:hi" with both ends unsigned.
inline bool parse_range(const std::string& s, std::uint64_t& lo, std::uint64_t& hi) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t n1 = 0, n2 = 0;
    const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
    if (a.empty() || b.empty() || a[0] == '-' || b[0] == '-') return false;
    lo = std::stoull(a, &n1);
    hi = std::stoull(b, &n2);
    return n1 == a.size() && n2 == b.size();
  } catch (const std::exception&) {
    return false;
  }
}

inline ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"supercong: congruence verification over prime ranges"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string ids_csv = "all", primes = "3:3";
  std::uint64_t pmax = kOracleMaxP;

  auto* list = app.add_subcommand("list", "list registered statements");
  std::string list_format = "text";
  list->add_option("--format", list_format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "verify statements over a prime range");
  verify->add_option("--ids", ids_csv, "comma-separated ids or 'all'")->required();
  verify->add_option("--primes", primes, "lo:hi")->required();
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", cfg.out, "report file");
  verify->add_option("--jobs", cfg.jobs)->check(CLI::Range(1u, 1024u));
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--coeffwise-max-p", cfg.coeffwise_max_p);
  verify->add_flag("--timing", cfg.timing, "print wall time on stderr");

  auto* oracle = app.add_subcommand("oracle-check", "compare modular and exact left-hand sides");
  oracle->add_option("--pmax", pmax);
  oracle->add_option("--ids", ids_csv);
  oracle->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
  oracle->add_option("--out", cfg.out);
  oracle->add_option("--jobs", cfg.jobs)->check(CLI::Range(1u, 1024u));
  oracle->add_option("--seed", cfg.seed);
  oracle->add_flag("--timing", cfg.timing);

  auto* rep = app.add_subcommand("represent", "find c1*x^2+c2*y^2 = mult*p");
  rep->add_option("--c1", cfg.c1)->required();
  rep->add_option("--c2", cfg.c2)->required();
  rep->add_option("--mult", cfg.mult)->check(CLI::IsMember({1, 4}));
  rep->add_option("--p", cfg.rep_p)->required();
  rep->add_option("--x-mod", cfg.x_mod, "m:r, require x = r mod m");
  rep->add_option("--y-mod", cfg.y_mod, "m:r, require y = r mod m");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, 0};
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return {std::nullopt, kExitUsage};
  }

  auto usage = [&](const std::string& msg) {
    err << "usage error: " << msg << "\n";
    return ParseResult{std::nullopt, kExitUsage};
  };

  if (list->parsed()) {
    cfg.mode = Mode::list;
    cfg.format = list_format;
  } else if (rep->parsed()) {
    cfg.mode = Mode::represent;
    if (cfg.c1 <= 0 || cfg.c2 <= 0) return usage("--c1 and --c2 must be positive");
    if (!is_prime(cfg.rep_p)) return usage("--p must be prime");
  } else {
    cfg.mode = verify->parsed() ? Mode::verify : Mode::oracle;
    cfg.ids = split_csv(ids_csv);
    if (cfg.ids.empty()) return usage("--ids is empty");
    if (cfg.mode == Mode::verify) {
      if (!parse_range(primes, cfg.prime_lo, cfg.prime_hi)) return usage("--primes expects lo:hi, got '" + primes + "'");
    } else {
      cfg.prime_lo = 3;
      cfg.prime_hi = pmax;
      if (pmax > cfg.oracle_max_p) {
        return usage("--pmax " + std::to_string(pmax) + " exceeds the oracle bound " + std::to_string(cfg.oracle_max_p));
      }
    }
    if (cfg.prime_lo < 3 || cfg.prime_lo > cfg.prime_hi) {
      return usage("prime range must satisfy 3 <= lo <= hi");
    }
  }
  return {cfg, 0};
}

inline ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return parse_args(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

namespace cli_detail {

inline int list_statements(const RunConfig& cfg, const Registry& reg, std::ostream& out) {
  if (cfg.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& d : reg) {
      j.push_back({{"id", d.id}, {"kind", to_string(d.kind)}, {"mod_exp", d.mod_exp},
                   {"hypothesis", d.hypothesis}, {"formula", d.formula}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  for (const auto& d : reg) {
    out << d.id << "  " << to_string(d.kind) << "  mod p^" << d.mod_exp << "  [" << d.hypothesis << "]  " << d.formula
        << '\n';
  }
  return 0;
}

inline bool parse_rule(const std::string& s, char coord, NormalizationRule& rule) {
  std::uint64_t m = 0, r = 0;
  if (!parse_range(s, m, r) || m == 0) return false;
  auto add = coord == 'x' ? NormalizationRule::x_mod(static_cast<std::int64_t>(m), static_cast<std::int64_t>(r))
                          : NormalizationRule::y_mod(static_cast<std::int64_t>(m), static_cast<std::int64_t>(r));
  rule.id = rule.id == "none" ? add.id : rule.id + ", " + add.id;
  rule.constraints.push_back(add.constraints.front());
  return true;
}

inline int represent(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FormSpec form{cfg.c1, cfg.c2, cfg.mult};
  NormalizationRule rule = NormalizationRule::none();
  if (!cfg.x_mod.empty() && !parse_rule(cfg.x_mod, 'x', rule)) {
    err << "usage error: --x-mod expects m:r\n";
    return kExitUsage;
  }
  if (!cfg.y_mod.empty() && !parse_rule(cfg.y_mod, 'y', rule)) {
    err << "usage error: --y-mod expects m:r\n";
    return kExitUsage;
  }
  const auto raw = find_rep(form, cfg.rep_p);
  out << "form: " << form.str() << "  p=" << cfg.rep_p << '\n';
  if (!raw) {
    out << "raw: none\n";
    return 1;
  }
  out << "raw: x=" << raw->x << " y=" << raw->y << '\n';
  try {
    const Representation n = normalize(*raw, rule);
    out << "normalized (" << rule.id << "): x=" << n.x << " y=" << n.y << '\n';
  } catch (const Unsatisfiable& e) {
    out << "normalized (" << rule.id << "): unsatisfiable: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

inline ordered_json config_json(const RunConfig& cfg, const std::vector<std::string>& ids) {
  ordered_json j;
  j["mode"] = cfg.mode == Mode::oracle ? "oracle-check" : "verify";
  j["ids"] = ids;
  j["prime_lo"] = cfg.prime_lo;
  j["prime_hi"] = cfg.prime_hi;
  j["seed"] = cfg.seed;
  j["coeffwise_max_p"] = cfg.coeffwise_max_p;
  if (cfg.mode == Mode::oracle) j["oracle_max_p"] = cfg.oracle_max_p;
  return j;
}

}  // namespace cli_detail

inline int run(const RunConfig& cfg, const Registry& reg, std::ostream& out, std::ostream& err) {
  if (cfg.mode == Mode::list) return cli_detail::list_statements(cfg, reg, out);
  if (cfg.mode == Mode::represent) return cli_detail::represent(cfg, out, err);

  if (cfg.prime_lo < 3 || cfg.prime_lo > cfg.prime_hi) {
    err << "usage error: prime range must satisfy 3 <= lo <= hi\n";
    return kExitUsage;
  }
  if (cfg.mode == Mode::oracle && cfg.prime_hi > cfg.oracle_max_p) {
    err << "usage error: primes above the oracle bound " << cfg.oracle_max_p << "\n";
    return kExitUsage;
  }
  std::vector<std::string> ids;
  try {
    ids = resolve_ids(reg, cfg.ids);
  } catch (const UnknownStatement& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  RangeRequest req;
  req.ids = ids;
  req.prime_lo = cfg.prime_lo;
  req.prime_hi = cfg.prime_hi;
  req.options.seed = cfg.seed;
  req.options.coeffwise_max_p = cfg.coeffwise_max_p;
  req.jobs = cfg.jobs;
  req.oracle = cfg.mode == Mode::oracle;

  const auto t0 = std::chrono::steady_clock::now();
  const auto outcomes = verify_range(reg, req);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ofstream file;
  std::ostream* dst = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      err << "usage error: cannot open " << cfg.out << " for writing\n";
      return kExitUsage;
    }
    dst = &file;
  }
  if (cfg.format == "csv") {
    write_csv(*dst, outcomes);
  } else if (cfg.format == "text") {
    write_text(*dst, outcomes);
  } else {
    *dst << report_json(outcomes, cli_detail::config_json(cfg, ids)).dump(2) << '\n';
  }
  dst->flush();

  const Summary s = summarize(outcomes);
  if (cfg.timing) err << "wall time: " << secs << " s\n";
  if (s.internal_errors > 0) err << "internal errors: " << s.internal_errors << "\n";
  return exit_code_for(s);
}

inline int run(const RunConfig& cfg) { return run(cfg, default_registry(), std::cout, std::cerr); }

inline int cli_main(int argc, const char* const* argv, const Registry& reg, std::ostream& out, std::ostream& err) {
  ParseResult pr = parse_args(argc, argv, out, err);
  if (!pr.config) return pr.exit_code;
  return run(*pr.config, reg, out, err);
}

}  // namespace supercong
