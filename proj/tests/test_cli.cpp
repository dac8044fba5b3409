#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "supercong/cli.hpp"

using namespace supercong;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_args(const std::vector<std::string>& args, const Registry& reg = default_registry()) {
  std::ostringstream out, err;
  std::vector<const char*> argv{"supercong"};
  for (const auto& a : args) argv.push_back(a.c_str());
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), reg, out, err);
  return {code, out.str(), err.str()};
}

StatementDescriptor dummy(const std::string& id, Kind kind, bool holds) {
  StatementDescriptor d;
  d.id = id;
  d.kind = kind;
  d.formula = holds ? "1 = 1" : "1 = 2";
  d.skip_reason = [](std::uint64_t) { return std::optional<std::string>{}; };
  d.body = [holds](Context& ctx) {
    const Ring& r = ctx.ring(2);
    ctx.check("dummy", {}, r(1), holds ? r(1) : r(2));
  };
  return d;
}

Run run_binary(const std::string& args) {
  const std::string cmd = std::string(SUPERCONG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r{0, "", ""};
  FILE* f = popen(cmd.c_str(), "r");
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, f)) > 0;) r.out.append(buf, n);
  const int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(ParseArgs, VerifyDefaults) {
  std::ostringstream o, e;
  const auto pr = parse_args({"verify", "--ids", "all", "--primes", "3:500"}, o, e);
  ASSERT_TRUE(pr.config);
  EXPECT_EQ(pr.config->mode, Mode::verify);
  EXPECT_EQ(pr.config->ids, std::vector<std::string>{"all"});
  EXPECT_EQ(pr.config->prime_lo, 3u);
  EXPECT_EQ(pr.config->prime_hi, 500u);
  EXPECT_EQ(pr.config->format, "json");
  EXPECT_EQ(pr.config->jobs, 1u);
  EXPECT_EQ(pr.config->seed, 0u);
  EXPECT_EQ(pr.config->coeffwise_max_p, 199u);
  EXPECT_EQ(pr.config->oracle_max_p, 13u);
}

TEST(ParseArgs, Modes) {
  std::ostringstream o, e;
  EXPECT_EQ(parse_args({"list"}, o, e).config->mode, Mode::list);
  const auto oc = parse_args({"oracle-check", "--pmax", "13"}, o, e);
  ASSERT_TRUE(oc.config);
  EXPECT_EQ(oc.config->mode, Mode::oracle);
  EXPECT_EQ(oc.config->prime_hi, 13u);
  const auto ids = parse_args({"verify", "--ids", "E1.3,T3.4", "--primes", "5:7", "--seed", "9", "--jobs", "3"}, o, e);
  ASSERT_TRUE(ids.config);
  EXPECT_EQ(ids.config->ids, (std::vector<std::string>{"E1.3", "T3.4"}));
  EXPECT_EQ(ids.config->seed, 9u);
  EXPECT_EQ(ids.config->jobs, 3u);
}

TEST(ParseArgs, UsageErrors) {
  for (const std::vector<std::string>& a : std::vector<std::vector<std::string>>{
           {},
           {"verify", "--ids", "all", "--primes", "10:5"},
           {"verify", "--ids", "all", "--primes", "1:5"},
           {"verify", "--ids", "all", "--primes", "5"},
           {"verify", "--ids", "all", "--primes", "3:x"},
           {"verify", "--ids", "all", "--primes", "3:5", "--bogus"},
           {"verify", "--ids", "all", "--primes", "3:5", "--format", "xml"},
           {"oracle-check", "--pmax", "17"},
           {"represent", "--c1", "1", "--c2", "1", "--p", "12"},
           {"frobnicate"}}) {
    std::ostringstream o, e;
    const auto pr = parse_args(a, o, e);
    EXPECT_FALSE(pr.config);
    EXPECT_EQ(pr.exit_code, kExitUsage);
  }
}

TEST(Run, E13Sweep) {
  const auto r = run_args({"verify", "--ids", "E1.3", "--primes", "3:100", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 24u);
  for (const auto& rec : j["results"]) EXPECT_EQ(rec["status"], "PASS");
  EXPECT_EQ(j["summary"]["total"]["PASS"], 24);
}

TEST(Run, SingletonConjecture) {
  const auto r = run_args({"verify", "--ids", "CJ4.1", "--primes", "3:3", "--format", "text"});
  EXPECT_TRUE(r.code == 0 || r.code == 2);
  EXPECT_EQ(r.out.find("CJ4.1 p=3"), 0u);
}

TEST(Run, InvalidRangeAndUnknownId) {
  EXPECT_EQ(run_args({"verify", "--ids", "E1.3", "--primes", "10:5"}).code, kExitUsage);
  EXPECT_EQ(run_args({"verify", "--ids", "E1.3,Z9.9", "--primes", "3:5"}).code, kExitUsage);
  RunConfig cfg;
  cfg.prime_lo = 10;
  cfg.prime_hi = 5;
  std::ostringstream o, e;
  EXPECT_EQ(run(cfg, default_registry(), o, e), kExitUsage);
}

TEST(Run, ExitCodeContract) {
  Registry reg{dummy("X1.1", Kind::theorem, true), dummy("X1.2", Kind::conjecture, true)};
  EXPECT_EQ(run_args({"verify", "--ids", "all", "--primes", "3:7"}, reg).code, 0);

  reg.push_back(dummy("X1.3", Kind::conjecture, false));
  auto r = run_args({"verify", "--ids", "all", "--primes", "3:7"}, reg);
  EXPECT_EQ(r.code, 2);
  // the full report is still emitted, failures included
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"].size(), 9u);
  EXPECT_EQ(j["summary"]["statements"]["X1.3"]["FAIL"], 3);
  EXPECT_EQ(j["results"][6]["witness"]["check"], "dummy");

  reg.push_back(dummy("X1.4", Kind::lemma, false));
  EXPECT_EQ(run_args({"verify", "--ids", "all", "--primes", "3:7"}, reg).code, 1);
  EXPECT_EQ(run_args({"verify", "--ids", "X1.3", "--primes", "3:7"}, reg).code, 2);
  EXPECT_EQ(run_args({"verify", "--ids", "X1.4", "--primes", "3:7"}, reg).code, 1);
}

TEST(Run, InternalErrorFailsRun) {
  StatementDescriptor d = dummy("X2.1", Kind::conjecture, true);
  d.body = [](Context& ctx) { (void)ctx.ring(1).zero().inv(); };
  Registry reg{d};
  EXPECT_EQ(run_args({"verify", "--ids", "all", "--primes", "3:5"}, reg).code, 1);
}

TEST(Run, FormatsAgree) {
  const std::vector<std::string> base{"verify", "--ids", "E1.3,E2.4", "--primes", "3:30", "--format"};
  auto with = [&](const std::string& f) {
    auto a = base;
    a.push_back(f);
    return run_args(a);
  };
  const auto j = nlohmann::json::parse(with("json").out);
  const auto csv = with("csv").out;
  const auto text = with("text").out;
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("id,kind,p,status,modulus,lhs,rhs,", 0), 0u);
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, j["results"].size());
  EXPECT_NE(text.find("E2.4: PASS"), std::string::npos);
  for (const auto& rec : j["results"]) {
    for (const char* key : {"id", "kind", "p", "status", "modulus", "lhs", "rhs", "witness", "skip_reason"}) {
      EXPECT_TRUE(rec.contains(key)) << key;
    }
    EXPECT_TRUE(rec["lhs"].is_string());
  }
}

TEST(Run, OutFileAndList) {
  const std::string path = ::testing::TempDir() + "supercong_out.json";
  const auto r = run_args({"verify", "--ids", "E1.3", "--primes", "3:11", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(ss.str())["results"].size(), 4u);

  const auto l = run_args({"list"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("T3.4"), std::string::npos);
  EXPECT_NE(l.out.find("CJ5.5"), std::string::npos);
}

TEST(Run, Represent) {
  const auto r = run_args({"represent", "--c1", "1", "--c2", "1", "--mult", "1", "--p", "13", "--x-mod", "4:1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("raw: x=3 y=2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("x=-3 y=2"), std::string::npos) << r.out;
  const auto none = run_args({"represent", "--c1", "1", "--c2", "1", "--p", "7"});
  EXPECT_EQ(none.code, 1);
  EXPECT_NE(none.out.find("raw: none"), std::string::npos);
}

TEST(Binary, ExitCodesAndDeterminism) {
  EXPECT_EQ(run_binary("verify --ids E1.3 --primes 3:100").code, 0);
  EXPECT_EQ(run_binary("verify --ids E1.3 --primes 10:5").code, kExitUsage);
  EXPECT_EQ(run_binary("--nope").code, kExitUsage);
  const auto a = run_binary("verify --ids T4.1,CJ4.2 --primes 3:40 --seed 3 --jobs 1");
  const auto b = run_binary("verify --ids T4.1,CJ4.2 --primes 3:40 --seed 3 --jobs 4");
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
