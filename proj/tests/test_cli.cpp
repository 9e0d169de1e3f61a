#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ehsum/cli.hpp"
#include "ehsum/report_io.hpp"

using namespace ehsum;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/ehsum_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("argument parsing") {
  CliConfig list = parse_args({"list"});
  CHECK(list.command == CliConfig::Command::List);

  CliConfig v = parse_args({"verify", "--identity", "cn_jackson_box", "--trials", "10"});
  CHECK(v.command == CliConfig::Command::Verify);
  CHECK(v.identity == "cn_jackson_box");
  CHECK(v.trials == 10);
  CHECK(v.seed == 42);
  CHECK(v.precision_bits == 256);

  CHECK_THROWS_AS(parse_args({"verify"}), UsageError);
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args({"bogus"}), UsageError);
  CHECK_THROWS_AS(parse_args({"verify", "--identity", "x", "--rank", "wat"}), UsageError);

  CliConfig s = parse_args({"suite", "--suite", "primitives", "--seed", "7",
                            "--output", "json", "--precision-bits", "128"});
  CHECK(s.command == CliConfig::Command::Suite);
  CHECK(s.suite == "primitives");
  CHECK(s.seed == 7);
  CHECK(s.precision_bits == 128);
  CHECK(s.output == "json");
}

TEST_CASE("environment variable overrides the default precision") {
  setenv("EH_PRECISION_BITS", "128", 1);
  CliConfig cfg = parse_args({"suite", "--suite", "primitives"});
  unsetenv("EH_PRECISION_BITS");
  CHECK(cfg.precision_bits == 128);
  CliConfig plain = parse_args({"suite", "--suite", "primitives"});
  CHECK(plain.precision_bits == 256);
}

TEST_CASE("verify exits 0 on success and 1 on unattainable tolerance") {
  CliConfig ok = parse_args({"verify", "--identity", "pf_ww", "--rank", "2..3",
                             "--trials", "4"});
  CHECK(run_cli(ok) == 0);

  CliConfig fail = parse_args({"verify", "--identity", "pf_ww", "--rank", "2",
                               "--trials", "2", "--tolerance", "0"});
  CHECK(run_cli(fail) == 1);
}

TEST_CASE("unknown identity is a usage error") {
  CliConfig bad = parse_args({"verify", "--identity", "nope", "--trials", "1"});
  CHECK_THROWS_AS(run_cli(bad), UsageError);
}

TEST_CASE("json output round-trips byte-for-byte") {
  TempFile tmp("roundtrip.json");
  CliConfig cfg = parse_args({"verify", "--identity", "pf_rational", "--rank", "2",
                              "--trials", "3", "--output", "json", "--out", tmp.path});
  CHECK(run_cli(cfg) == 0);
  std::string body = slurp(tmp.path);
  auto parsed = nlohmann::ordered_json::parse(body);
  CHECK(parsed.dump(2) + "\n" == body);
  CHECK(parsed["version"] == 1);
  CHECK(parsed["reports"].size() == 1);
  CHECK(parsed["reports"][0]["descriptor_id"] == "pf_rational");
  CHECK(parsed["reports"][0]["max_residual"].is_string());
}

TEST_CASE("text and json report the same max_residual string") {
  TempFile t_txt("same.txt"), t_json("same.json");
  CliConfig base = parse_args({"verify", "--identity", "pf_dn", "--rank", "3",
                               "--trials", "3", "--out", t_txt.path});
  CHECK(run_cli(base) == 0);
  CliConfig js = parse_args({"verify", "--identity", "pf_dn", "--rank", "3",
                             "--trials", "3", "--output", "json", "--out", t_json.path});
  CHECK(run_cli(js) == 0);
  auto parsed = nlohmann::ordered_json::parse(slurp(t_json.path));
  std::string max_res = parsed["reports"][0]["max_residual"].get<std::string>();
  CHECK(slurp(t_txt.path).find(max_res) != std::string::npos);
}

TEST_CASE("equal seeds give byte-identical timing-free json") {
  TempFile a("det_a.json"), b("det_b.json");
  auto args = [&](const std::string& path) {
    return std::vector<std::string>{"suite", "--suite",  "primitives", "--trials", "2",
                                    "--seed", "5",       "--output",   "json",
                                    "--no-timing", "--out", path};
  };
  CHECK(run_cli(parse_args(args(a.path))) == 0);
  CHECK(run_cli(parse_args(args(b.path))) == 0);
  std::string body_a = slurp(a.path), body_b = slurp(b.path);
  CHECK(!body_a.empty());
  CHECK(body_a == body_b);
}

TEST_CASE("cli_main maps usage errors to exit code 2") {
  std::vector<const char*> argv{"ehsum", "verify"};
  CHECK(cli_main(static_cast<int>(argv.size()), const_cast<char**>(argv.data())) == 2);
  std::vector<const char*> ok{"ehsum", "list"};
  CHECK(cli_main(static_cast<int>(ok.size()), const_cast<char**>(ok.data())) == 0);
}
