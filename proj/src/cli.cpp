#include "ehsum/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ehsum/report_io.hpp"

namespace ehsum {

namespace {

struct HelpRequested {
  std::string text;
};

void parse_rank(const std::string& spec, CliConfig& cfg) {
  auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.rank_lo = cfg.rank_hi = std::stoi(spec);
    } else {
      cfg.rank_lo = std::stoi(spec.substr(0, dots));
      cfg.rank_hi = std::stoi(spec.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("bad --rank value: " + spec + " (expected e.g. 2 or 1..3)");
  }
  if (cfg.rank_lo < 1 || cfg.rank_hi < cfg.rank_lo)
    throw UsageError("bad --rank range: " + spec);
}

MultiIndex parse_bounds(const std::string& spec) {
  MultiIndex m;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      m.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad --size value: " + spec);
    }
    if (m.back() < 0) throw UsageError("--size entries must be >= 0");
  }
  if (m.empty()) throw UsageError("empty --size value");
  return m;
}

// Size spec to a shape for rank n: integers set N (and a uniform bound
// vector), vectors are truncated or padded with their last entry.
Shape shape_for(const IdentityDescriptor& d, int n, const std::string& size_spec) {
  Shape s;
  s.n = n;
  MultiIndex bounds;
  if (size_spec.empty()) {
    bounds = {2, 2, 2};
    s.N = 3;
  } else {
    bounds = parse_bounds(size_spec);
    s.N = bounds[0];
  }
  if (d.domain == DomainKind::Box || d.id == "det_identity_di") {
    s.m.assign(static_cast<std::size_t>(n), bounds.back());
    for (int i = 0; i < n && i < static_cast<int>(bounds.size()); ++i) s.m[i] = bounds[i];
    if (d.id == "warnaar_first") {
      s.N = bounds[0];
      s.m.assign(static_cast<std::size_t>(n), s.N);
    }
  }
  return s;
}

ConfigEcho echo_of(const CliConfig& cfg) {
  ConfigEcho e;
  auto cmd = [&] {
    switch (cfg.command) {
      case CliConfig::Command::List: return "list";
      case CliConfig::Command::Verify: return "verify";
      case CliConfig::Command::Suite: return "suite";
      case CliConfig::Command::CrossCheck: return "cross-check";
      default: return "none";
    }
  }();
  e.emplace_back("command", cmd);
  if (cfg.command == CliConfig::Command::Verify) e.emplace_back("identity", cfg.identity);
  if (cfg.command == CliConfig::Command::Suite) e.emplace_back("suite", cfg.suite);
  if (cfg.command == CliConfig::Command::CrossCheck) e.emplace_back("name", cfg.cross_name);
  e.emplace_back("trials", std::to_string(cfg.trials));
  e.emplace_back("seed", std::to_string(cfg.seed));
  e.emplace_back("precision_bits", std::to_string(cfg.precision_bits));
  e.emplace_back("rank", std::to_string(cfg.rank_lo) + ".." + std::to_string(cfg.rank_hi));
  e.emplace_back("size", cfg.size_spec.empty() ? "default" : cfg.size_spec);
  e.emplace_back("nome_magnitude", std::to_string(cfg.nome_magnitude));
  e.emplace_back("tolerance", cfg.tolerance.empty() ? "default" : cfg.tolerance);
  e.emplace_back("nome_mode", cfg.p_zero ? "zero" : "random");
  return e;
}

int emit(const CliConfig& cfg, const std::vector<VerificationReport>& reports) {
  std::string body = cfg.output == "json" ? reports_to_json(reports, echo_of(cfg), cfg.no_timing)
                                          : reports_to_text(reports);
  if (cfg.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.out_path);
    out << body;
  }
  return all_passed(reports) ? 0 : 1;
}

int run_list(const CliConfig&) {
  std::cout << "identity catalog:\n";
  for (const auto& d : catalog()) {
    std::cout << "  " << d.id;
    for (std::size_t i = d.id.size(); i < 26; ++i) std::cout << ' ';
    std::cout << family_name(d.family) << ", " << domain_name(d.domain);
    if (!d.constraint.empty()) std::cout << "; " << d.constraint;
    if (!d.note.empty()) std::cout << "; " << d.note;
    std::cout << "\n";
  }
  std::cout << "scalar building-block checks:\n";
  for (const auto& d : primitive_checks()) {
    std::cout << "  " << d.id;
    for (std::size_t i = d.id.size(); i < 26; ++i) std::cout << ' ';
    std::cout << d.note << "\n";
  }
  std::cout << "suites: ";
  bool first = true;
  for (const auto& s : suite_names()) {
    std::cout << (first ? "" : ", ") << s;
    first = false;
  }
  std::cout << "\n";
  return 0;
}

int run_verify(const CliConfig& cfg) {
  const IdentityDescriptor* d = find_descriptor(cfg.identity);
  if (!d) throw UsageError("unknown identity: " + cfg.identity + " (see `ehsum list`)");
  VerifyOptions opts = cli_verify_options(cfg);
  std::vector<VerificationReport> reports;
  for (int n = cfg.rank_lo; n <= cfg.rank_hi; ++n) {
    if (n < d->min_rank) continue;
    reports.push_back(verify(*d, shape_for(*d, n, cfg.size_spec), opts));
  }
  if (reports.empty())
    throw UsageError("rank range " + std::to_string(cfg.rank_lo) + ".." +
                     std::to_string(cfg.rank_hi) + " is below the identity's minimum rank");
  return emit(cfg, reports);
}

int run_suite_cmd(const CliConfig& cfg) {
  VerifyOptions opts = cli_verify_options(cfg);
  return emit(cfg, run_suite(cfg.suite, opts));
}

int run_cross(const CliConfig& cfg) {
  VerifyOptions opts = cli_verify_options(cfg);
  std::vector<VerificationReport> reports;
  const std::string& which = cfg.cross_name;
  if (which == "all") {
    reports = run_suite("cross-checks", opts);
  } else if (which == "cr_vs_aaj") {
    reports.push_back(cross_check_cr_vs_aaj(Shape{2, 2, {1, 2}}, opts));
  } else if (which == "cjt_vs_wj") {
    reports.push_back(cross_check_cjt_vs_wj(2, opts));
  } else if (which == "reparametrization") {
    reports.push_back(check_reparametrization(2, {2, 2}, opts));
  } else if (which == "epf_to_ww") {
    reports.push_back(check_epf_reduces_to_ww(3, opts));
  } else if (which == "dg_symmetry") {
    reports.push_back(check_cn_an_dg_symmetry(Shape{2, 0, {1, 1}}, opts));
  } else {
    throw UsageError("unknown cross-check: " + which);
  }
  return emit(cfg, reports);
}

}  // namespace

VerifyOptions cli_verify_options(const CliConfig& cfg) {
  VerifyOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.prec = cfg.precision_bits;
  opts.nome_magnitude = cfg.nome_magnitude;
  opts.p_zero = cfg.p_zero;
  opts.threads = cfg.threads;
  if (cfg.command == CliConfig::Command::Suite ||
      cfg.command == CliConfig::Command::CrossCheck)
    opts.trial_cap = cfg.trials_given ? cfg.trials : 0;
  if (!cfg.tolerance.empty())
    opts.tolerance = Real::from_string(cfg.tolerance, cfg.precision_bits);
  return opts;
}

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig cfg;
  CLI::App app{"numerical verifier for elliptic hypergeometric summation identities on "
               "root systems"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "trials per report")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "root seed for parameter draws");
    sub->add_option("--precision-bits", cfg.precision_bits,
                    "working mantissa bits (>= 64)")
        ->envname("EH_PRECISION_BITS")
        ->check(CLI::Range(64l, 1l << 20));
    sub->add_option("--nome-magnitude", cfg.nome_magnitude, "|p| of sampled nomes")
        ->check(CLI::Range(0.0, 0.999));
    sub->add_option("--tolerance", cfg.tolerance,
                    "pass threshold as a decimal string (default 2^-(prec/2))");
    sub->add_option("--output", cfg.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    sub->add_flag("--p-zero", cfg.p_zero, "draw the q-series specialization (nome = 0)");
    sub->add_flag("--no-timing", cfg.no_timing,
                  "zero wall_time_ms in JSON for byte-stable reruns");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  };

  CLI::App* list = app.add_subcommand("list", "list identities and suites");
  (void)list;

  CLI::App* verify = app.add_subcommand("verify", "verify one identity");
  verify->add_option("--identity", cfg.identity, "descriptor id")->required();
  verify->add_option("--rank", "rank or range, e.g. 2 or 1..3");
  verify->add_option("--size", cfg.size_spec, "simplex size N or box bounds m1,m2,...");
  add_common(verify);

  CLI::App* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("--suite", cfg.suite, "primitives | partial-fractions | jackson | bailey | cross-checks | all");
  add_common(suite);

  CLI::App* cross = app.add_subcommand("cross-check", "run structural cross-checks");
  cross->add_option("--name", cfg.cross_name,
                    "cr_vs_aaj | cjt_vs_wj | reparametrization | epf_to_ww | dg_symmetry | all");
  add_common(cross);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (list->parsed()) cfg.command = CliConfig::Command::List;
  if (verify->parsed()) {
    cfg.command = CliConfig::Command::Verify;
    if (verify->count("--rank")) parse_rank(verify->get_option("--rank")->as<std::string>(), cfg);
    cfg.trials_given = verify->count("--trials") > 0;
  }
  if (suite->parsed()) {
    cfg.command = CliConfig::Command::Suite;
    cfg.trials_given = suite->count("--trials") > 0;
  }
  if (cross->parsed()) {
    cfg.command = CliConfig::Command::CrossCheck;
    cfg.trials_given = cross->count("--trials") > 0;
  }
  return cfg;
}

int run_cli(const CliConfig& cfg) {
  try {
    switch (cfg.command) {
      case CliConfig::Command::List: return run_list(cfg);
      case CliConfig::Command::Verify: return run_verify(cfg);
      case CliConfig::Command::Suite: return run_suite_cmd(cfg);
      case CliConfig::Command::CrossCheck: return run_cross(cfg);
      default: throw UsageError("no command given");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const UnknownSuite& e) {
    throw UsageError(e.what());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    CliConfig cfg = parse_args(args);
    return run_cli(cfg);
  } catch (const HelpRequested& h) {
    std::cout << h.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ehsum
