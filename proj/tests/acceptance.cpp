// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Criteria run at pinned trial counts, shapes and tolerances; tolerances
// are the default 2^-(prec/2) unless stated.

#include <chrono>
#include <cstring>
#include <iostream>
#include <vector>

#include "ehsum/report_io.hpp"
#include "ehsum/verifier.hpp"

using namespace ehsum;

namespace {

int failures = 0;

void gate(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
            << std::endl;
  if (!ok) ++failures;
}

struct SuiteOutcome {
  bool all_ok = true;
  double wall_ms = 0.0;
  double worst_trial_ms = 0.0;
  std::string first_failure;
  int reports = 0;
};

SuiteOutcome digest(const std::vector<VerificationReport>& reports, bool p_zero_rows) {
  SuiteOutcome out;
  for (const auto& r : reports) {
    if (r.p_zero != p_zero_rows) continue;
    ++out.reports;
    out.wall_ms += r.wall_ms;
    if (r.trials > 0) out.worst_trial_ms = std::max(out.worst_trial_ms, r.wall_ms / r.trials);
    if (!r.passed && out.first_failure.empty())
      out.first_failure = r.descriptor_id + " at " + r.shape.str() +
                          (r.errors.empty() ? "" : " (" + r.errors.front() + ")");
    out.all_ok = out.all_ok && r.passed;
  }
  return out;
}

std::string ms_str(double ms) { return std::to_string(static_cast<long>(ms / 1000.0)) + "s"; }

VerifyOptions base_options(int threads) {
  VerifyOptions o;
  o.seed = 42;
  o.prec = 256;
  o.threads = threads;
  return o;
}

void criterion_1(int threads) {
  auto reports = run_suite("primitives", base_options(threads));
  SuiteOutcome s = digest(reports, false);
  bool ok = s.all_ok && s.wall_ms < 10000.0;
  gate(1, ok, "primitive suite, 100 trials each at 256 bits, tolerance 2^-128; " +
                  std::to_string(s.reports) + " reports in " + ms_str(s.wall_ms) +
                  (s.first_failure.empty() ? "" : "; first failure: " + s.first_failure));
}

void criterion_2(int threads) {
  VerifyOptions o = base_options(threads);
  auto reports = run_suite("partial-fractions", o);
  SuiteOutcome s = digest(reports, false);
  bool epf_ok = true;
  o.trials = 20;
  for (int n = 2; n <= 5; ++n) {
    auto r = check_epf_reduces_to_ww(n, o);
    epf_ok = epf_ok && r.passed;
    reports.push_back(r);
  }
  bool ok = s.all_ok && epf_ok;
  gate(2, ok, "partial fractions at n in {2..5}, 100 trials each, plus the t = b_{n+1} "
              "specialization" +
                  std::string(s.first_failure.empty() ? "" : "; first failure: " + s.first_failure));
}

std::vector<VerificationReport> jackson_reports_256;

void criterion_3(int threads) {
  jackson_reports_256 = run_suite("jackson", base_options(threads));
  SuiteOutcome s = digest(jackson_reports_256, false);
  bool ok = s.all_ok && s.wall_ms < 300000.0 && s.worst_trial_ms < 1000.0;
  gate(3, ok, "Jackson suite, 50 trials per shape at 256 bits; " + std::to_string(s.reports) +
                  " shape rows in " + ms_str(s.wall_ms) + ", worst trial " +
                  std::to_string(static_cast<long>(s.worst_trial_ms)) + "ms" +
                  (s.first_failure.empty() ? "" : "; first failure: " + s.first_failure));
}

void criterion_4(int threads) {
  auto reports = run_suite("bailey", base_options(threads));
  SuiteOutcome s = digest(reports, false);
  gate(4, s.all_ok, "Bailey suite, 30 trials per shape at ranks 1..2, bounds <= 2" +
                        std::string(s.first_failure.empty() ? ""
                                                            : "; first failure: " + s.first_failure));
}

void criterion_5(int threads) {
  VerifyOptions o = base_options(threads);
  bool ok = true;
  std::string fail;
  o.trials = 20;
  for (const Shape& s : {Shape{1, 2, {2}}, Shape{2, 2, {1, 2}}, Shape{2, 3, {2, 2}}}) {
    auto r = cross_check_cr_vs_aaj(s, o);
    if (!r.passed && fail.empty()) fail = "box/simplex matching at " + s.str();
    ok = ok && r.passed;
  }
  for (int n : {1, 2}) {
    auto r = cross_check_cjt_vs_wj(n, o);
    if (!r.passed && fail.empty()) fail = "C_n/common-bound matching at n=" + std::to_string(n);
    ok = ok && r.passed;
  }
  o.trials = 10;
  for (const Shape& s : {Shape{1, 0, {2}}, Shape{2, 0, {1, 2}}, Shape{2, 0, {2, 2}}}) {
    auto r = check_reparametrization(s.n, s.m, o);
    if (!r.passed && fail.empty()) fail = "collapsed-configuration products at " + s.str();
    ok = ok && r.passed;
  }
  gate(5, ok, "cross-checks: box vs simplex forms, C_n vs common-bound form, collapsed "
              "configuration products" +
                  (fail.empty() ? "" : "; first failure: " + fail));
}

void criterion_6() {
  SuiteOutcome s = digest(jackson_reports_256, true);
  bool ok = s.reports > 0 && s.all_ok;
  gate(6, ok, "q-series specialization (nome zero) of every Jackson-suite row; " +
                  std::to_string(s.reports) + " rows" +
                  (s.first_failure.empty() ? "" : "; first failure: " + s.first_failure));
}

void criterion_7(int threads) {
  VerifyOptions o = base_options(threads);
  o.trials = 20;
  bool ok = check_cn_an_dg_symmetry(Shape{1, 0, {2}}, o).passed &&
            check_cn_an_dg_symmetry(Shape{2, 0, {1, 1}}, o).passed;
  gate(7, ok, "both sides of bailey_cn_an invariant under the d/g swap, 20 draws");
}

void criterion_8(int threads) {
  VerifyOptions o = base_options(threads);
  o.trial_cap = 2;
  ConfigEcho echo{{"command", "suite"}, {"suite", "all"}, {"seed", "42"}};
  std::string a = reports_to_json(run_suite("all", o), echo, /*omit_timing=*/true);
  std::string b = reports_to_json(run_suite("all", o), echo, /*omit_timing=*/true);
  gate(8, !a.empty() && a == b,
       "two timing-free JSON renderings of `suite all` with one seed are byte-identical (" +
           std::to_string(a.size()) + " bytes)");
}

void criterion_9(int threads) {
  VerifyOptions o = base_options(threads);
  o.prec = 512;
  auto reports = run_suite("jackson", o);
  bool ok = true;
  std::string fail;
  Real bound = Real::two_pow(-256, 64);
  for (const auto& r : reports) {
    bool this_ok = r.passed && (r.trials == 0 || r.max_residual < bound);
    if (!this_ok && fail.empty()) fail = r.descriptor_id + " at " + r.shape.str();
    ok = ok && this_ok;
  }
  gate(9, ok, "Jackson suite repeated at 512 bits, max residuals below 2^-256" +
                  (fail.empty() ? "" : "; first failure: " + fail));
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) threads = std::atoi(argv[++i]);
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  auto want = [only](int k) { return only == 0 || only == k; };

  auto t0 = std::chrono::steady_clock::now();
  if (want(1)) criterion_1(threads);
  if (want(2)) criterion_2(threads);
  if (want(3) || want(6)) criterion_3(threads);
  if (want(4)) criterion_4(threads);
  if (want(5)) criterion_5(threads);
  if (want(6)) criterion_6();
  if (want(7)) criterion_7(threads);
  if (want(8)) criterion_8(threads);
  if (want(9)) criterion_9(threads);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count() << "s)"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
