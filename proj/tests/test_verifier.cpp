#include <doctest.h>

#include "ehsum/verifier.hpp"

using namespace ehsum;

namespace {

VerifyOptions quick(int trials = 3) {
  VerifyOptions o;
  o.trials = trials;
  o.seed = 2718;
  return o;
}

}  // namespace

TEST_CASE("zero trials is a vacuous pass") {
  VerificationReport r = verify("an_jackson_simplex", Shape{1, 1, {}}, quick(0));
  CHECK(r.passed);
  CHECK(r.trials == 0);
  CHECK(r.residuals.empty());
  CHECK(r.max_residual.is_zero());
}

TEST_CASE("single-point domain gives residual zero") {
  VerificationReport r = verify("an_jackson_simplex", Shape{1, 0, {}}, quick(1));
  CHECK(r.passed);
  REQUIRE(r.residuals.size() == 1);
  CHECK(r.residuals[0] < Real::two_pow(-200, 64));
}

TEST_CASE("reports are bit-reproducible") {
  VerifyOptions o = quick(5);
  VerificationReport a = verify("cn_jackson_box", Shape{2, 0, {1, 1}}, o);
  VerificationReport b = verify("cn_jackson_box", Shape{2, 0, {1, 1}}, o);
  REQUIRE(a.residuals.size() == b.residuals.size());
  for (std::size_t i = 0; i < a.residuals.size(); ++i)
    CHECK(a.residuals[i].decimal() == b.residuals[i].decimal());
  CHECK(a.max_residual.decimal() == b.max_residual.decimal());
  CHECK(a.passed == b.passed);
  o.threads = 1;
  VerificationReport c = verify("cn_jackson_box", Shape{2, 0, {1, 1}}, o);
  CHECK(c.max_residual.decimal() == a.max_residual.decimal());
}

TEST_CASE("report invariants") {
  VerificationReport r = verify("pf_ww", Shape{3, 0, {}}, quick(8));
  CHECK(r.trials == 8);
  CHECK(r.residuals.size() == 8);
  Real worst(kMinPrecBits);
  for (const auto& x : r.residuals) worst = max(worst, x);
  CHECK(worst.decimal() == r.max_residual.decimal());
  CHECK(r.passed == (r.errors.empty() && r.max_residual < r.tolerance));
  CHECK(r.passed);
}

TEST_CASE("pair evaluation rejects unbalanced parameter sets") {
  const IdentityDescriptor& d = *find_descriptor("an_jackson_box");
  SamplerConfig sc;
  sc.seed = 3;
  ParameterSet ps = sample(d, Shape{2, 0, {1, 1}}, sc);
  auto [lhs, rhs] = evaluate_sides(d, ps, sc.trunc, sampler_floor(sc));
  CHECK(residual(lhs, rhs) < Real::two_pow(-128, 64));
  ps.scalars.at("e") *= Complex::of(1.5, 0.0, sc.prec);
  CHECK_THROWS_AS(evaluate_sides(d, ps, sc.trunc, sampler_floor(sc)), ConstraintViolation);
}

TEST_CASE("sampler exhaustion propagates out of verify") {
  VerifyOptions o = quick(3);
  o.floor_offset_bits = 600;  // impossible floor
  CHECK_THROWS_AS(verify("pf_ww", Shape{2, 0, {}}, o), SamplingExhausted);
}

TEST_CASE("unknown descriptors and suites are rejected") {
  CHECK_THROWS_AS(verify("nope", Shape{1, 0, {}}, quick()), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nope", quick()), UnknownSuite);
}

TEST_CASE("an unattainable tolerance fails the report") {
  VerifyOptions o = quick(2);
  o.tolerance = Real(kMinPrecBits);  // exactly zero
  VerificationReport r = verify("pf_ww", Shape{2, 0, {}}, o);
  CHECK_FALSE(r.passed);
}

TEST_CASE("raising precision keeps passing reports passing") {
  VerifyOptions o = quick(3);
  VerificationReport base = verify("an_jackson_box", Shape{2, 0, {1, 1}}, o);
  REQUIRE(base.passed);
  VerifyOptions o512 = o;
  o512.prec = 512;
  VerificationReport fine = verify("an_jackson_box", Shape{2, 0, {1, 1}}, o512);
  CHECK(fine.passed);
  CHECK(fine.max_residual < Real::two_pow(-256, 64));
}

TEST_CASE("q-series mode flows through the whole pipeline") {
  VerifyOptions o = quick(3);
  o.p_zero = true;
  VerificationReport r = verify("dn_jackson_box", Shape{2, 0, {1, 1}}, o);
  CHECK(r.passed);
  CHECK(r.p_zero);
}

TEST_CASE("cross-check: box form against solid-simplex form") {
  VerificationReport trivial = cross_check_cr_vs_aaj(Shape{1, 0, {0}}, quick(1));
  CHECK(trivial.passed);
  CHECK(trivial.max_residual < Real::two_pow(-200, 64));
  VerificationReport r = cross_check_cr_vs_aaj(Shape{2, 2, {1, 2}}, quick(3));
  CHECK(r.passed);
}

TEST_CASE("cross-check: unit-bound C_n sum against the common-bound form") {
  for (int n : {1, 2}) {
    VerificationReport r = cross_check_cjt_vs_wj(n, quick(3));
    INFO("n=" << n);
    CHECK(r.passed);
  }
  VerifyOptions o = quick(2);
  o.p_zero = true;
  CHECK(cross_check_cjt_vs_wj(2, o).passed);
}

TEST_CASE("cross-check: collapsed-configuration product identities") {
  CHECK(check_reparametrization(1, {2}, quick(2)).passed);
  CHECK(check_reparametrization(2, {2, 1}, quick(2)).passed);
}

TEST_CASE("cross-check: expansion specializes to the balanced zero sum") {
  CHECK(check_epf_reduces_to_ww(2, quick(3)).passed);
  CHECK(check_epf_reduces_to_ww(3, quick(3)).passed);
}

TEST_CASE("cross-check: d/g swap symmetry of the C_n/A_n transformation") {
  CHECK(check_cn_an_dg_symmetry(Shape{1, 0, {1}}, quick(3)).passed);
}

TEST_CASE("suite plumbing") {
  CHECK(suite_names().size() == 6);
  VerifyOptions o = quick();
  o.trial_cap = 1;
  auto reports = run_suite("partial-fractions", o);
  CHECK(reports.size() == 24);
  for (const auto& r : reports) {
    CHECK(r.trials == 1);
    CHECK(r.passed);
  }
}
