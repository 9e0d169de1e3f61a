#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehsum/sampler.hpp"

namespace ehsum {

struct VerifyOptions {
  int trials = 50;
  std::uint64_t seed = 42;
  long prec = 256;
  double nome_magnitude = 0.3;
  std::optional<Real> tolerance;  // default 2^(-prec/2)
  bool p_zero = false;
  int threads = 0;      // 0: hardware concurrency
  int trial_cap = 0;    // >0: caps per-row trial counts in suites
  long max_terms = 20000;
  long floor_offset_bits = 32;  // degeneracy floor 2^(-prec + offset)

  Real effective_tolerance() const;
  SamplerConfig sampler_config(std::uint64_t trial_seed) const;
};

struct VerificationReport {
  std::string descriptor_id;
  Shape shape;
  int trials = 0;
  std::vector<Real> residuals;  // ordered by trial index
  Real max_residual = Real(kMinPrecBits);
  Real tolerance = Real(kMinPrecBits);
  bool passed = false;
  double wall_ms = 0.0;
  std::uint64_t seed = 0;
  long precision_bits = 0;
  bool p_zero = false;
  std::vector<std::string> errors;  // per-trial failures; any entry fails the report
};

// Runs `trials` independent constrained draws of one descriptor and
// aggregates residual(lhs, rhs).
VerificationReport verify(const IdentityDescriptor& d, const Shape& shape,
                          const VerifyOptions& opts);
VerificationReport verify(const std::string& descriptor_id, const Shape& shape,
                          const VerifyOptions& opts);

// Matched-parameter agreement of the box-form A_n Jackson sum at b = q^-N
// with the solid-simplex form at b_j = q^-m_j / z_j: both left sides and
// both right sides must coincide.
VerificationReport cross_check_cr_vs_aaj(const Shape& shape, const VerifyOptions& opts);

// The C_n Jackson sum at unit bounds equals the common-bound sum at N = 1
// under a -> a q^2, q -> q^-1.
VerificationReport cross_check_cjt_vs_wj(int n, const VerifyOptions& opts);

// The three product identities tying the collapsed point configuration
// w = (z_1, qz_1, ..., q^{m_1-1} z_1, ...) to its block indices, checked
// for every x in box(m).
VerificationReport check_reparametrization(int n, const MultiIndex& m,
                                           const VerifyOptions& opts);

// Specializing the n+1-point expansion's extra parameter t to b_{n+1}
// reproduces the balanced zero-sum identity.
VerificationReport check_epf_reduces_to_ww(int n, const VerifyOptions& opts);

// Both sides of bailey_cn_an are invariant under swapping d and g.
VerificationReport check_cn_an_dg_symmetry(const Shape& shape, const VerifyOptions& opts);

// Multiplying every z_k by a unit-modulus constant and re-solving the
// constraint leaves the identity intact.
VerificationReport check_z_gauge(const std::string& descriptor_id, const Shape& shape,
                                 const VerifyOptions& opts);

std::vector<std::string> suite_names();
std::vector<VerificationReport> run_suite(const std::string& name, const VerifyOptions& opts);
bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace ehsum
