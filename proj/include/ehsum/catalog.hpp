#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ehsum/parameters.hpp"
#include "ehsum/weyl.hpp"

namespace ehsum {

enum class Family { PartialFraction, An, Cn, Dn, Bailey, Primitive };
enum class DomainKind { SimplexExact, SimplexLe, Box, FiniteList };

const char* family_name(Family f);
const char* domain_name(DomainKind d);

class RngStream;  // sampler-owned deterministic stream

// One verifiable identity: how to draw its free parameters, how to solve
// the balancing constraint, and how to evaluate each side.
struct IdentityDescriptor {
  std::string id;
  Family family = Family::An;
  DomainKind domain = DomainKind::FiniteList;
  std::string constraint;  // human-readable; empty when unconstrained
  std::string note;        // evaluation conventions worth surfacing in `list`

  int min_rank = 1;
  bool forces_p_zero = false;

  // Free parameters drawn by the sampler, in draw order.
  std::vector<std::string> draw_scalars;
  // (list name, length offset relative to the rank n).
  std::vector<std::pair<std::string, int>> draw_lists;
  // Extra draws that do not fit the scalar/list pattern.
  std::function<void(ParameterSet&, RngStream&)> draw_extra;

  // Computes the solved-for parameter in place; null when unconstrained.
  std::function<void(ParameterSet&)> solve;
  // |constraint ratio - 1|; zero when unconstrained.
  std::function<Real(const ParameterSet&)> constraint_gap;

  std::function<Complex(const ParameterSet&, EvalCtx&)> lhs, rhs;

  // Theta arguments appearing in any denominator of either side, for the
  // sampler's degeneracy pre-scan.
  std::function<void(const ParameterSet&, std::vector<Complex>&)> denom_args;
};

// Evaluates both sides of one identity at a given parameter set.  Checks
// the balancing relation first and rejects unbalanced sets.
std::pair<Complex, Complex> evaluate_sides(const IdentityDescriptor& d, const ParameterSet& ps,
                                           const ThetaTruncation& tr, const Real& floor);

// The identity catalog proper (stable external ids).
const std::vector<IdentityDescriptor>& catalog();

// Scalar building-block checks (theta inversion, quasi-periodicity,
// Pochhammer splitting/reversal/inversion/nome-shift) run by the
// primitives suite alongside the catalog entries.
const std::vector<IdentityDescriptor>& primitive_checks();

// Looks up both registries; nullptr when absent.
const IdentityDescriptor* find_descriptor(const std::string& id);

std::vector<std::string> catalog_ids();
std::vector<std::string> primitive_check_ids();

}  // namespace ehsum
