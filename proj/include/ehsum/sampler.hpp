#pragma once

#include <cstdint>

#include "ehsum/catalog.hpp"
#include "ehsum/rng.hpp"

namespace ehsum {

struct SamplerConfig {
  std::uint64_t seed = 42;
  double band_lo = 0.5;        // |parameter| drawn log-uniform in [band_lo, band_hi]
  double band_hi = 2.0;
  double nome_magnitude = 0.3;
  long prec = 256;
  long floor_offset_bits = 32;  // degeneracy floor 2^(-prec + offset)
  int max_resamples = 100;
  ThetaTruncation trunc{};
  bool p_zero = false;  // draw the q-series specialization directly
};

// Draws a parameter set satisfying the descriptor's balancing constraint
// exactly (the solved parameter is computed from the free ones) and whose
// denominator theta factors all clear the degeneracy floor.  Identical
// (seed, descriptor, shape, config) give bit-identical output.
ParameterSet sample(const IdentityDescriptor& d, const Shape& shape, const SamplerConfig& cfg);

// Same parameters with the nome replaced by exactly zero.
ParameterSet degenerate_to_q(ParameterSet ps);

Real sampler_floor(const SamplerConfig& cfg);

}  // namespace ehsum
