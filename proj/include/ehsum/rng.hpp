#pragma once

#include <cstdint>
#include <string>

#include "ehsum/bigcomplex.hpp"

namespace ehsum {

// Deterministic splitmix64 stream.  All derived draws (uniform doubles,
// log-uniform magnitudes, angles) are built from raw 64-bit words with
// correctly-rounded mpfr operations, so identical seeds give bit-identical
// values on any platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next_u64();
  double next_unit();                // [0, 1), 53 random bits
  int next_int(int lo, int hi);      // uniform on [lo, hi]

  // Log-uniform magnitude in [mag_lo, mag_hi], uniform angle.
  Complex next_banded(double mag_lo, double mag_hi, long prec_bits);
  // Fixed magnitude, uniform angle.
  Complex next_on_circle(double magnitude, long prec_bits);

 private:
  std::uint64_t s_;
};

// Stable seed derivation for (run seed, descriptor/check tag, row index).
std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag, std::uint64_t index);

}  // namespace ehsum
