#include "ehsum/rng.hpp"

#include <cmath>

namespace ehsum {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RngStream::next_u64() { return splitmix64(s_); }

double RngStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int RngStream::next_int(int lo, int hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

Complex RngStream::next_banded(double mag_lo, double mag_hi, long prec_bits) {
  double e = std::log2(mag_lo) + next_unit() * (std::log2(mag_hi) - std::log2(mag_lo));
  double turn = next_unit();
  Complex c(prec_bits);
  mpfr_t mag, ang, t;
  mpfr_inits2(prec_bits, mag, ang, t, (mpfr_ptr)nullptr);
  mpfr_set_d(mag, e, MPFR_RNDN);
  mpfr_exp2(mag, mag, MPFR_RNDN);
  mpfr_const_pi(ang, MPFR_RNDN);
  mpfr_mul_d(ang, ang, 2.0 * turn, MPFR_RNDN);
  mpfr_cos(t, ang, MPFR_RNDN);
  mpfr_mul(c.re_raw(), mag, t, MPFR_RNDN);
  mpfr_sin(t, ang, MPFR_RNDN);
  mpfr_mul(c.im_raw(), mag, t, MPFR_RNDN);
  mpfr_clears(mag, ang, t, (mpfr_ptr)nullptr);
  return c;
}

Complex RngStream::next_on_circle(double magnitude, long prec_bits) {
  double turn = next_unit();
  Complex c(prec_bits);
  mpfr_t mag, ang, t;
  mpfr_inits2(prec_bits, mag, ang, t, (mpfr_ptr)nullptr);
  mpfr_set_d(mag, magnitude, MPFR_RNDN);
  mpfr_const_pi(ang, MPFR_RNDN);
  mpfr_mul_d(ang, ang, 2.0 * turn, MPFR_RNDN);
  mpfr_cos(t, ang, MPFR_RNDN);
  mpfr_mul(c.re_raw(), mag, t, MPFR_RNDN);
  mpfr_sin(t, ang, MPFR_RNDN);
  mpfr_mul(c.im_raw(), mag, t, MPFR_RNDN);
  mpfr_clears(mag, ang, t, (mpfr_ptr)nullptr);
  return c;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto absorb = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffULL;
      h *= 0x100000001b3ULL;
    }
  };
  absorb(seed);
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  absorb(index);
  return h;
}

}  // namespace ehsum
