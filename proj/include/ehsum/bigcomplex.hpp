#pragma once

#include <mpfr.h>

#include <string>

#include "ehsum/errors.hpp"

namespace ehsum {

inline constexpr long kMinPrecBits = 64;

// Arbitrary-precision real scalar: a thin RAII wrapper over mpfr_t.
// Every value carries its own mantissa width; binary operations produce a
// result at the minimum of the two operand precisions.
class Real {
 public:
  explicit Real(long prec_bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real of(double v, long prec_bits);
  static Real of_int(long v, long prec_bits);
  static Real from_string(const std::string& s, long prec_bits);
  static Real two_pow(long e, long prec_bits);  // exact power of two

  long prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Decimal scientific form carrying the full mantissa.
  std::string decimal() const;

  Real abs() const;
  Real neg() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend Real max(const Real& a, const Real& b);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

// Arbitrary-precision complex scalar.  Both components share one mantissa
// width of at least kMinPrecBits.  Mixed-precision arithmetic rounds to the
// smaller operand precision.
class Complex {
 public:
  explicit Complex(long prec_bits);
  Complex(const Complex& o);
  Complex(Complex&& o) noexcept;
  Complex& operator=(const Complex& o);
  Complex& operator=(Complex&& o) noexcept;
  ~Complex();

  static Complex of(double re, double im, long prec_bits);
  static Complex of_int(long re, long prec_bits);
  static Complex one(long prec_bits) { return of_int(1, prec_bits); }
  static Complex zero(long prec_bits) { return of_int(0, prec_bits); }
  static Complex make(const Real& re, const Real& im);

  long prec() const { return mpfr_get_prec(re_); }
  bool is_zero() const { return mpfr_zero_p(re_) && mpfr_zero_p(im_); }
  bool is_finite() const { return mpfr_number_p(re_) && mpfr_number_p(im_); }

  Real re() const;
  Real im() const;
  Real abs() const;    // |z|
  Real norm2() const;  // |z|^2

  Complex neg() const;
  Complex conj() const;
  Complex inv() const;
  Complex pow_int(long e) const;  // exact integer exponent, e may be negative

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex& operator+=(const Complex& b);
  Complex& operator-=(const Complex& b);
  Complex& operator*=(const Complex& b);
  Complex& operator/=(const Complex& b);

  friend Complex operator-(const Complex& a) { return a.neg(); }

  // Bit-level equality (same precision, same bits).
  friend bool identical(const Complex& a, const Complex& b);

  // Exact textual key (hex mantissa) usable as a hash-map key.
  std::string key() const;

  std::string str() const;  // short human-readable form

  mpfr_ptr re_raw() { return re_; }
  mpfr_ptr im_raw() { return im_; }
  mpfr_srcptr re_raw() const { return re_; }
  mpfr_srcptr im_raw() const { return im_; }

 private:
  mpfr_t re_, im_;
};

}  // namespace ehsum
