#include "ehsum/bigcomplex.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace ehsum {

namespace {

long checked_prec(long prec_bits) {
  if (prec_bits < kMinPrecBits) throw std::invalid_argument("precision below 64 bits");
  return prec_bits;
}

}  // namespace

// ---------------------------------------------------------------- Real

Real::Real(long prec_bits) { mpfr_init2(v_, checked_prec(prec_bits)); mpfr_set_zero(v_, 1); }

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(double v, long prec_bits) {
  Real r(prec_bits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of_int(long v, long prec_bits) {
  Real r(prec_bits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_string(const std::string& s, long prec_bits) {
  Real r(prec_bits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("unparsable decimal: " + s);
  return r;
}

Real Real::two_pow(long e, long prec_bits) {
  Real r(prec_bits);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string Real::decimal() const {
  // prec * log10(2) digits reproduce the mantissa; two extra guard digits.
  long digits = static_cast<long>(static_cast<double>(prec()) * 0.30103) + 2;
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Re", static_cast<int>(digits), v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Real Real::abs() const {
  Real r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::neg() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define EHSUM_REAL_BINOP(OP, FN)                                  \
  Real operator OP(const Real& a, const Real& b) {                \
    Real r(std::min(a.prec(), b.prec()));                         \
    FN(r.v_, a.v_, b.v_, MPFR_RNDN);                              \
    return r;                                                     \
  }

EHSUM_REAL_BINOP(+, mpfr_add)
EHSUM_REAL_BINOP(-, mpfr_sub)
EHSUM_REAL_BINOP(*, mpfr_mul)
EHSUM_REAL_BINOP(/, mpfr_div)
#undef EHSUM_REAL_BINOP

Real max(const Real& a, const Real& b) {
  Real r(std::min(a.prec(), b.prec()));
  mpfr_max(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------- Complex

Complex::Complex(long prec_bits) {
  long p = checked_prec(prec_bits);
  mpfr_init2(re_, p);
  mpfr_init2(im_, p);
  mpfr_set_zero(re_, 1);
  mpfr_set_zero(im_, 1);
}

Complex::Complex(const Complex& o) {
  mpfr_init2(re_, o.prec());
  mpfr_init2(im_, o.prec());
  mpfr_set(re_, o.re_, MPFR_RNDN);
  mpfr_set(im_, o.im_, MPFR_RNDN);
}

Complex::Complex(Complex&& o) noexcept {
  mpfr_init2(re_, mpfr_get_prec(o.re_));
  mpfr_init2(im_, mpfr_get_prec(o.im_));
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
}

Complex& Complex::operator=(const Complex& o) {
  if (this != &o) {
    mpfr_set_prec(re_, o.prec());
    mpfr_set_prec(im_, o.prec());
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
  }
  return *this;
}

Complex& Complex::operator=(Complex&& o) noexcept {
  if (this != &o) {
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
  }
  return *this;
}

Complex::~Complex() {
  mpfr_clear(re_);
  mpfr_clear(im_);
}

Complex Complex::of(double re, double im, long prec_bits) {
  Complex c(prec_bits);
  mpfr_set_d(c.re_, re, MPFR_RNDN);
  mpfr_set_d(c.im_, im, MPFR_RNDN);
  return c;
}

Complex Complex::of_int(long re, long prec_bits) {
  Complex c(prec_bits);
  mpfr_set_si(c.re_, re, MPFR_RNDN);
  return c;
}

Complex Complex::make(const Real& re, const Real& im) {
  Complex c(std::min(re.prec(), im.prec()));
  mpfr_set(c.re_, re.raw(), MPFR_RNDN);
  mpfr_set(c.im_, im.raw(), MPFR_RNDN);
  return c;
}

Real Complex::re() const {
  Real r(prec());
  mpfr_set(r.raw(), re_, MPFR_RNDN);
  return r;
}

Real Complex::im() const {
  Real r(prec());
  mpfr_set(r.raw(), im_, MPFR_RNDN);
  return r;
}

Real Complex::abs() const {
  Real r(prec());
  mpfr_hypot(r.raw(), re_, im_, MPFR_RNDN);
  return r;
}

Real Complex::norm2() const {
  Real r(prec());
  mpfr_fmma(r.raw(), re_, re_, im_, im_, MPFR_RNDN);
  return r;
}

Complex Complex::neg() const {
  Complex c(prec());
  mpfr_neg(c.re_, re_, MPFR_RNDN);
  mpfr_neg(c.im_, im_, MPFR_RNDN);
  return c;
}

Complex Complex::conj() const {
  Complex c(prec());
  mpfr_set(c.re_, re_, MPFR_RNDN);
  mpfr_neg(c.im_, im_, MPFR_RNDN);
  return c;
}

Complex operator+(const Complex& a, const Complex& b) {
  Complex c(std::min(a.prec(), b.prec()));
  mpfr_add(c.re_, a.re_, b.re_, MPFR_RNDN);
  mpfr_add(c.im_, a.im_, b.im_, MPFR_RNDN);
  return c;
}

Complex operator-(const Complex& a, const Complex& b) {
  Complex c(std::min(a.prec(), b.prec()));
  mpfr_sub(c.re_, a.re_, b.re_, MPFR_RNDN);
  mpfr_sub(c.im_, a.im_, b.im_, MPFR_RNDN);
  return c;
}

Complex operator*(const Complex& a, const Complex& b) {
  Complex c(std::min(a.prec(), b.prec()));
  mpfr_fmms(c.re_, a.re_, b.re_, a.im_, b.im_, MPFR_RNDN);
  mpfr_fmma(c.im_, a.re_, b.im_, a.im_, b.re_, MPFR_RNDN);
  return c;
}

Complex operator/(const Complex& a, const Complex& b) {
  long p = std::min(a.prec(), b.prec());
  Complex c(p);
  mpfr_t n2;
  mpfr_init2(n2, b.prec());
  mpfr_fmma(n2, b.re_, b.re_, b.im_, b.im_, MPFR_RNDN);
  mpfr_fmma(c.re_, a.re_, b.re_, a.im_, b.im_, MPFR_RNDN);
  mpfr_fmms(c.im_, a.im_, b.re_, a.re_, b.im_, MPFR_RNDN);
  mpfr_div(c.re_, c.re_, n2, MPFR_RNDN);
  mpfr_div(c.im_, c.im_, n2, MPFR_RNDN);
  mpfr_clear(n2);
  return c;
}

Complex& Complex::operator+=(const Complex& b) { return *this = *this + b; }
Complex& Complex::operator-=(const Complex& b) { return *this = *this - b; }
Complex& Complex::operator*=(const Complex& b) { return *this = *this * b; }
Complex& Complex::operator/=(const Complex& b) { return *this = *this / b; }

Complex Complex::inv() const { return Complex::one(prec()) / *this; }

Complex Complex::pow_int(long e) const {
  if (e < 0) return inv().pow_int(-e);
  Complex acc = Complex::one(prec());
  Complex base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u != 0) {
    if (u & 1u) acc *= base;
    u >>= 1u;
    if (u != 0) base *= base;
  }
  return acc;
}

bool identical(const Complex& a, const Complex& b) {
  if (a.prec() != b.prec()) return false;
  return mpfr_equal_p(a.re_, b.re_) && mpfr_equal_p(a.im_, b.im_) &&
         mpfr_signbit(a.re_) == mpfr_signbit(b.re_) &&
         mpfr_signbit(a.im_) == mpfr_signbit(b.im_);
}

std::string Complex::key() const {
  char* out = nullptr;
  mpfr_asprintf(&out, "%Ra|%Ra", re_, im_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

std::string Complex::str() const {
  char* out = nullptr;
  mpfr_asprintf(&out, "(%.8Re%+.8Rei)", re_, im_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace ehsum
