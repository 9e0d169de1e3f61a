#include <doctest.h>

#include <vector>

#include "ehsum/rng.hpp"
#include "ehsum/theta.hpp"

using namespace ehsum;

namespace {

// Independent oracle: plain factor-by-factor product evaluated at doubled
// precision, with its own blunt stopping rule.
Complex theta_oracle(const Complex& x, const Complex& p, long prec2) {
  Complex one = Complex::one(prec2);
  Complex prod = one;
  Complex u = x;                      // p^j x
  Complex v = p / x;                  // p^{j+1} / x
  Real cutoff = Real::two_pow(-(prec2 + 16), 64);
  Real scale = max(max(x.abs(), x.inv().abs()), Real::of_int(1, 64));
  Real pj = Real::of_int(1, 64);
  Real pabs = p.abs();
  for (int j = 0; j < 100000; ++j) {
    prod *= (one - u) * (one - v);
    pj = pj * pabs;
    if (pj * scale < cutoff) break;
    u *= p;
    v *= p;
  }
  return prod;
}

Complex up(const Complex& c, long prec2) {
  Complex r(prec2);
  mpfr_set(r.re_raw(), c.re_raw(), MPFR_RNDN);
  mpfr_set(r.im_raw(), c.im_raw(), MPFR_RNDN);
  return r;
}

Real tol_bits(long bits) { return Real::two_pow(-bits, 64); }

}  // namespace

TEST_CASE("theta at p = 0 is exactly 1 - x") {
  Nome p0(Complex::zero(256));
  Complex x = Complex::of(0.375, -1.5, 256);
  Complex t = theta(x, p0);
  CHECK(identical(t, Complex::one(256) - x));
}

TEST_CASE("theta vanishes at x = 1") {
  Nome p(Complex::of(0.2, 0.1, 256));
  CHECK(theta(Complex::one(256), p).is_zero());
}

TEST_CASE("theta rejects x = 0") {
  Nome p(Complex::of(0.2, 0.0, 256));
  CHECK_THROWS_AS(theta(Complex::zero(256), p), ZeroArgument);
}

TEST_CASE("nome construction rejects |p| >= 1") {
  CHECK_THROWS_AS(Nome(Complex::of(1.0, 0.1, 128)), std::invalid_argument);
  CHECK_NOTHROW(Nome(Complex::of(0.0, 0.0, 128)));
}

TEST_CASE("theta matches the doubled-precision product oracle") {
  // Frozen reference: theta(0.5; 0.1) computed once by the oracle below at
  // 512 bits.
  const char* kThetaHalfTenth =
      "3.6950936185691925063410368846438836694769302731271616966910668640939096575966554"
      "76547900748709043227946595260705802904652920091729849989320449545038299548027e-01";
  {
    Complex x = Complex::of(0.5, 0.0, 256);
    Complex p = Complex::of(0.1, 0.0, 256);
    Complex got = theta(x, Nome(p));
    Complex frozen = Complex::make(Real::from_string(kThetaHalfTenth, 512), Real(512));
    CHECK(residual(got, frozen) < tol_bits(250));
    CHECK(got.im().abs() < Real::two_pow(-250, 64));
    Complex want = theta_oracle(up(x, 512), up(p, 512), 512);
    CHECK(residual(want, frozen) < tol_bits(500));
  }
  RngStream rng(7);
  for (int i = 0; i < 20; ++i) {
    Complex x = rng.next_banded(0.3, 3.0, 256);
    Complex p = rng.next_on_circle(0.05 + 0.85 * rng.next_unit(), 256);
    Complex got = theta(x, Nome(p));
    Complex want = theta_oracle(up(x, 512), up(p, 512), 512);
    CHECK(residual(got, want) < tol_bits(240));
  }
}

TEST_CASE("theta result precision is the smaller operand precision") {
  Nome p(Complex::of(0.25, 0.1, 128));
  Complex x = Complex::of(0.7, 0.3, 512);
  CHECK(theta(x, p).prec() == 128);
}

TEST_CASE("theta_multi") {
  Nome p(Complex::of(0.3, 0.05, 256));
  CHECK(identical(theta_multi({}, p), Complex::one(256)));
  Complex x = Complex::of(0.8, -0.4, 256);
  std::vector<Complex> one_arg{x};
  CHECK(identical(theta_multi(one_arg, p), theta(x, p)));
  std::vector<Complex> pair{x, x.inv()};
  CHECK(residual(theta_multi(pair, p), theta(x, p) * theta(x.inv(), p)) < tol_bits(250));
}

TEST_CASE("elliptic Pochhammer basics and splitting") {
  Nome p(Complex::of(0.22, -0.08, 256));
  Complex q = Complex::of(0.6, 0.3, 256);
  Complex a = Complex::of(1.2, 0.7, 256);
  CHECK(identical(epoch(a, 0, q, p), Complex::one(256)));
  CHECK(identical(epoch(a, 1, q, p), theta(a, p)));
  // (a)_{n+k} = (a)_n (a q^n)_k at (n, k) = (2, 3)
  Complex lhs = epoch(a, 5, q, p);
  Complex rhs = epoch(a, 2, q, p) * epoch(a * q.pow_int(2), 3, q, p);
  CHECK(residual(lhs, rhs) < tol_bits(245));
  CHECK_THROWS_AS(epoch(a, -1, q, p), std::invalid_argument);
}

TEST_CASE("epoch_multi is the factor-wise product") {
  Nome p(Complex::of(0.2, 0.14, 256));
  Complex q = Complex::of(1.4, -0.2, 256);
  Complex a = Complex::of(0.9, 0.2, 256);
  Complex b = Complex::of(1.1, -0.6, 256);
  std::vector<Complex> as{a, b};
  CHECK(identical(epoch_multi(as, 0, q, p), Complex::one(256)));
  std::vector<Complex> single{a};
  CHECK(identical(epoch_multi(single, 3, q, p), epoch(a, 3, q, p)));
  CHECK(residual(epoch_multi(as, 2, q, p), epoch(a, 2, q, p) * epoch(b, 2, q, p)) <
        tol_bits(245));
}

TEST_CASE("residual definition") {
  Complex x = Complex::of(1.7, -0.4, 256);
  CHECK(residual(x, x).is_zero());
  CHECK(residual(Complex::one(256), Complex::zero(256)).to_double() == doctest::Approx(1.0));
  CHECK(residual(Complex::zero(256), Complex::one(256)).to_double() == doctest::Approx(1.0));
  Complex eps = Complex::of(1.0 + 1e-12, 0.0, 256);
  CHECK(residual(eps, Complex::one(256)).to_double() == doctest::Approx(1e-12).epsilon(1e-3));
}

TEST_CASE("inversion, quasi-periodicity and the addition formula") {
  RngStream rng(11);
  Real tol = tol_bits(128);
  for (int i = 0; i < 10; ++i) {
    Nome p(rng.next_on_circle(0.1 + 0.5 * rng.next_unit(), 256));
    Complex x = rng.next_banded(0.5, 2.0, 256);
    // theta(x) = -x theta(1/x)
    CHECK(residual(theta(x, p), (x * theta(x.inv(), p)).neg()) < tol);
    // theta(px) = -theta(x)/x
    CHECK(residual(theta(p.value() * x, p), (theta(x, p) / x).neg()) < tol);
    // theta(xz, x/z, yw, y/w)
    //   = (y/z) theta(xy, x/y, zw, z/w) + theta(xw, x/w, yz, y/z)
    Complex y = rng.next_banded(0.5, 2.0, 256);
    Complex z = rng.next_banded(0.5, 2.0, 256);
    Complex w = rng.next_banded(0.5, 2.0, 256);
    std::vector<Complex> l{x * z, x / z, y * w, y / w};
    std::vector<Complex> r1{x * y, x / y, z * w, z / w};
    std::vector<Complex> r2{x * w, x / w, y * z, y / z};
    CHECK(residual(theta_multi(l, p),
                   y / z * theta_multi(r1, p) + theta_multi(r2, p)) < tol);
  }
}

TEST_CASE("Pochhammer reversal, inversion and nome shift") {
  RngStream rng(13);
  Real tol = tol_bits(128);
  for (int i = 0; i < 10; ++i) {
    Nome p(rng.next_on_circle(0.05 + 0.6 * rng.next_unit(), 256));
    Complex q = rng.next_banded(0.5, 2.0, 256);
    Complex a = rng.next_banded(0.5, 2.0, 256);
    int n = rng.next_int(0, 5);
    int k = rng.next_int(0, n);
    Complex u = q.pow_int(1 - n) / a;
    // (a)_{n-k} = (-1)^k q^binom(k,2) (q^{1-n}/a)^k (a)_n / (q^{1-n}/a)_k
    Complex rhs = q.pow_int(binom2(k)) * u.pow_int(k) * epoch(a, n, q, p) / epoch(u, k, q, p);
    if (k % 2 != 0) rhs = rhs.neg();
    CHECK(residual(epoch(a, n - k, q, p), rhs) < tol);
    // (a)_n = (-1)^n q^binom(n,2) a^n (q^{1-n}/a)_n
    Complex rhs_ip = q.pow_int(binom2(n)) * a.pow_int(n) * epoch(u, n, q, p);
    if (n % 2 != 0) rhs_ip = rhs_ip.neg();
    CHECK(residual(epoch(a, n, q, p), rhs_ip) < tol);
    // (pa)_k = (-1)^k q^{-binom(k,2)} a^{-k} (a)_k
    Complex rhs_qp = q.pow_int(-binom2(k)) * a.pow_int(-k) * epoch(a, k, q, p);
    if (k % 2 != 0) rhs_qp = rhs_qp.neg();
    CHECK(residual(epoch(p.value() * a, k, q, p), rhs_qp) < tol);
  }
}

TEST_CASE("theta is continuous in p at p = 0") {
  const long prec = 256;
  Complex x = Complex::of(1.3, -0.8, prec);
  Real eps = Real::two_pow(-prec / 4, 64);
  Complex p(prec);
  mpfr_set(p.re_raw(), eps.raw(), MPFR_RNDN);
  Complex t = theta(x, Nome(p));
  Real gap = residual(t, Complex::one(prec) - x);
  Real bound = Real::of(4.0, 64) * eps * max(x.abs(), x.inv().abs());
  CHECK(gap < bound);
}

TEST_CASE("doubling max_terms does not move the result") {
  Nome p(Complex::of(0.45, 0.3, 256));
  Complex x = Complex::of(2.0, -0.7, 256);
  ThetaTruncation t1;
  ThetaTruncation t2;
  t2.max_terms = t1.max_terms * 2;
  Complex a = theta(x, p, t1);
  Complex b = theta(x, p, t2);
  CHECK(residual(a, b) < Real::two_pow(-256 - t1.tail_bound_bits, 64));
}

TEST_CASE("term cap below the tail target raises PrecisionExhausted") {
  Nome p(Complex::of(0.9, 0.0, 256));
  Complex x = Complex::of(1.5, 0.0, 256);
  ThetaTruncation t;
  t.max_terms = 5;
  CHECK_THROWS_AS(theta(x, p, t), PrecisionExhausted);
  t.tail_bound_bits = 8;
  CHECK_THROWS_AS(theta(x, p, t), std::invalid_argument);
}

TEST_CASE("EvalCtx memoizes theta and powers of q") {
  Nome p(Complex::of(0.3, 0.1, 256));
  Complex q = Complex::of(0.8, 0.4, 256);
  EvalCtx ctx(p, q, {}, Real::two_pow(-224, 64));
  Complex x = Complex::of(1.1, 0.2, 256);
  Complex first = ctx.th(x);
  CHECK(ctx.cache_size() == 1);
  Complex second = ctx.th(x);
  CHECK(ctx.cache_size() == 1);
  CHECK(identical(first, second));
  CHECK(residual(ctx.qpow(-3) * q.pow_int(3), Complex::one(256)) < tol_bits(250));
  CHECK(residual(ctx.poch(x, 4), epoch(x, 4, q, p)) < tol_bits(245));
  CHECK_THROWS_AS(ctx.th_nz(Complex::one(256)), DegenerateConfiguration);
}
