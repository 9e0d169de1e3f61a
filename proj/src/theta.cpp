#include "ehsum/theta.hpp"

#include <algorithm>
#include <utility>

namespace ehsum {

Nome::Nome(Complex v) : v_(std::move(v)) {
  Real a = v_.abs();
  if (!(a < Real::of_int(1, 64)) || !v_.is_finite())
    throw std::invalid_argument("nome must satisfy |p| < 1");
}

long binom2(long k) { return k * (k - 1) / 2; }

Complex theta(const Complex& x, const Nome& p, const ThetaTruncation& tr) {
  if (x.is_zero()) throw ZeroArgument("theta argument is zero");
  if (tr.tail_bound_bits < 16) throw std::invalid_argument("tail_bound_bits < 16");
  if (tr.max_terms < 1) throw std::invalid_argument("max_terms < 1");

  const long prec = std::min(x.prec(), p.prec());

  // Soundness bookkeeping runs at 64 bits with outward rounding.  The tail
  // after J factors is below |p|^J (|x| + |p|/|x|) / (1-|p|) relatively, so
  // the stop target gets the 4/(1-|p|) slack folded in.
  mpfr_t absp, scale, tail, target, t64;
  mpfr_inits2(64, absp, scale, tail, target, t64, (mpfr_ptr)nullptr);
  mpfr_hypot(absp, p.value().re_raw(), p.value().im_raw(), MPFR_RNDU);
  mpfr_hypot(scale, x.re_raw(), x.im_raw(), MPFR_RNDU);
  mpfr_ui_div(t64, 1, scale, MPFR_RNDU);
  mpfr_max(scale, scale, t64, MPFR_RNDU);
  if (mpfr_cmp_ui(scale, 1) < 0) mpfr_set_ui(scale, 1, MPFR_RNDU);
  mpfr_ui_sub(t64, 1, absp, MPFR_RNDD);           // 1 - |p|
  mpfr_div_ui(t64, t64, 4, MPFR_RNDD);            // (1 - |p|)/4
  mpfr_set_si_2exp(target, 1, -(prec + tr.tail_bound_bits), MPFR_RNDD);
  mpfr_mul(target, target, t64, MPFR_RNDD);
  mpfr_set_ui(tail, 1, MPFR_RNDU);  // |p|^{j+1} running bound

  const long pp = p.prec();
  mpfr_t u_re, u_im, v_re, v_im, a_re, a_im, b_re, b_im, f_re, f_im, g_re, g_im;
  mpfr_inits2(std::max(prec, pp), u_re, u_im, v_re, v_im, a_re, a_im, b_re, b_im, f_re,
              f_im, g_re, g_im, (mpfr_ptr)nullptr);

  Complex prod = Complex::one(prec);
  // u = p^j x, v = p^{j+1}/x
  mpfr_set(u_re, x.re_raw(), MPFR_RNDN);
  mpfr_set(u_im, x.im_raw(), MPFR_RNDN);
  {
    Complex v0 = p.value() / x;
    mpfr_set(v_re, v0.re_raw(), MPFR_RNDN);
    mpfr_set(v_im, v0.im_raw(), MPFR_RNDN);
  }
  mpfr_srcptr pre = p.value().re_raw();
  mpfr_srcptr pim = p.value().im_raw();

  bool exhausted = false;
  for (long j = 0;; ++j) {
    if (j >= tr.max_terms) {
      exhausted = true;
      break;
    }
    // f = (1-u)(1-v), factored so an exact unit argument gives an exact zero
    mpfr_ui_sub(a_re, 1, u_re, MPFR_RNDN);
    mpfr_neg(a_im, u_im, MPFR_RNDN);
    mpfr_ui_sub(b_re, 1, v_re, MPFR_RNDN);
    mpfr_neg(b_im, v_im, MPFR_RNDN);
    mpfr_fmms(f_re, a_re, b_re, a_im, b_im, MPFR_RNDN);
    mpfr_fmma(f_im, a_re, b_im, a_im, b_re, MPFR_RNDN);
    // prod *= f
    mpfr_fmms(g_re, prod.re_raw(), f_re, prod.im_raw(), f_im, MPFR_RNDN);
    mpfr_fmma(g_im, prod.re_raw(), f_im, prod.im_raw(), f_re, MPFR_RNDN);
    mpfr_set(prod.re_raw(), g_re, MPFR_RNDN);
    mpfr_set(prod.im_raw(), g_im, MPFR_RNDN);

    mpfr_mul(tail, tail, absp, MPFR_RNDU);  // |p|^{j+1}
    mpfr_mul(t64, tail, scale, MPFR_RNDU);
    if (mpfr_cmp(t64, target) < 0) break;

    // u *= p, v *= p
    mpfr_fmms(g_re, u_re, pre, u_im, pim, MPFR_RNDN);
    mpfr_fmma(g_im, u_re, pim, u_im, pre, MPFR_RNDN);
    mpfr_set(u_re, g_re, MPFR_RNDN);
    mpfr_set(u_im, g_im, MPFR_RNDN);
    mpfr_fmms(g_re, v_re, pre, v_im, pim, MPFR_RNDN);
    mpfr_fmma(g_im, v_re, pim, v_im, pre, MPFR_RNDN);
    mpfr_set(v_re, g_re, MPFR_RNDN);
    mpfr_set(v_im, g_im, MPFR_RNDN);
  }

  mpfr_clears(absp, scale, tail, target, t64, (mpfr_ptr)nullptr);
  mpfr_clears(u_re, u_im, v_re, v_im, a_re, a_im, b_re, b_im, f_re, f_im, g_re, g_im,
              (mpfr_ptr)nullptr);
  if (exhausted) throw PrecisionExhausted("theta truncation cap reached before tail target");
  return prod;
}

Complex theta_multi(std::span<const Complex> xs, const Nome& p, const ThetaTruncation& tr) {
  Complex prod = Complex::one(p.prec());
  for (const Complex& x : xs) prod *= theta(x, p, tr);
  return prod;
}

Complex epoch(const Complex& a, long k, const Complex& q, const Nome& p,
              const ThetaTruncation& tr) {
  if (k < 0) throw std::invalid_argument("negative Pochhammer length");
  long prec = std::min({a.prec(), q.prec(), p.prec()});
  Complex prod = Complex::one(prec);
  Complex arg = a;
  for (long i = 0; i < k; ++i) {
    prod *= theta(arg, p, tr);
    if (i + 1 < k) arg *= q;
  }
  return prod;
}

Complex epoch_multi(std::span<const Complex> as, long k, const Complex& q, const Nome& p,
                    const ThetaTruncation& tr) {
  long prec = std::min(q.prec(), p.prec());
  Complex prod = Complex::one(prec);
  for (const Complex& a : as) prod *= epoch(a, k, q, p, tr);
  return prod;
}

Real residual(const Complex& lhs, const Complex& rhs) {
  long prec = std::min(lhs.prec(), rhs.prec());
  Real num = (lhs - rhs).abs();
  Real den = max(max(lhs.abs(), rhs.abs()), Real::two_pow(-(prec / 2), prec));
  return num / den;
}

// ---------------------------------------------------------------- EvalCtx

EvalCtx::EvalCtx(Nome p, Complex q, ThetaTruncation tr, Real floor)
    : p_(std::move(p)),
      q_(std::move(q)),
      tr_(tr),
      floor_(std::move(floor)),
      prec_(std::min(p_.prec(), q_.prec())) {}

const Complex& EvalCtx::th(const Complex& x) {
  std::string k = x.key();
  auto it = theta_memo_.find(k);
  if (it != theta_memo_.end()) return it->second;
  Complex v = theta(x, p_, tr_);
  return theta_memo_.emplace(std::move(k), std::move(v)).first->second;
}

Complex EvalCtx::th_nz(const Complex& x) {
  const Complex& v = th(x);
  if (!(v.abs() >= floor_))
    throw DegenerateConfiguration("theta denominator below floor at x = " + x.str());
  return v;
}

Complex EvalCtx::poch(const Complex& base, long k) {
  if (k < 0) throw std::invalid_argument("negative Pochhammer length");
  Complex prod = one();
  Complex arg = base;
  for (long i = 0; i < k; ++i) {
    prod *= th(arg);
    if (i + 1 < k) arg *= q_;
  }
  return prod;
}

Complex EvalCtx::poch_nz(const Complex& base, long k) {
  if (k < 0) throw std::invalid_argument("negative Pochhammer length");
  Complex prod = one();
  Complex arg = base;
  for (long i = 0; i < k; ++i) {
    prod *= th_nz(arg);
    if (i + 1 < k) arg *= q_;
  }
  return prod;
}

const Complex& EvalCtx::qpow(long e) {
  auto it = qpow_memo_.find(e);
  if (it != qpow_memo_.end()) return it->second;
  return qpow_memo_.emplace(e, q_.pow_int(e)).first->second;
}

}  // namespace ehsum
