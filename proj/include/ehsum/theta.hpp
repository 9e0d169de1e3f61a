#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ehsum/bigcomplex.hpp"

namespace ehsum {

// Elliptic deformation parameter, |value| < 1 strictly.  value == 0
// degenerates every theta factor to 1 - x.
class Nome {
 public:
  explicit Nome(Complex v);
  const Complex& value() const { return v_; }
  long prec() const { return v_.prec(); }
  bool is_zero() const { return v_.is_zero(); }

 private:
  Complex v_;
};

// Truncation policy for the theta product.  The loop stops at the first
// term index J with |p|^J * max(|x|, 1/|x|, 1) below the relative target
// 2^-(prec + tail_bound_bits); the discarded factors form a geometric tail
// below that target.
struct ThetaTruncation {
  long max_terms = 20000;
  long tail_bound_bits = 32;  // >= 16
};

// theta(x; p) = prod_{j>=0} (1 - p^j x)(1 - p^{j+1}/x).
// For p = 0 the value is exactly 1 - x.
Complex theta(const Complex& x, const Nome& p, const ThetaTruncation& tr = {});

// theta(x_1, ..., x_r) = theta(x_1) ... theta(x_r); empty list gives 1.
Complex theta_multi(std::span<const Complex> xs, const Nome& p, const ThetaTruncation& tr = {});

// Elliptic Pochhammer symbol (a)_k = theta(a) theta(aq) ... theta(aq^{k-1}).
// Only nonnegative lengths are defined.
Complex epoch(const Complex& a, long k, const Complex& q, const Nome& p,
              const ThetaTruncation& tr = {});

// (a_1, ..., a_r)_k = (a_1)_k ... (a_r)_k.
Complex epoch_multi(std::span<const Complex> as, long k, const Complex& q, const Nome& p,
                    const ThetaTruncation& tr = {});

// |lhs - rhs| / max(|lhs|, |rhs|, 2^-(prec/2)), prec the smaller operand
// precision.  Symmetric in its arguments.
Real residual(const Complex& lhs, const Complex& rhs);

// Evaluation context for one parameter draw: fixes (p, q, truncation,
// degeneracy floor) and memoizes theta values and integer powers of q.
// Identity evaluations reuse the same theta arguments heavily; the memo
// turns that into a single product evaluation per distinct argument.
class EvalCtx {
 public:
  EvalCtx(Nome p, Complex q, ThetaTruncation tr, Real floor);

  const Nome& p() const { return p_; }
  const Complex& q() const { return q_; }
  long prec() const { return prec_; }
  const Real& floor() const { return floor_; }

  const Complex& th(const Complex& x);  // memoized theta
  Complex th_nz(const Complex& x);      // denominator use: floor-checked

  Complex poch(const Complex& base, long k);     // (base)_k
  Complex poch_nz(const Complex& base, long k);  // denominator use

  const Complex& qpow(long e);  // q^e, e may be negative

  Complex one() const { return Complex::one(prec_); }

  std::size_t cache_size() const { return theta_memo_.size(); }

 private:
  Nome p_;
  Complex q_;
  ThetaTruncation tr_;
  Real floor_;
  long prec_;
  std::unordered_map<std::string, Complex> theta_memo_;
  std::map<long, Complex> qpow_memo_;
};

// q^binom(k,2) and friends need exact integer exponents.
long binom2(long k);  // k*(k-1)/2

}  // namespace ehsum
