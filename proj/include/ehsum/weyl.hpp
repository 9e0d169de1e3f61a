#pragma once

#include <span>
#include <vector>

#include "ehsum/lattice.hpp"
#include "ehsum/theta.hpp"

namespace ehsum {

// Base points z_1..z_n together with the step q and the nome; the
// configuration must keep every theta(z_k/z_j) away from zero.
struct PointConfig {
  std::vector<Complex> z;
  Complex q;
  Nome p;
};

// Delta(z) = prod_{j<k} z_j theta(z_k/z_j); 1 for n = 1.
Complex vandermonde(EvalCtx& ctx, std::span<const Complex> z);

// Delta(z q^y) / Delta(z), evaluated factor-wise as
// prod_{j<k} q^{y_j} theta(q^{y_k-y_j} z_k/z_j) / theta(z_k/z_j).
Complex vandermonde_ratio(EvalCtx& ctx, std::span<const Complex> z, const MultiIndex& y);

// Same ratio with signed shift exponents.
Complex vandermonde_ratio_shift(EvalCtx& ctx, std::span<const Complex> z,
                                std::span<const int> shift);

// Residual against 1 of
// (-1)^|y| q^{|y| + binom(|y|,2)} Delta(zq^y)/Delta(z)
//     prod_{j,k} (q^{-y_j} z_k/z_j)_{y_k} / (q z_k/z_j)_{y_k}.
Real det_identity_check(EvalCtx& ctx, std::span<const Complex> z, const MultiIndex& y);

// Value of the product above (exposed for the identity catalog).
Complex det_identity_product(EvalCtx& ctx, std::span<const Complex> z, const MultiIndex& y);

// prod_{j<=k} theta(a z_j z_k q^{y_j+y_k}) / theta(a z_j z_k).
Complex cn_weight(EvalCtx& ctx, const Complex& a, std::span<const Complex> z,
                  const MultiIndex& y);

// prod_{j<k} 1 / (z_j z_k)_{y_j+y_k}.
Complex dn_coupling(EvalCtx& ctx, std::span<const Complex> z, const MultiIndex& y);

// Convenience overloads building a one-shot context from the configuration.
Complex vandermonde(const PointConfig& cfg, const ThetaTruncation& tr = {});
Complex vandermonde_ratio(const PointConfig& cfg, const MultiIndex& y,
                          const ThetaTruncation& tr = {});
Real det_identity_check(const PointConfig& cfg, const MultiIndex& y,
                        const ThetaTruncation& tr = {});
Complex cn_weight(const PointConfig& cfg, const Complex& a, const MultiIndex& y,
                  const ThetaTruncation& tr = {});
Complex dn_coupling(const PointConfig& cfg, const MultiIndex& y, const ThetaTruncation& tr = {});

// Default denominator floor at a given working precision.
Real default_floor(long prec_bits);

EvalCtx make_ctx(const PointConfig& cfg, const ThetaTruncation& tr = {});

}  // namespace ehsum
