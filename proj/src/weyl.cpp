#include "ehsum/weyl.hpp"

#include <algorithm>

namespace ehsum {

Real default_floor(long prec_bits) { return Real::two_pow(-prec_bits + 32, 64); }

EvalCtx make_ctx(const PointConfig& cfg, const ThetaTruncation& tr) {
  long prec = std::min(cfg.q.prec(), cfg.p.prec());
  return EvalCtx(cfg.p, cfg.q, tr, default_floor(prec));
}

Complex vandermonde(EvalCtx& ctx, std::span<const Complex> z) {
  const int n = static_cast<int>(z.size());
  Complex prod = ctx.one();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) prod *= z[j] * ctx.th_nz(z[k] / z[j]);
  return prod;
}

Complex vandermonde_ratio_shift(EvalCtx& ctx, std::span<const Complex> z,
                                std::span<const int> shift) {
  const int n = static_cast<int>(z.size());
  Complex prod = ctx.one();
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Complex ratio = z[k] / z[j];
      prod *= ctx.qpow(shift[j]) * ctx.th(ctx.qpow(shift[k] - shift[j]) * ratio) /
              ctx.th_nz(ratio);
    }
  }
  return prod;
}

Complex vandermonde_ratio(EvalCtx& ctx, std::span<const Complex> z, const MultiIndex& y) {
  return vandermonde_ratio_shift(ctx, z, y);
}

Complex det_identity_product(EvalCtx& ctx, std::span<const Complex> z, const MultiIndex& y) {
  const int n = static_cast<int>(z.size());
  const int w = weight(y);
  Complex prod = ctx.qpow(w + binom2(w)) * vandermonde_ratio(ctx, z, y);
  if (w % 2 != 0) prod = prod.neg();
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Complex ratio = z[k] / z[j];
      prod *= ctx.poch(ctx.qpow(-y[j]) * ratio, y[k]);
      prod /= ctx.poch_nz(ctx.q() * ratio, y[k]);
    }
  }
  return prod;
}

Real det_identity_check(EvalCtx& ctx, std::span<const Complex> z, const MultiIndex& y) {
  return residual(det_identity_product(ctx, z, y), ctx.one());
}

Complex cn_weight(EvalCtx& ctx, const Complex& a, std::span<const Complex> z,
                  const MultiIndex& y) {
  const int n = static_cast<int>(z.size());
  Complex prod = ctx.one();
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      Complex base = a * z[j] * z[k];
      prod *= ctx.th(ctx.qpow(y[j] + y[k]) * base) / ctx.th_nz(base);
    }
  }
  return prod;
}

Complex dn_coupling(EvalCtx& ctx, std::span<const Complex> z, const MultiIndex& y) {
  const int n = static_cast<int>(z.size());
  Complex prod = ctx.one();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) prod /= ctx.poch_nz(z[j] * z[k], y[j] + y[k]);
  return prod;
}

Complex vandermonde(const PointConfig& cfg, const ThetaTruncation& tr) {
  EvalCtx ctx = make_ctx(cfg, tr);
  return vandermonde(ctx, cfg.z);
}

Complex vandermonde_ratio(const PointConfig& cfg, const MultiIndex& y,
                          const ThetaTruncation& tr) {
  EvalCtx ctx = make_ctx(cfg, tr);
  return vandermonde_ratio(ctx, cfg.z, y);
}

Real det_identity_check(const PointConfig& cfg, const MultiIndex& y, const ThetaTruncation& tr) {
  EvalCtx ctx = make_ctx(cfg, tr);
  return det_identity_check(ctx, cfg.z, y);
}

Complex cn_weight(const PointConfig& cfg, const Complex& a, const MultiIndex& y,
                  const ThetaTruncation& tr) {
  EvalCtx ctx = make_ctx(cfg, tr);
  return cn_weight(ctx, a, cfg.z, y);
}

Complex dn_coupling(const PointConfig& cfg, const MultiIndex& y, const ThetaTruncation& tr) {
  EvalCtx ctx = make_ctx(cfg, tr);
  return dn_coupling(ctx, cfg.z, y);
}

}  // namespace ehsum
