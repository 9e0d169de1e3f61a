#include "ehsum/sampler.hpp"

#include <string>

namespace ehsum {

Real sampler_floor(const SamplerConfig& cfg) {
  return Real::two_pow(-cfg.prec + cfg.floor_offset_bits, 64);
}

namespace {

Shape normalized_shape(const IdentityDescriptor& d, Shape shape) {
  if (shape.n < d.min_rank)
    throw std::invalid_argument(d.id + " needs rank >= " + std::to_string(d.min_rank));
  // Box-type domains accept a scalar size as a uniform bound vector; the
  // identity with a common bound in every direction always comes in via N.
  if (shape.m.empty() &&
      (d.domain == DomainKind::Box || d.id == "det_identity_di"))
    shape.m.assign(static_cast<std::size_t>(shape.n), shape.N);
  if (!shape.m.empty() && static_cast<int>(shape.m.size()) != shape.n)
    throw std::invalid_argument("bound vector length does not match rank");
  return shape;
}

}  // namespace

ParameterSet sample(const IdentityDescriptor& d, const Shape& shape_in, const SamplerConfig& cfg) {
  const Shape shape = normalized_shape(d, shape_in);
  const bool p_zero = cfg.p_zero || d.forces_p_zero;
  RngStream rng(cfg.seed);
  const Real floor = sampler_floor(cfg);
  ThetaTruncation tr = cfg.trunc;

  for (int attempt = 0; attempt < cfg.max_resamples; ++attempt) {
    ParameterSet ps{Nome(p_zero ? Complex::zero(cfg.prec)
                                : rng.next_on_circle(cfg.nome_magnitude, cfg.prec)),
                    rng.next_banded(cfg.band_lo, cfg.band_hi, cfg.prec),
                    shape.n,
                    shape.N,
                    shape.m,
                    {},
                    {},
                    {}};
    for (const std::string& name : d.draw_scalars)
      ps.scalars.emplace(name, rng.next_banded(cfg.band_lo, cfg.band_hi, cfg.prec));
    for (const auto& [name, offset] : d.draw_lists) {
      std::vector<Complex> v;
      const int len = shape.n + offset;
      v.reserve(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i)
        v.push_back(rng.next_banded(cfg.band_lo, cfg.band_hi, cfg.prec));
      ps.lists.emplace(name, std::move(v));
    }
    if (d.draw_extra) d.draw_extra(ps, rng);
    if (d.solve) d.solve(ps);

    if (!d.denom_args) return ps;
    std::vector<Complex> args;
    d.denom_args(ps, args);
    EvalCtx ctx(ps.p, ps.q, tr, floor);
    bool ok = true;
    for (const Complex& x : args) {
      if (!(ctx.th(x).abs() >= floor)) {
        ok = false;
        break;
      }
    }
    if (ok) return ps;
  }
  throw SamplingExhausted(d.id + ": no admissible draw in " +
                          std::to_string(cfg.max_resamples) + " attempts");
}

ParameterSet degenerate_to_q(ParameterSet ps) {
  long prec = ps.p.prec();
  ps.p = Nome(Complex::zero(prec));
  return ps;
}

}  // namespace ehsum
