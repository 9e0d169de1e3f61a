#include <doctest.h>

#include <set>

#include "ehsum/sampler.hpp"

using namespace ehsum;

namespace {

Real tol_bits(long bits) { return Real::two_pow(-bits, 64); }

Shape small_shape(const IdentityDescriptor& d, int n, int size) {
  Shape s;
  s.n = std::max(n, d.min_rank);
  s.N = size;
  if (d.domain == DomainKind::Box || d.id == "det_identity_di")
    s.m.assign(static_cast<std::size_t>(s.n), size);
  return s;
}

Real one_draw_residual(const IdentityDescriptor& d, const Shape& shape, std::uint64_t seed,
                       bool p_zero = false) {
  SamplerConfig sc;
  sc.seed = seed;
  sc.p_zero = p_zero;
  ParameterSet ps = sample(d, shape, sc);
  EvalCtx ctx(ps.p, ps.q, sc.trunc, sampler_floor(sc));
  return residual(d.lhs(ps, ctx), d.rhs(ps, ctx));
}

}  // namespace

TEST_CASE("catalog carries the published descriptor ids") {
  std::vector<std::string> want = {
      "pf_rational",        "pf_ww",
      "pf_epf",             "pf_epa",
      "pf_dn",              "pf_dn_alt",
      "milne_ft",           "an_jackson_simplex",
      "an_jackson_classical", "an_jackson_box",
      "dn_jackson_simplex", "dn_jackson_classical",
      "dn_jackson_box",     "dn_jackson_box_reversed",
      "cn_jackson_box",     "warnaar_first",
      "bailey_an_box",      "bailey_an_simplex",
      "bailey_cn_an",       "bailey_dn",
      "bailey_dn_an",       "addition_ra",
      "det_identity_di"};
  CHECK(catalog_ids() == want);
  for (const auto& id : want) CHECK(find_descriptor(id) != nullptr);
  CHECK(find_descriptor("no_such_identity") == nullptr);
  CHECK(primitive_check_ids() ==
        std::vector<std::string>{"ti", "tqp", "ap", "ep", "ip", "qp"});
}

TEST_CASE("zero-size domains give 1 on both sides") {
  for (const auto& d : catalog()) {
    if (d.domain == DomainKind::FiniteList && d.id != "det_identity_di") continue;
    Shape s = small_shape(d, 1, 0);
    SamplerConfig sc;
    sc.seed = 99;
    ParameterSet ps = sample(d, s, sc);
    EvalCtx ctx(ps.p, ps.q, sc.trunc, sampler_floor(sc));
    INFO(d.id);
    CHECK(residual(d.lhs(ps, ctx), ctx.one()) < tol_bits(128));
    CHECK(residual(d.rhs(ps, ctx), ctx.one()) < tol_bits(128));
  }
}

TEST_CASE("every catalog identity holds on random constrained draws") {
  for (const auto& d : catalog()) {
    for (int n = d.min_rank; n <= d.min_rank + 1; ++n) {
      Shape s = small_shape(d, n, 2);
      for (std::uint64_t seed : {1001u, 1002u, 1003u}) {
        INFO(d.id << " n=" << s.n << " seed=" << seed);
        CHECK(one_draw_residual(d, s, seed) < tol_bits(128));
      }
    }
  }
}

TEST_CASE("every catalog identity holds in the q-series specialization") {
  for (const auto& d : catalog()) {
    if (d.id == "tqp" || d.id == "qp") continue;
    Shape s = small_shape(d, d.min_rank + 1, 2);
    INFO(d.id);
    CHECK(one_draw_residual(d, s, 2024, /*p_zero=*/true) < tol_bits(128));
  }
}

TEST_CASE("box identities also hold at bound 3") {
  for (const char* id : {"an_jackson_box", "cn_jackson_box"}) {
    const IdentityDescriptor& d = *find_descriptor(id);
    INFO(id);
    CHECK(one_draw_residual(d, Shape{2, 0, {3, 3}}, 71) < tol_bits(128));
  }
}

TEST_CASE("rank-one single-term A_n sum telescopes exactly") {
  const IdentityDescriptor& d = *find_descriptor("an_jackson_simplex");
  Shape s{1, 3, {}};
  CHECK(one_draw_residual(d, s, 5) < tol_bits(200));
}

TEST_CASE("rational partial fraction at n = 1 is plain algebra") {
  const IdentityDescriptor& d = *find_descriptor("pf_rational");
  SamplerConfig sc;
  sc.seed = 17;
  ParameterSet ps = sample(d, Shape{1, 0, {}}, sc);
  EvalCtx ctx(ps.p, ps.q, sc.trunc, sampler_floor(sc));
  Complex want = ps.list("b")[0] / ps.list("a")[0] - ctx.one();
  CHECK(residual(d.lhs(ps, ctx), want) < tol_bits(240));
}

TEST_CASE("balanced zero sum vanishes termwise when b = a pointwise") {
  const IdentityDescriptor& d = *find_descriptor("pf_ww");
  SamplerConfig sc;
  sc.seed = 23;
  ParameterSet ps = sample(d, Shape{2, 0, {}}, sc);
  ps.lists.at("b") = ps.list("a");  // theta(a_k/b_k) = theta(1) = 0
  EvalCtx ctx(ps.p, ps.q, sc.trunc, sampler_floor(sc));
  CHECK(d.lhs(ps, ctx).is_zero());
  CHECK(d.rhs(ps, ctx).is_zero());
}

TEST_CASE("reversed-bound right-hand side rewrite agrees") {
  // The reversed box sum's closed form has an equivalent shape obtained by
  // Pochhammer inversion:
  // prod_k (a q^{1+|m|-m_k}/(b c z_k))_{m_k} / (aq/(bce))_{|m|}
  //   = e^{|m|} q^{sum_{j<k} m_j m_k} / prod z_k^{m_k}
  //     * prod_k (a q z_k/(d e))_{m_k} / (aq/d)_{|m|}.
  const IdentityDescriptor& d = *find_descriptor("dn_jackson_box_reversed");
  SamplerConfig sc;
  sc.seed = 31;
  Shape s{2, 0, {2, 1}};
  ParameterSet ps = sample(d, s, sc);
  EvalCtx c(ps.p, ps.q, sc.trunc, sampler_floor(sc));
  const auto& z = ps.list("z");
  const Complex &a = ps.s("a"), &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d"),
                &e = ps.s("e");
  Complex aq = a * c.q();
  const int w = weight(ps.m);
  Complex left = c.one();
  for (int k = 0; k < ps.n; ++k)
    left *= c.poch(c.qpow(1 + w - ps.m[k]) * a / (b * cc * z[k]), ps.m[k]);
  left /= c.poch(aq / (b * cc * e), w);
  long cross = 0;
  for (int j = 0; j < ps.n; ++j)
    for (int k = j + 1; k < ps.n; ++k) cross += static_cast<long>(ps.m[j]) * ps.m[k];
  Complex right = e.pow_int(w) * c.qpow(cross);
  for (int k = 0; k < ps.n; ++k) {
    right /= z[k].pow_int(ps.m[k]);
    right *= c.poch(aq * z[k] / (dd * e), ps.m[k]);
  }
  right /= c.poch(aq / dd, w);
  CHECK(residual(left, right) < tol_bits(128));
}

TEST_CASE("summation is order-independent and hits each lattice point once") {
  const IdentityDescriptor& d = *find_descriptor("an_jackson_box");
  SamplerConfig sc;
  sc.seed = 41;
  Shape s{2, 0, {2, 2}};
  ParameterSet ps = sample(d, s, sc);
  EvalCtx ctx(ps.p, ps.q, sc.trunc, sampler_floor(sc));
  Complex forward = d.lhs(ps, ctx);

  // Accumulate the same terms from a set, in reverse order, rebuilding the
  // summand through the public right-hand machinery of the identity: every
  // lattice point must appear exactly once.
  Box stream(ps.m);
  MultiIndex y;
  std::set<MultiIndex> points;
  while (stream.next(y)) CHECK(points.insert(y).second);
  CHECK(points.size() == box_count(ps.m));

  Complex reversed = Complex::zero(ps.prec());
  const auto& z = ps.list("z");
  const Complex &a = ps.s("a"), &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d"),
                &e = ps.s("e");
  Complex aq = a * ctx.q();
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    const MultiIndex& x = *it;
    const int w = weight(x);
    Complex t = vandermonde_ratio(ctx, z, x) * ctx.qpow(w);
    for (int k = 0; k < ps.n; ++k)
      t *= ctx.th(ctx.qpow(x[k] + w) * a * z[k]) / ctx.th_nz(a * z[k]);
    t *= ctx.poch(b, w) * ctx.poch(cc, w) /
         (ctx.poch_nz(aq / dd, w) * ctx.poch_nz(aq / e, w));
    for (int j = 0; j < ps.n; ++j)
      t *= ctx.poch(a * z[j], w) / ctx.poch_nz(ctx.qpow(1 + ps.m[j]) * a * z[j], w);
    for (int k = 0; k < ps.n; ++k)
      t *= ctx.poch(dd * z[k], x[k]) * ctx.poch(e * z[k], x[k]) /
           (ctx.poch_nz(aq * z[k] / b, x[k]) * ctx.poch_nz(aq * z[k] / cc, x[k]));
    for (int j = 0; j < ps.n; ++j)
      for (int k = 0; k < ps.n; ++k)
        t *= ctx.poch(ctx.qpow(-ps.m[j]) * z[k] / z[j], x[k]) /
             ctx.poch_nz(ctx.q() * z[k] / z[j], x[k]);
    reversed += t;
  }
  CHECK(residual(forward, reversed) < tol_bits(128));
}

TEST_CASE("unit-modulus rescaling of z is a gauge freedom") {
  for (const char* id : {"bailey_an_box", "bailey_an_simplex"}) {
    const IdentityDescriptor& d = *find_descriptor(id);
    Shape s = small_shape(d, 2, 1);
    SamplerConfig sc;
    sc.seed = 47;
    ParameterSet ps = sample(d, s, sc);
    RngStream rng(321);
    Complex u = rng.next_on_circle(1.0, 256);
    for (Complex& zk : ps.lists.at("z")) zk *= u;
    d.solve(ps);
    EvalCtx ctx(ps.p, ps.q, sc.trunc, sampler_floor(sc));
    INFO(id);
    CHECK(residual(d.lhs(ps, ctx), d.rhs(ps, ctx)) < tol_bits(128));
  }
}

TEST_CASE("primitive property checks hold on random draws") {
  for (const auto& d : primitive_checks()) {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
      INFO(d.id << " seed=" << seed);
      CHECK(one_draw_residual(d, Shape{1, 0, {}}, seed) < tol_bits(128));
    }
  }
}
