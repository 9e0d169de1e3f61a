#include <doctest.h>

#include "ehsum/sampler.hpp"

using namespace ehsum;

TEST_CASE("identical seeds give bit-identical parameter sets") {
  const IdentityDescriptor& d = *find_descriptor("cn_jackson_box");
  Shape s{2, 0, {2, 1}};
  SamplerConfig sc;
  sc.seed = 4242;
  ParameterSet a = sample(d, s, sc);
  ParameterSet b = sample(d, s, sc);
  CHECK(identical(a.p.value(), b.p.value()));
  CHECK(identical(a.q, b.q));
  for (const auto& [name, v] : a.scalars) CHECK(identical(v, b.scalars.at(name)));
  for (const auto& [name, v] : a.lists)
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(identical(v[i], b.lists.at(name)[i]));
  SamplerConfig sc2 = sc;
  sc2.seed = 4243;
  ParameterSet c = sample(d, s, sc2);
  CHECK_FALSE(identical(a.q, c.q));
}

TEST_CASE("solved parameters satisfy the balancing relation exactly") {
  SamplerConfig sc;
  sc.seed = 7;
  for (const char* id : {"an_jackson_simplex", "an_jackson_box", "cn_jackson_box",
                         "bailey_an_box", "bailey_dn", "pf_ww", "pf_epf"}) {
    const IdentityDescriptor& d = *find_descriptor(id);
    Shape s;
    s.n = std::max(2, d.min_rank);
    s.N = 2;
    if (d.domain == DomainKind::Box) s.m.assign(static_cast<std::size_t>(s.n), 2);
    ParameterSet ps = sample(d, s, sc);
    INFO(id);
    REQUIRE(d.constraint_gap);
    CHECK(d.constraint_gap(ps) < Real::two_pow(-sc.prec + 8, 64));
  }
}

TEST_CASE("constraint-by-construction for the simplex A_n sum") {
  const IdentityDescriptor& d = *find_descriptor("an_jackson_simplex");
  SamplerConfig sc;
  sc.seed = 99;
  ParameterSet ps = sample(d, Shape{2, 1, {}}, sc);
  Complex want = Complex::one(sc.prec);
  for (const Complex& x : ps.list("a")) want *= x;
  for (const Complex& x : ps.list("z")) want *= x;
  CHECK(identical(ps.s("b"), want));
}

TEST_CASE("hard shapes sample without exhaustion at defaults") {
  const IdentityDescriptor& d = *find_descriptor("cn_jackson_box");
  Shape s{3, 0, {2, 2, 2}};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SamplerConfig sc;
    sc.seed = seed;
    CHECK_NOTHROW(sample(d, s, sc));
  }
}

TEST_CASE("nome degeneration") {
  const IdentityDescriptor& d = *find_descriptor("an_jackson_box");
  SamplerConfig sc;
  sc.seed = 11;
  ParameterSet ps = sample(d, Shape{2, 0, {1, 1}}, sc);
  CHECK_FALSE(ps.p.is_zero());
  ParameterSet qs = degenerate_to_q(ps);
  CHECK(qs.p.is_zero());
  CHECK(identical(qs.q, ps.q));
  CHECK(identical(qs.s("e"), ps.s("e")));
  ParameterSet again = degenerate_to_q(qs);
  CHECK(again.p.is_zero());
  // The balancing relation is nome-free, so it still holds.
  CHECK(d.constraint_gap(qs) < Real::two_pow(-sc.prec + 8, 64));
  // Drawing directly at p = 0 also works and evaluates cleanly.
  SamplerConfig sz = sc;
  sz.p_zero = true;
  ParameterSet pz = sample(d, Shape{2, 0, {1, 1}}, sz);
  CHECK(pz.p.is_zero());
}

TEST_CASE("rank below the descriptor minimum is rejected") {
  const IdentityDescriptor& d = *find_descriptor("pf_dn_alt");
  SamplerConfig sc;
  CHECK_THROWS_AS(sample(d, Shape{1, 0, {}}, sc), std::invalid_argument);
}

TEST_CASE("an unreachable floor exhausts the sampler") {
  const IdentityDescriptor& d = *find_descriptor("pf_ww");
  SamplerConfig sc;
  sc.floor_offset_bits = 300;  // floor 2^{44} > any theta magnitude here
  sc.max_resamples = 5;
  CHECK_THROWS_AS(sample(d, Shape{3, 0, {}}, sc), SamplingExhausted);
}
