#include "ehsum/verifier.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace ehsum {

Real VerifyOptions::effective_tolerance() const {
  if (tolerance) return *tolerance;
  return Real::two_pow(-(prec / 2), 64);
}

SamplerConfig VerifyOptions::sampler_config(std::uint64_t trial_seed) const {
  SamplerConfig sc;
  sc.seed = trial_seed;
  sc.nome_magnitude = nome_magnitude;
  sc.prec = prec;
  sc.trunc.max_terms = max_terms;
  sc.p_zero = p_zero;
  sc.floor_offset_bits = floor_offset_bits;
  return sc;
}

namespace {

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (threads > count) threads = count;
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads) - 1);
  for (int t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

// Shared trial loop: derives one seed per trial, runs `trial` concurrently,
// and folds the per-trial residuals into a report.  Trial errors are
// recorded and fail the report; they are never skipped.
template <typename Fn>
VerificationReport run_trials(const std::string& tag, const Shape& shape, int trials,
                              const VerifyOptions& opts, Fn&& trial) {
  VerificationReport rep;
  rep.descriptor_id = tag;
  rep.shape = shape;
  rep.trials = trials;
  rep.seed = opts.seed;
  rep.precision_bits = opts.prec;
  rep.p_zero = opts.p_zero;
  rep.tolerance = opts.effective_tolerance();

  const std::string row_tag = tag + "|" + shape.str() + (opts.p_zero ? "|p0" : "");
  std::vector<Real> residuals(static_cast<std::size_t>(trials), Real(kMinPrecBits));
  std::vector<std::string> errors(static_cast<std::size_t>(trials));
  std::exception_ptr exhausted;
  std::mutex exhausted_mu;

  auto t0 = std::chrono::steady_clock::now();
  parallel_for(trials, opts.threads, [&](int i) {
    try {
      residuals[static_cast<std::size_t>(i)] =
          trial(mix_seed(opts.seed, row_tag, static_cast<std::uint64_t>(i)));
    } catch (const SamplingExhausted&) {
      std::lock_guard<std::mutex> lock(exhausted_mu);
      if (!exhausted) exhausted = std::current_exception();
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = std::string("trial ") + std::to_string(i) + ": " + e.what();
    }
  });
  auto t1 = std::chrono::steady_clock::now();
  if (exhausted) std::rethrow_exception(exhausted);

  rep.residuals = std::move(residuals);
  Real worst(kMinPrecBits);
  for (const Real& r : rep.residuals) worst = max(worst, r);
  rep.max_residual = worst;
  for (auto& e : errors)
    if (!e.empty()) rep.errors.push_back(std::move(e));
  rep.passed = rep.errors.empty() && (rep.trials == 0 || rep.max_residual < rep.tolerance);
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

Real eval_residual(const IdentityDescriptor& d, const ParameterSet& ps,
                   const SamplerConfig& sc) {
  auto [lhs, rhs] = evaluate_sides(d, ps, sc.trunc, sampler_floor(sc));
  if (!lhs.is_finite() || !rhs.is_finite())
    throw std::runtime_error(d.id + ": non-finite side");
  return residual(lhs, rhs);
}

const IdentityDescriptor& need(const std::string& id) {
  const IdentityDescriptor* d = find_descriptor(id);
  if (!d) throw std::invalid_argument("unknown descriptor: " + id);
  return *d;
}

}  // namespace

VerificationReport verify(const IdentityDescriptor& d, const Shape& shape,
                          const VerifyOptions& opts) {
  return run_trials(d.id, shape, opts.trials, opts, [&](std::uint64_t seed) {
    SamplerConfig sc = opts.sampler_config(seed);
    ParameterSet ps = sample(d, shape, sc);
    return eval_residual(d, ps, sc);
  });
}

VerificationReport verify(const std::string& descriptor_id, const Shape& shape,
                          const VerifyOptions& opts) {
  return verify(need(descriptor_id), shape, opts);
}

// ---------------------------------------------------------------- cross-checks

VerificationReport cross_check_cr_vs_aaj(const Shape& shape, const VerifyOptions& opts) {
  const IdentityDescriptor& box_form = need("an_jackson_box");
  const IdentityDescriptor& simplex_form = need("an_jackson_classical");
  return run_trials("cross_cr_vs_aaj", shape, opts.trials, opts, [&](std::uint64_t seed) {
    SamplerConfig sc = opts.sampler_config(seed);
    RngStream rng(seed);
    const int n = shape.n, N = shape.N;
    const MultiIndex& m = shape.m;
    Nome p(sc.p_zero ? Complex::zero(sc.prec) : rng.next_on_circle(sc.nome_magnitude, sc.prec));
    Complex q = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    Complex a = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    Complex cc = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    Complex dd = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    std::vector<Complex> z;
    for (int i = 0; i < n; ++i) z.push_back(rng.next_banded(sc.band_lo, sc.band_hi, sc.prec));
    Complex e = a * a * q.pow_int(1 + weight(m) + N) / (cc * dd);

    ParameterSet box_ps{p, q, n, 0, m, {}, {}, {}};
    box_ps.scalars.emplace("a", a);
    box_ps.scalars.emplace("b", q.pow_int(-N));
    box_ps.scalars.emplace("c", cc);
    box_ps.scalars.emplace("d", dd);
    box_ps.scalars.emplace("e", e);
    box_ps.lists.emplace("z", z);

    ParameterSet sim_ps{p, q, n, N, {}, {}, {}, {}};
    sim_ps.scalars.emplace("a", a);
    sim_ps.scalars.emplace("c", cc);
    std::vector<Complex> b;
    for (int j = 0; j < n; ++j) b.push_back(q.pow_int(-m[j]) / z[j]);
    b.push_back(dd);
    b.push_back(e);
    sim_ps.lists.emplace("b", std::move(b));
    sim_ps.lists.emplace("z", z);

    EvalCtx ctx(p, q, sc.trunc, sampler_floor(sc));
    Complex box_l = box_form.lhs(box_ps, ctx), box_r = box_form.rhs(box_ps, ctx);
    Complex sim_l = simplex_form.lhs(sim_ps, ctx), sim_r = simplex_form.rhs(sim_ps, ctx);
    Real r = residual(box_l, sim_l);
    r = max(r, residual(box_r, sim_r));
    r = max(r, residual(box_l, box_r));
    return r;
  });
}

VerificationReport cross_check_cjt_vs_wj(int n, const VerifyOptions& opts) {
  const IdentityDescriptor& cjt = need("cn_jackson_box");
  const IdentityDescriptor& wj = need("warnaar_first");
  Shape shape{n, 1, MultiIndex(static_cast<std::size_t>(n), 1)};
  return run_trials("cross_cjt_vs_wj", shape, opts.trials, opts, [&, n](std::uint64_t seed) {
    SamplerConfig sc = opts.sampler_config(seed);
    RngStream rng(seed);
    Nome p(sc.p_zero ? Complex::zero(sc.prec) : rng.next_on_circle(sc.nome_magnitude, sc.prec));
    Complex q = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    Complex a = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    Complex b = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    Complex cc = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    Complex dd = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    std::vector<Complex> z;
    for (int i = 0; i < n; ++i) z.push_back(rng.next_banded(sc.band_lo, sc.band_hi, sc.prec));
    Complex e = a * a * q.pow_int(1 + n) / (b * cc * dd);

    ParameterSet cjt_ps{p, q, n, 1, MultiIndex(static_cast<std::size_t>(n), 1), {}, {}, {}};
    cjt_ps.scalars.emplace("a", a);
    cjt_ps.scalars.emplace("b", b);
    cjt_ps.scalars.emplace("c", cc);
    cjt_ps.scalars.emplace("d", dd);
    cjt_ps.scalars.emplace("e", e);
    cjt_ps.lists.emplace("z", z);

    ParameterSet wj_ps{p, q.inv(), n, 1, MultiIndex(static_cast<std::size_t>(n), 1), {}, {}, {}};
    wj_ps.scalars.emplace("a", a * q * q);
    wj_ps.scalars.emplace("b", b);
    wj_ps.scalars.emplace("c", cc);
    wj_ps.scalars.emplace("d", dd);
    wj_ps.scalars.emplace("e", e);
    wj_ps.lists.emplace("z", z);

    EvalCtx cjt_ctx(p, q, sc.trunc, sampler_floor(sc));
    EvalCtx wj_ctx(p, wj_ps.q, sc.trunc, sampler_floor(sc));
    Complex cjt_l = cjt.lhs(cjt_ps, cjt_ctx), cjt_r = cjt.rhs(cjt_ps, cjt_ctx);
    Complex wj_l = wj.lhs(wj_ps, wj_ctx), wj_r = wj.rhs(wj_ps, wj_ctx);
    Real r = residual(cjt_l, wj_l);
    r = max(r, residual(cjt_r, wj_r));
    r = max(r, residual(cjt_l, cjt_r));
    return r;
  });
}

VerificationReport check_reparametrization(int n, const MultiIndex& m,
                                           const VerifyOptions& opts) {
  Shape shape{n, 0, m};
  return run_trials("reparam_products", shape, opts.trials, opts, [&, n, m](std::uint64_t seed) {
    SamplerConfig sc = opts.sampler_config(seed);
    RngStream rng(seed);
    Nome p(sc.p_zero ? Complex::zero(sc.prec) : rng.next_on_circle(sc.nome_magnitude, sc.prec));
    Complex q = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    Complex a = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    std::vector<Complex> z;
    for (int i = 0; i < n; ++i) z.push_back(rng.next_banded(sc.band_lo, sc.band_hi, sc.prec));
    EvalCtx c(p, q, sc.trunc, sampler_floor(sc));

    // Collapsed configuration w: block j carries z_j, qz_j, ..., q^{m_j-1} z_j.
    const int W = weight(m);
    std::vector<Complex> w;
    w.reserve(static_cast<std::size_t>(W));
    for (int j = 0; j < n; ++j) {
      Complex cur = z[j];
      for (int t = 0; t < m[j]; ++t) {
        w.push_back(cur);
        cur *= q;
      }
    }

    Real worst(kMinPrecBits);

    // Product collapse of the unit-shift coupling, x-independent.
    {
      Complex lhs3 = c.one();
      for (int j = 0; j < W; ++j)
        for (int k = j; k < W; ++k) lhs3 *= c.th(c.q() * a * w[j] * w[k]);
      for (int j = 0; j < W; ++j)
        for (int k = j + 1; k < W; ++k) lhs3 /= c.th_nz(c.qpow(2) * a * w[j] * w[k]);
      Complex rhs3 = c.one();
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) rhs3 *= c.poch(c.q() * a * z[j] * z[k], m[k]);
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          rhs3 /= c.poch_nz(c.q() * a * z[j] * z[k], m[j] + m[k]);
      worst = max(worst, residual(lhs3, rhs3));
    }

    Box xs(m);
    MultiIndex x;
    while (xs.next(x)) {
      // Block indicator vector y: x_j ones followed by zeros in block j.
      std::vector<int> y;
      y.reserve(static_cast<std::size_t>(W));
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < m[j]; ++t) y.push_back(t < x[j] ? 1 : 0);

      // Coupling collapse.
      Complex lhs1 = c.one();
      for (int j = 0; j < W; ++j)
        for (int k = j + 1; k < W; ++k)
          lhs1 *= c.th(c.qpow(2 - y[j] - y[k]) * a * w[j] * w[k]) /
                  c.th_nz(c.qpow(2) * a * w[j] * w[k]);
      Complex rhs1 = c.one();
      for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k)
          rhs1 *= c.th(c.qpow(x[j] + x[k]) * a * z[j] * z[k]) / c.th_nz(a * z[j] * z[k]);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          rhs1 *= c.poch(a * z[j] * z[k], x[k]) /
                  c.poch_nz(c.qpow(1 + m[j]) * a * z[j] * z[k], x[k]);
      worst = max(worst, residual(lhs1, rhs1));

      // Vandermonde collapse.
      std::vector<int> neg_y(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) neg_y[i] = -y[i];
      Complex lhs2 = vandermonde_ratio_shift(c, w, neg_y);
      const int xw = weight(x);
      Complex rhs2 = c.qpow(xw) * vandermonde_ratio(c, z, x);
      if (xw % 2 != 0) rhs2 = rhs2.neg();
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          rhs2 *= c.poch(c.qpow(-m[j]) * z[k] / z[j], x[k]) /
                  c.poch_nz(c.q() * z[k] / z[j], x[k]);
      worst = max(worst, residual(lhs2, rhs2));
    }
    return worst;
  });
}

VerificationReport check_epf_reduces_to_ww(int n, const VerifyOptions& opts) {
  const IdentityDescriptor& ww = need("pf_ww");
  const IdentityDescriptor& epf = need("pf_epf");
  Shape shape{n, 0, {}};
  return run_trials("epf_reduces_to_ww", shape, opts.trials, opts, [&, n](std::uint64_t seed) {
    SamplerConfig sc = opts.sampler_config(seed);
    RngStream rng(seed);
    Nome p(rng.next_on_circle(sc.nome_magnitude, sc.prec));
    Complex q = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);
    std::vector<Complex> a, b;
    for (int i = 0; i < n; ++i) a.push_back(rng.next_banded(sc.band_lo, sc.band_hi, sc.prec));
    for (int i = 0; i + 1 < n; ++i) b.push_back(rng.next_banded(sc.band_lo, sc.band_hi, sc.prec));
    Complex prod = Complex::one(sc.prec);
    for (const Complex& x : a) prod *= x;
    for (const Complex& x : b) prod /= x;
    b.push_back(prod);  // balances a_1...a_n = b_1...b_n
    Complex t = rng.next_banded(sc.band_lo, sc.band_hi, sc.prec);

    ParameterSet ww_ps{p, q, n, 0, {}, {}, {}, {}};
    ww_ps.lists.emplace("a", a);
    ww_ps.lists.emplace("b", b);

    ParameterSet epf_ps{p, q, n, 0, {}, {}, {}, {}};
    epf_ps.scalars.emplace("t", t);
    std::vector<Complex> b_ext = b;
    b_ext.push_back(t);  // t = b_{n+1}
    epf_ps.lists.emplace("a", a);
    epf_ps.lists.emplace("b", std::move(b_ext));

    EvalCtx ctx(p, q, sc.trunc, sampler_floor(sc));
    Complex epf_l = epf.lhs(epf_ps, ctx);
    Complex epf_r = epf.rhs(epf_ps, ctx);
    Complex ww_l = ww.lhs(ww_ps, ctx);
    Complex ww_r = ww.rhs(ww_ps, ctx);
    // With t = b_{n+1} the n+1-point expansion collapses onto the balanced
    // zero sum: its full left side minus the first n-1 terms is the last
    // term, and its right side carries the vanishing factor theta(t/t).
    Real r = residual(epf_l - ww_l, ww_r.neg());
    r = max(r, residual(ctx.one() + epf_r, ctx.one()));
    return r;
  });
}

VerificationReport check_cn_an_dg_symmetry(const Shape& shape, const VerifyOptions& opts) {
  const IdentityDescriptor& d = need("bailey_cn_an");
  return run_trials("bailey_cn_an_dg_symmetry", shape, opts.trials, opts,
                    [&](std::uint64_t seed) {
                      SamplerConfig sc = opts.sampler_config(seed);
                      ParameterSet ps = sample(d, shape, sc);
                      ParameterSet swapped = ps;
                      swapped.scalars.at("d") = ps.s("g");
                      swapped.scalars.at("g") = ps.s("d");
                      EvalCtx c1(ps.p, ps.q, sc.trunc, sampler_floor(sc));
                      EvalCtx c2(ps.p, ps.q, sc.trunc, sampler_floor(sc));
                      Real r = residual(d.lhs(ps, c1), d.lhs(swapped, c2));
                      r = max(r, residual(d.rhs(ps, c1), d.rhs(swapped, c2)));
                      return r;
                    });
}

VerificationReport check_z_gauge(const std::string& descriptor_id, const Shape& shape,
                                 const VerifyOptions& opts) {
  const IdentityDescriptor& d = need(descriptor_id);
  return run_trials(descriptor_id + "_z_gauge", shape, opts.trials, opts,
                    [&](std::uint64_t seed) {
                      SamplerConfig sc = opts.sampler_config(seed);
                      ParameterSet ps = sample(d, shape, sc);
                      RngStream rng(mix_seed(seed, "gauge", 0));
                      Complex u = rng.next_on_circle(1.0, sc.prec);
                      for (Complex& zk : ps.lists.at("z")) zk *= u;
                      if (d.solve) d.solve(ps);  // recompute the solved parameter
                      return eval_residual(d, ps, sc);
                    });
}

// ---------------------------------------------------------------- suites

namespace {

struct SuiteRow {
  enum class Kind { Descriptor, CrAaj, CjtWj, Reparam, EpfWw, DgSym, ZGauge };
  Kind kind = Kind::Descriptor;
  std::string id;
  Shape shape;
  int trials = 50;
  bool p_zero = false;
};

std::vector<Shape> simplex_shapes() {
  std::vector<Shape> v;
  for (int n = 1; n <= 3; ++n)
    for (int N = 0; N <= 3; ++N) v.push_back({n, N, {}});
  return v;
}

// Every bound vector with entries <= cap at ranks 1..max_n.
std::vector<Shape> box_shapes(int max_n, int cap) {
  std::vector<Shape> v;
  for (int n = 1; n <= max_n; ++n) {
    Box all(MultiIndex(static_cast<std::size_t>(n), cap));
    MultiIndex m;
    while (all.next(m)) v.push_back({n, 0, m});
  }
  return v;
}

void add_descriptor_rows(std::vector<SuiteRow>& rows, const std::string& id,
                         const std::vector<Shape>& shapes, int trials, bool with_p_zero) {
  for (const Shape& s : shapes) rows.push_back({SuiteRow::Kind::Descriptor, id, s, trials, false});
  if (with_p_zero && need(id).forces_p_zero == false)
    for (const Shape& s : shapes) rows.push_back({SuiteRow::Kind::Descriptor, id, s, trials, true});
}

std::vector<SuiteRow> primitives_rows() {
  std::vector<SuiteRow> rows;
  for (const char* id : {"ti", "tqp", "addition_ra", "ap", "ep", "ip", "qp"})
    rows.push_back({SuiteRow::Kind::Descriptor, id, Shape{1, 0, {}}, 100, false});
  rows.push_back({SuiteRow::Kind::Descriptor, "det_identity_di", Shape{2, 0, {2, 2}}, 100, false});
  rows.push_back({SuiteRow::Kind::Descriptor, "det_identity_di", Shape{3, 0, {1, 2, 3}}, 100, false});
  return rows;
}

std::vector<SuiteRow> partial_fraction_rows() {
  std::vector<SuiteRow> rows;
  for (const char* id : {"pf_rational", "pf_ww", "pf_epf", "pf_epa", "pf_dn", "pf_dn_alt"})
    for (int n = 2; n <= 5; ++n)
      rows.push_back({SuiteRow::Kind::Descriptor, id, Shape{n, 0, {}}, 100, false});
  return rows;
}

std::vector<SuiteRow> jackson_rows() {
  std::vector<SuiteRow> rows;
  const auto simplex = simplex_shapes();
  const auto boxes = box_shapes(3, 2);
  std::vector<Shape> warnaar;
  for (int n = 1; n <= 3; ++n)
    for (int N = 0; N <= 2; ++N) warnaar.push_back({n, N, {}});

  add_descriptor_rows(rows, "milne_ft", simplex, 50, false);
  add_descriptor_rows(rows, "an_jackson_simplex", simplex, 50, true);
  add_descriptor_rows(rows, "an_jackson_classical", simplex, 50, true);
  add_descriptor_rows(rows, "dn_jackson_simplex", simplex, 50, true);
  add_descriptor_rows(rows, "dn_jackson_classical", simplex, 50, true);
  add_descriptor_rows(rows, "an_jackson_box", boxes, 50, true);
  add_descriptor_rows(rows, "dn_jackson_box", boxes, 50, true);
  add_descriptor_rows(rows, "dn_jackson_box_reversed", boxes, 50, true);
  add_descriptor_rows(rows, "cn_jackson_box", boxes, 50, true);
  add_descriptor_rows(rows, "warnaar_first", warnaar, 50, true);
  return rows;
}

std::vector<SuiteRow> bailey_rows() {
  std::vector<SuiteRow> rows;
  const auto boxes = box_shapes(2, 2);
  std::vector<Shape> simplex;
  for (int n = 1; n <= 2; ++n)
    for (int N = 0; N <= 2; ++N) simplex.push_back({n, N, {}});
  add_descriptor_rows(rows, "bailey_an_box", boxes, 30, false);
  add_descriptor_rows(rows, "bailey_an_simplex", simplex, 30, false);
  add_descriptor_rows(rows, "bailey_cn_an", boxes, 30, false);
  add_descriptor_rows(rows, "bailey_dn", boxes, 30, false);
  add_descriptor_rows(rows, "bailey_dn_an", boxes, 30, false);
  return rows;
}

std::vector<SuiteRow> cross_check_rows() {
  std::vector<SuiteRow> rows;
  rows.push_back({SuiteRow::Kind::CrAaj, "", Shape{1, 2, {2}}, 20, false});
  rows.push_back({SuiteRow::Kind::CrAaj, "", Shape{2, 2, {1, 2}}, 20, false});
  rows.push_back({SuiteRow::Kind::CrAaj, "", Shape{2, 3, {2, 2}}, 20, false});
  rows.push_back({SuiteRow::Kind::CjtWj, "", Shape{1, 1, {1}}, 20, false});
  rows.push_back({SuiteRow::Kind::CjtWj, "", Shape{2, 1, {1, 1}}, 20, false});
  rows.push_back({SuiteRow::Kind::CjtWj, "", Shape{2, 1, {1, 1}}, 20, true});
  rows.push_back({SuiteRow::Kind::Reparam, "", Shape{1, 0, {2}}, 10, false});
  rows.push_back({SuiteRow::Kind::Reparam, "", Shape{2, 0, {1, 2}}, 10, false});
  rows.push_back({SuiteRow::Kind::Reparam, "", Shape{2, 0, {2, 2}}, 10, false});
  rows.push_back({SuiteRow::Kind::EpfWw, "", Shape{2, 0, {}}, 20, false});
  rows.push_back({SuiteRow::Kind::EpfWw, "", Shape{3, 0, {}}, 20, false});
  rows.push_back({SuiteRow::Kind::DgSym, "", Shape{1, 0, {2}}, 20, false});
  rows.push_back({SuiteRow::Kind::DgSym, "", Shape{2, 0, {1, 1}}, 20, false});
  rows.push_back({SuiteRow::Kind::ZGauge, "bailey_an_box", Shape{2, 0, {1, 1}}, 10, false});
  rows.push_back({SuiteRow::Kind::ZGauge, "bailey_an_simplex", Shape{2, 1, {}}, 10, false});
  return rows;
}

std::vector<SuiteRow> suite_rows(const std::string& name) {
  if (name == "primitives") return primitives_rows();
  if (name == "partial-fractions") return partial_fraction_rows();
  if (name == "jackson") return jackson_rows();
  if (name == "bailey") return bailey_rows();
  if (name == "cross-checks") return cross_check_rows();
  if (name == "all") {
    std::vector<SuiteRow> rows;
    for (const char* part : {"primitives", "partial-fractions", "jackson", "bailey",
                             "cross-checks"}) {
      auto sub = suite_rows(part);
      rows.insert(rows.end(), sub.begin(), sub.end());
    }
    return rows;
  }
  throw UnknownSuite("unknown suite: " + name +
                     " (expected primitives, partial-fractions, jackson, bailey, "
                     "cross-checks, all)");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"primitives", "partial-fractions", "jackson", "bailey", "cross-checks", "all"};
}

std::vector<VerificationReport> run_suite(const std::string& name, const VerifyOptions& opts) {
  std::vector<VerificationReport> reports;
  for (const SuiteRow& row : suite_rows(name)) {
    VerifyOptions o = opts;
    o.trials = row.trials;
    if (opts.trial_cap > 0 && o.trials > opts.trial_cap) o.trials = opts.trial_cap;
    o.p_zero = opts.p_zero || row.p_zero;
    switch (row.kind) {
      case SuiteRow::Kind::Descriptor:
        reports.push_back(verify(row.id, row.shape, o));
        break;
      case SuiteRow::Kind::CrAaj:
        reports.push_back(cross_check_cr_vs_aaj(row.shape, o));
        break;
      case SuiteRow::Kind::CjtWj:
        reports.push_back(cross_check_cjt_vs_wj(row.shape.n, o));
        break;
      case SuiteRow::Kind::Reparam:
        reports.push_back(check_reparametrization(row.shape.n, row.shape.m, o));
        break;
      case SuiteRow::Kind::EpfWw:
        reports.push_back(check_epf_reduces_to_ww(row.shape.n, o));
        break;
      case SuiteRow::Kind::DgSym:
        reports.push_back(check_cn_an_dg_symmetry(row.shape, o));
        break;
      case SuiteRow::Kind::ZGauge:
        reports.push_back(check_z_gauge(row.id, row.shape, o));
        break;
    }
  }
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace ehsum
