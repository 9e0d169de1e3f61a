#include "ehsum/catalog.hpp"

#include <algorithm>

#include "ehsum/rng.hpp"

namespace ehsum {

const char* family_name(Family f) {
  switch (f) {
    case Family::PartialFraction: return "partial-fraction";
    case Family::An: return "A_n";
    case Family::Cn: return "C_n";
    case Family::Dn: return "D_n";
    case Family::Bailey: return "Bailey";
    case Family::Primitive: return "primitive";
  }
  return "?";
}

const char* domain_name(DomainKind d) {
  switch (d) {
    case DomainKind::SimplexExact: return "simplex_exact";
    case DomainKind::SimplexLe: return "simplex_le";
    case DomainKind::Box: return "box";
    case DomainKind::FiniteList: return "finite_list";
  }
  return "?";
}

namespace {

using VC = std::vector<Complex>;
using PS = ParameterSet;

// ------------------------------------------------------------------ shared
// summand pieces

// prod_k theta(alpha z_k q^{y_k+|y|}) / theta(alpha z_k)
Complex vwp_weight(EvalCtx& c, const Complex& alpha, const VC& z, const MultiIndex& y) {
  const int w = weight(y);
  Complex prod = c.one();
  for (std::size_t k = 0; k < z.size(); ++k)
    prod *= c.th(c.qpow(y[k] + w) * alpha * z[k]) / c.th_nz(alpha * z[k]);
  return prod;
}

template <typename Term>
Complex sum_simplex_exact(EvalCtx& c, int n, int N, Term&& term) {
  Complex acc = Complex::zero(c.prec());
  SimplexExact s(n, N);
  MultiIndex y;
  while (s.next(y)) acc += term(y);
  return acc;
}

template <typename Term>
Complex sum_simplex_le(EvalCtx& c, int n, int N, Term&& term) {
  Complex acc = Complex::zero(c.prec());
  SimplexLe s(n, N);
  MultiIndex y;
  while (s.next(y)) acc += term(y);
  return acc;
}

template <typename Term>
Complex sum_box(EvalCtx& c, const MultiIndex& m, Term&& term) {
  Complex acc = Complex::zero(c.prec());
  Box s(m);
  MultiIndex y;
  while (s.next(y)) acc += term(y);
  return acc;
}

// Very-well-poised A_n sum on a box: for weight-level numerator bases
// NW, weight-level denominator bases DW, per-index multipliers NK / DK,
//
//   sum_{0<=y<=m}  Delta(zq^y)/Delta(z)
//     * prod_k theta(alpha z_k q^{y_k+|y|})/theta(alpha z_k)
//     * prod_{s in NW} (s)_{|y|} / prod_{s in DW} (s)_{|y|}
//     * prod_j (alpha z_j)_{|y|} / (alpha q^{1+m_j} z_j)_{|y|}
//     * q^{|y|}
//     * prod_k prod_{u in NK} (u z_k)_{y_k} / prod_{v in DK} (v z_k)_{y_k}
//     * prod_{j,k} (q^{-m_j} z_k/z_j)_{y_k} / (q z_k/z_j)_{y_k}.
Complex an_box_vwp_sum(EvalCtx& c, const VC& z, const MultiIndex& m, const Complex& alpha,
                       const VC& nw, const VC& dw, const VC& nk, const VC& dk) {
  const int n = static_cast<int>(z.size());
  return sum_box(c, m, [&](const MultiIndex& y) {
    const int w = weight(y);
    Complex t = vandermonde_ratio(c, z, y) * vwp_weight(c, alpha, z, y) * c.qpow(w);
    for (const Complex& s : nw) t *= c.poch(s, w);
    for (const Complex& s : dw) t /= c.poch_nz(s, w);
    for (int j = 0; j < n; ++j)
      t *= c.poch(alpha * z[j], w) / c.poch_nz(c.qpow(1 + m[j]) * alpha * z[j], w);
    for (int k = 0; k < n; ++k) {
      for (const Complex& u : nk) t *= c.poch(u * z[k], y[k]);
      for (const Complex& v : dk) t /= c.poch_nz(v * z[k], y[k]);
    }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t *= c.poch(c.qpow(-m[j]) * z[k] / z[j], y[k]) /
             c.poch_nz(c.q() * z[k] / z[j], y[k]);
    return t;
  });
}

// Very-well-poised A_n sum on the solid simplex |y| <= N:
//
//   sum_{|y|<=N}  Delta(zq^y)/Delta(z)
//     * prod_k theta(alpha z_k q^{y_k+|y|})/theta(alpha z_k)
//     * prod_{s in NW} (s)_{|y|} / prod_{s in DW} (s)_{|y|}
//     * prod_j (alpha z_j)_{|y|}
//     * q^{|y|}
//     * prod_k prod_{u in NK} (u z_k)_{y_k} / prod_{v in DK} (v z_k)_{y_k}
//     * prod_k 1 / prod_j (q z_k/z_j)_{y_k}.
Complex an_simplex_vwp_sum(EvalCtx& c, const VC& z, int N, const Complex& alpha, const VC& nw,
                           const VC& dw, const VC& nk, const VC& dk) {
  const int n = static_cast<int>(z.size());
  return sum_simplex_le(c, n, N, [&](const MultiIndex& y) {
    const int w = weight(y);
    Complex t = vandermonde_ratio(c, z, y) * vwp_weight(c, alpha, z, y) * c.qpow(w);
    for (const Complex& s : nw) t *= c.poch(s, w);
    for (const Complex& s : dw) t /= c.poch_nz(s, w);
    for (int j = 0; j < n; ++j) t *= c.poch(alpha * z[j], w);
    for (int k = 0; k < n; ++k) {
      for (const Complex& u : nk) t *= c.poch(u * z[k], y[k]);
      for (const Complex& v : dk) t /= c.poch_nz(v * z[k], y[k]);
    }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t /= c.poch_nz(c.q() * z[k] / z[j], y[k]);
    return t;
  });
}

// ------------------------------------------------------------------ degeneracy
// pre-scan helper

struct DenomScan {
  const PS& ps;
  std::vector<Complex>& out;

  Complex qp(long e) const { return ps.q.pow_int(e); }
  void th(const Complex& x) { out.push_back(x); }
  void poch(const Complex& base, long len) {
    Complex arg = base;
    for (long i = 0; i < len; ++i) {
      out.push_back(arg);
      if (i + 1 < len) arg *= ps.q;
    }
  }
  // Delta(z) denominators.
  void delta(const VC& z) {
    for (std::size_t j = 0; j < z.size(); ++j)
      for (std::size_t k = j + 1; k < z.size(); ++k) th(z[k] / z[j]);
  }
  // prod_{j,k} (q z_k/z_j)_{y_k} with y_k <= len_k.
  void qratio(const VC& z, const MultiIndex& len) {
    for (std::size_t j = 0; j < z.size(); ++j)
      for (std::size_t k = 0; k < z.size(); ++k) poch(ps.q * z[k] / z[j], len[k]);
  }
};

MultiIndex uniform_m(int n, int N) { return MultiIndex(static_cast<std::size_t>(n), N); }

// Free scalars drawn by every sum-type descriptor live in the same band, so
// the shared draw loop in the sampler covers them; only solved parameters
// and lambdas are computed here.

Complex list_product(const VC& v, long prec) {
  Complex r = Complex::one(prec);
  for (const Complex& x : v) r *= x;
  return r;
}

Real gap_ratio(const Complex& lhs, const Complex& rhs) {
  return (lhs / rhs - Complex::one(std::min(lhs.prec(), rhs.prec()))).abs();
}

// ------------------------------------------------------------------ rational
// and theta partial fractions

IdentityDescriptor make_pf_rational() {
  IdentityDescriptor d;
  d.id = "pf_rational";
  d.family = Family::PartialFraction;
  d.domain = DomainKind::FiniteList;
  d.draw_lists = {{"a", 0}, {"b", 0}};
  // sum_k prod_j (b_j - a_k) / (a_k prod_{j!=k} (a_j - a_k))
  //   = b_1...b_n / a_1...a_n - 1
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& a = ps.list("a");
    const VC& b = ps.list("b");
    const int n = ps.n;
    Complex sum = Complex::zero(c.prec());
    for (int k = 0; k < n; ++k) {
      Complex num = c.one();
      for (int j = 0; j < n; ++j) num *= b[j] - a[k];
      Complex den = a[k];
      for (int j = 0; j < n; ++j)
        if (j != k) den *= a[j] - a[k];
      sum += num / den;
    }
    return sum;
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    return list_product(ps.list("b"), ps.prec()) / list_product(ps.list("a"), ps.prec()) - c.one();
  };
  return d;
}

// Term of the balanced theta partial fraction:
// prod_j theta(a_k/b_j) / prod_{j!=k} theta(a_k/a_j).
Complex ww_term(EvalCtx& c, const VC& a, const VC& b, int k) {
  Complex t = c.one();
  for (const Complex& bj : b) t *= c.th(a[k] / bj);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (static_cast<int>(j) != k) t /= c.th_nz(a[k] / a[j]);
  return t;
}

IdentityDescriptor make_pf_ww() {
  IdentityDescriptor d;
  d.id = "pf_ww";
  d.family = Family::PartialFraction;
  d.domain = DomainKind::FiniteList;
  d.constraint = "a_1...a_n = b_1...b_n (solves b_n)";
  d.note = "zero-sum identity; the last term is carried on the right-hand side";
  d.draw_lists = {{"a", 0}, {"b", -1}};
  d.solve = [](PS& ps) {
    VC& b = ps.lists["b"];
    Complex bn = list_product(ps.list("a"), ps.prec()) / list_product(b, ps.prec());
    if (bn.is_zero()) throw ConstraintUnsolvable("b_n would be zero");
    b.push_back(bn);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(list_product(ps.list("a"), ps.prec()), list_product(ps.list("b"), ps.prec()));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& a = ps.list("a");
    const VC& b = ps.list("b");
    Complex sum = Complex::zero(c.prec());
    for (int k = 0; k + 1 < ps.n; ++k) sum += ww_term(c, a, b, k);
    return sum;
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    return ww_term(c, ps.list("a"), ps.list("b"), ps.n - 1).neg();
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& a = ps.list("a");
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != k) s.th(a[k] / a[j]);
  };
  return d;
}

// Shared machinery for the n+1-parameter rearrangement: with
// b_1...b_{n+1} = a_1...a_n t,
// sum_k prod_{j=1}^{n+1} theta(a_k/b_j) / (theta(a_k/t) prod_{j!=k} theta(a_k/a_j))
// equals -prod theta(t/b_j)/prod theta(t/a_j), or equivalently
// +prod theta(b_j/t)/prod theta(a_j/t).
Complex epf_lhs(const PS& ps, EvalCtx& c) {
  const VC& a = ps.list("a");
  const VC& b = ps.list("b");
  const Complex& t = ps.s("t");
  Complex sum = Complex::zero(c.prec());
  for (int k = 0; k < ps.n; ++k) {
    Complex term = c.one();
    for (const Complex& bj : b) term *= c.th(a[k] / bj);
    term /= c.th_nz(a[k] / t);
    for (int j = 0; j < ps.n; ++j)
      if (j != k) term /= c.th_nz(a[k] / a[j]);
    sum += term;
  }
  return sum;
}

void epf_common(IdentityDescriptor& d) {
  d.family = Family::PartialFraction;
  d.domain = DomainKind::FiniteList;
  d.constraint = "b_1...b_{n+1} = a_1...a_n t (solves b_{n+1})";
  d.draw_scalars = {"t"};
  d.draw_lists = {{"a", 0}, {"b", 0}};  // b_{n+1} appended by solve
  d.solve = [](PS& ps) {
    VC& b = ps.lists["b"];
    Complex bn = list_product(ps.list("a"), ps.prec()) * ps.s("t") / list_product(b, ps.prec());
    if (bn.is_zero()) throw ConstraintUnsolvable("b_{n+1} would be zero");
    b.push_back(bn);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(list_product(ps.list("a"), ps.prec()) * ps.s("t"), list_product(ps.list("b"), ps.prec()));
  };
  d.lhs = epf_lhs;
}

IdentityDescriptor make_pf_epf() {
  IdentityDescriptor d;
  d.id = "pf_epf";
  epf_common(d);
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex& t = ps.s("t");
    Complex r = c.one();
    for (const Complex& bj : ps.list("b")) r *= c.th(t / bj);
    for (const Complex& aj : ps.list("a")) r /= c.th_nz(t / aj);
    return r.neg();
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& a = ps.list("a");
    const Complex& t = ps.s("t");
    for (std::size_t k = 0; k < a.size(); ++k) {
      s.th(a[k] / t);
      s.th(t / a[k]);
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != k) s.th(a[k] / a[j]);
    }
  };
  return d;
}

IdentityDescriptor make_pf_epa() {
  IdentityDescriptor d;
  d.id = "pf_epa";
  epf_common(d);
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex& t = ps.s("t");
    Complex r = c.one();
    for (const Complex& bj : ps.list("b")) r *= c.th(bj / t);
    for (const Complex& aj : ps.list("a")) r /= c.th_nz(aj / t);
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& a = ps.list("a");
    const Complex& t = ps.s("t");
    for (std::size_t k = 0; k < a.size(); ++k) {
      s.th(a[k] / t);
      s.th(a[k] / t);
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != k) s.th(a[k] / a[j]);
    }
  };
  return d;
}

IdentityDescriptor make_pf_dn() {
  IdentityDescriptor d;
  d.id = "pf_dn";
  d.family = Family::PartialFraction;
  d.domain = DomainKind::FiniteList;
  d.draw_scalars = {"t"};
  d.draw_lists = {{"a", 0}, {"b", -1}};
  // sum_k prod_j theta(a_k b_j, a_k/b_j)
  //        / (theta(t a_k, t/a_k) prod_{j!=k} theta(a_k a_j, a_k/a_j))
  //   = prod_j theta(t b_j, t/b_j) / prod_j theta(t a_j, t/a_j)
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& a = ps.list("a");
    const VC& b = ps.list("b");
    const Complex& t = ps.s("t");
    Complex sum = Complex::zero(c.prec());
    for (int k = 0; k < ps.n; ++k) {
      Complex term = c.one();
      for (const Complex& bj : b) term *= c.th(a[k] * bj) * c.th(a[k] / bj);
      term /= c.th_nz(t * a[k]) * c.th_nz(t / a[k]);
      for (int j = 0; j < ps.n; ++j)
        if (j != k) term /= c.th_nz(a[k] * a[j]) * c.th_nz(a[k] / a[j]);
      sum += term;
    }
    return sum;
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex& t = ps.s("t");
    Complex r = c.one();
    for (const Complex& bj : ps.list("b")) r *= c.th(t * bj) * c.th(t / bj);
    for (const Complex& aj : ps.list("a")) r /= c.th_nz(t * aj) * c.th_nz(t / aj);
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& a = ps.list("a");
    const Complex& t = ps.s("t");
    for (std::size_t k = 0; k < a.size(); ++k) {
      s.th(t * a[k]);
      s.th(t / a[k]);
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != k) {
          s.th(a[k] * a[j]);
          s.th(a[k] / a[j]);
        }
    }
  };
  return d;
}

IdentityDescriptor make_pf_dn_alt() {
  IdentityDescriptor d;
  d.id = "pf_dn_alt";
  d.family = Family::PartialFraction;
  d.domain = DomainKind::FiniteList;
  d.min_rank = 2;
  d.note = "zero-sum identity; the last term is carried on the right-hand side";
  d.draw_lists = {{"a", 0}, {"b", -2}};
  // sum_k a_k prod_j theta(a_k b_j, a_k/b_j) / prod_{j!=k} theta(a_k a_j, a_k/a_j) = 0
  auto term = [](const PS& ps, EvalCtx& c, int k) {
    const VC& a = ps.list("a");
    const VC& b = ps.list("b");
    Complex t = a[k];
    for (const Complex& bj : b) t *= c.th(a[k] * bj) * c.th(a[k] / bj);
    for (int j = 0; j < ps.n; ++j)
      if (j != k) t /= c.th_nz(a[k] * a[j]) * c.th_nz(a[k] / a[j]);
    return t;
  };
  d.lhs = [term](const PS& ps, EvalCtx& c) {
    Complex sum = Complex::zero(c.prec());
    for (int k = 0; k + 1 < ps.n; ++k) sum += term(ps, c, k);
    return sum;
  };
  d.rhs = [term](const PS& ps, EvalCtx& c) { return term(ps, c, ps.n - 1).neg(); };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& a = ps.list("a");
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != k) {
          s.th(a[k] * a[j]);
          s.th(a[k] / a[j]);
        }
  };
  return d;
}

// ------------------------------------------------------------------ A_n family

IdentityDescriptor make_milne_ft() {
  IdentityDescriptor d;
  d.id = "milne_ft";
  d.family = Family::An;
  d.domain = DomainKind::SimplexExact;
  d.forces_p_zero = true;
  d.note = "q-series case: every theta factor degenerates to 1 - x";
  d.draw_lists = {{"a", 0}, {"z", 0}};
  // sum_{|y|=N} Delta(zq^y)/Delta(z) prod_{j,k} (a_j z_k/z_j)_{y_k} / (q z_k/z_j)_{y_k}
  //   = (a_1...a_n)_N / (q)_N
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& a = ps.list("a");
    const VC& z = ps.list("z");
    const int n = ps.n;
    return sum_simplex_exact(c, n, ps.N, [&](const MultiIndex& y) {
      Complex t = vandermonde_ratio(c, z, y);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          t *= c.poch(a[j] * z[k] / z[j], y[k]) / c.poch_nz(c.q() * z[k] / z[j], y[k]);
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    return c.poch(list_product(ps.list("a"), ps.prec()), ps.N) / c.poch_nz(c.q(), ps.N);
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    s.delta(z);
    s.qratio(z, uniform_m(ps.n, ps.N));
  };
  return d;
}

IdentityDescriptor make_an_jackson_simplex() {
  IdentityDescriptor d;
  d.id = "an_jackson_simplex";
  d.family = Family::An;
  d.domain = DomainKind::SimplexExact;
  d.constraint = "b = a_1...a_{n+1} z_1...z_n (solves b)";
  d.draw_lists = {{"a", 1}, {"z", 0}};
  d.solve = [](PS& ps) {
    Complex b = list_product(ps.list("a"), ps.prec()) * list_product(ps.list("z"), ps.prec());
    if (b.is_zero()) throw ConstraintUnsolvable("b would be zero");
    ps.scalars.insert_or_assign("b", b);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("b"), list_product(ps.list("a"), ps.prec()) * list_product(ps.list("z"), ps.prec()));
  };
  // sum_{|y|=N} Delta(zq^y)/Delta(z)
  //   prod_k prod_{j=1}^{n+1} (a_j z_k)_{y_k} / ((b z_k)_{y_k} prod_j (q z_k/z_j)_{y_k})
  //   = (b/a_1, ..., b/a_{n+1})_N / (q, b z_1, ..., b z_n)_N
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& a = ps.list("a");
    const VC& z = ps.list("z");
    const Complex& b = ps.s("b");
    const int n = ps.n;
    return sum_simplex_exact(c, n, ps.N, [&](const MultiIndex& y) {
      Complex t = vandermonde_ratio(c, z, y);
      for (int k = 0; k < n; ++k) {
        for (const Complex& aj : a) t *= c.poch(aj * z[k], y[k]);
        t /= c.poch_nz(b * z[k], y[k]);
        for (int j = 0; j < n; ++j) t /= c.poch_nz(c.q() * z[k] / z[j], y[k]);
      }
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex& b = ps.s("b");
    Complex r = c.one();
    for (const Complex& aj : ps.list("a")) r *= c.poch(b / aj, ps.N);
    r /= c.poch_nz(c.q(), ps.N);
    for (const Complex& zk : ps.list("z")) r /= c.poch_nz(b * zk, ps.N);
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    s.delta(z);
    s.poch(ps.q, ps.N);
    for (const Complex& zk : z) s.poch(ps.s("b") * zk, ps.N);
    s.qratio(z, uniform_m(ps.n, ps.N));
  };
  return d;
}

IdentityDescriptor make_an_jackson_classical() {
  IdentityDescriptor d;
  d.id = "an_jackson_classical";
  d.family = Family::An;
  d.domain = DomainKind::SimplexLe;
  d.constraint = "a^2 q^{1+N} = b_1...b_{n+2} c z_1...z_n (solves c)";
  d.draw_scalars = {"a"};
  d.draw_lists = {{"b", 2}, {"z", 0}};
  d.solve = [](PS& ps) {
    Complex cc = ps.s("a") * ps.s("a") * ps.q.pow_int(1 + ps.N) /
                 (list_product(ps.list("b"), ps.prec()) * list_product(ps.list("z"), ps.prec()));
    if (cc.is_zero()) throw ConstraintUnsolvable("c would be zero");
    ps.scalars.insert_or_assign("c", cc);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a") * ps.s("a") * ps.q.pow_int(1 + ps.N),
                     list_product(ps.list("b"), ps.prec()) * ps.s("c") * list_product(ps.list("z"), ps.prec()));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const VC& b = ps.list("b");
    const Complex& a = ps.s("a");
    const Complex& cc = ps.s("c");
    Complex aq = a * c.q();
    VC nw = {c.qpow(-ps.N), cc};
    VC dw;
    for (const Complex& bj : b) dw.push_back(aq / bj);
    VC nk = b;
    VC dk = {c.qpow(1 + ps.N) * a, aq / cc};
    return an_simplex_vwp_sum(c, z, ps.N, a, nw, dw, nk, dk);
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex& a = ps.s("a");
    const Complex& cc = ps.s("c");
    Complex aq = a * c.q();
    Complex r = cc.pow_int(ps.N);
    for (const Complex& zk : ps.list("z"))
      r *= c.poch(aq * zk, ps.N) / c.poch_nz(aq * zk / cc, ps.N);
    for (const Complex& bk : ps.list("b"))
      r *= c.poch(aq / (cc * bk), ps.N) / c.poch_nz(aq / bk, ps.N);
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex aq = a * ps.q;
    s.delta(z);
    for (const Complex& zk : z) {
      s.th(a * zk);
      s.poch(s.qp(1 + ps.N) * a * zk, ps.N);
      s.poch(aq * zk / ps.s("c"), ps.N);
    }
    for (const Complex& bj : ps.list("b")) s.poch(aq / bj, ps.N);
    s.qratio(z, uniform_m(ps.n, ps.N));
  };
  return d;
}

IdentityDescriptor make_an_jackson_box() {
  IdentityDescriptor d;
  d.id = "an_jackson_box";
  d.family = Family::An;
  d.domain = DomainKind::Box;
  d.constraint = "a^2 q^{1+|m|} = b c d e (solves e)";
  d.draw_scalars = {"a", "b", "c", "d"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex e = ps.s("a") * ps.s("a") * ps.q.pow_int(1 + weight(ps.m)) /
                (ps.s("b") * ps.s("c") * ps.s("d"));
    if (e.is_zero()) throw ConstraintUnsolvable("e would be zero");
    ps.scalars.insert_or_assign("e", e);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a") * ps.s("a") * ps.q.pow_int(1 + weight(ps.m)),
                     ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const Complex& a = ps.s("a");
    Complex aq = a * c.q();
    VC nw = {ps.s("b"), ps.s("c")};
    VC dw = {aq / ps.s("d"), aq / ps.s("e")};
    VC nk = {ps.s("d"), ps.s("e")};
    VC dk = {aq / ps.s("b"), aq / ps.s("c")};
    return an_box_vwp_sum(c, ps.list("z"), ps.m, a, nw, dw, nk, dk);
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d");
    Complex aq = a * c.q();
    const int w = weight(ps.m);
    Complex r = c.poch(aq / (cc * dd), w) * c.poch(aq / (b * dd), w) /
                (c.poch_nz(aq / dd, w) * c.poch_nz(aq / (b * cc * dd), w));
    const VC& z = ps.list("z");
    for (int k = 0; k < ps.n; ++k)
      r *= c.poch(aq * z[k], ps.m[k]) * c.poch(aq * z[k] / (b * cc), ps.m[k]) /
           (c.poch_nz(aq * z[k] / b, ps.m[k]) * c.poch_nz(aq * z[k] / cc, ps.m[k]));
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex aq = a * ps.q;
    const int w = weight(ps.m);
    s.delta(z);
    s.poch(aq / ps.s("d"), w);
    s.poch(aq / ps.s("e"), w);
    s.poch(aq / (ps.s("b") * ps.s("c") * ps.s("d")), w);
    for (int k = 0; k < ps.n; ++k) {
      s.th(a * z[k]);
      s.poch(s.qp(1 + ps.m[k]) * a * z[k], w);
      s.poch(aq * z[k] / ps.s("b"), ps.m[k]);
      s.poch(aq * z[k] / ps.s("c"), ps.m[k]);
    }
    s.qratio(z, ps.m);
  };
  return d;
}

// ------------------------------------------------------------------ D_n family

IdentityDescriptor make_dn_jackson_simplex() {
  IdentityDescriptor d;
  d.id = "dn_jackson_simplex";
  d.family = Family::Dn;
  d.domain = DomainKind::SimplexExact;
  d.draw_scalars = {"b"};
  d.draw_lists = {{"a", -1}, {"z", 0}};
  // sum_{|y|=N} Delta(zq^y)/Delta(z) prod_{j<k} 1/(z_j z_k)_{y_j+y_k}
  //   prod_k q^{binom(y_k,2)} z_k^{y_k} prod_j (z_k a_j, z_k/a_j)_{y_k}
  //          / ((b z_k, q^{1-N} z_k/b)_{y_k} prod_j (q z_k/z_j)_{y_k})
  //   = (-q^{N-1} b)^N prod_j (b a_j, b/a_j)_N / ((q)_N prod_k (b z_k, b/z_k)_N)
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& a = ps.list("a");
    const VC& z = ps.list("z");
    const Complex& b = ps.s("b");
    const int n = ps.n;
    return sum_simplex_exact(c, n, ps.N, [&](const MultiIndex& y) {
      Complex t = vandermonde_ratio(c, z, y) * dn_coupling(c, z, y);
      for (int k = 0; k < n; ++k) {
        t *= c.qpow(binom2(y[k])) * z[k].pow_int(y[k]);
        for (const Complex& aj : a) t *= c.poch(z[k] * aj, y[k]) * c.poch(z[k] / aj, y[k]);
        t /= c.poch_nz(b * z[k], y[k]) * c.poch_nz(c.qpow(1 - ps.N) * z[k] / b, y[k]);
        for (int j = 0; j < n; ++j) t /= c.poch_nz(c.q() * z[k] / z[j], y[k]);
      }
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex& b = ps.s("b");
    const int N = ps.N;
    Complex r = (c.qpow(N - 1) * b).pow_int(N);
    if (N % 2 != 0) r = r.neg();
    for (const Complex& aj : ps.list("a")) r *= c.poch(b * aj, N) * c.poch(b / aj, N);
    r /= c.poch_nz(c.q(), N);
    for (const Complex& zk : ps.list("z")) r /= c.poch_nz(b * zk, N) * c.poch_nz(b / zk, N);
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& b = ps.s("b");
    s.delta(z);
    s.poch(ps.q, ps.N);
    for (int j = 0; j < ps.n; ++j)
      for (int k = j + 1; k < ps.n; ++k) s.poch(z[j] * z[k], ps.N);
    for (const Complex& zk : z) {
      s.poch(b * zk, ps.N);
      s.poch(s.qp(1 - ps.N) * zk / b, ps.N);
      s.poch(b / zk, ps.N);
    }
    s.qratio(z, uniform_m(ps.n, ps.N));
  };
  return d;
}

IdentityDescriptor make_dn_jackson_classical() {
  IdentityDescriptor d;
  d.id = "dn_jackson_classical";
  d.family = Family::Dn;
  d.domain = DomainKind::SimplexLe;
  d.draw_scalars = {"a", "c"};
  d.draw_lists = {{"b", 0}, {"z", 0}};
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& b = ps.list("b");
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex& cc = ps.s("c");
    const int n = ps.n, N = ps.N;
    Complex aq = a * c.q();
    return sum_simplex_le(c, n, N, [&](const MultiIndex& y) {
      const int w = weight(y);
      Complex t = vandermonde_ratio(c, z, y) * vwp_weight(c, a, z, y) *
                  dn_coupling(c, z, y) * c.qpow(w);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          t *= c.poch(z[k] * b[j], y[k]) * c.poch(z[k] / b[j], y[k]) /
               c.poch_nz(c.q() * z[k] / z[j], y[k]);
      for (int j = 0; j < n; ++j) {
        t *= c.poch(a * z[j], w) * c.poch(aq / z[j], w - y[j]);
        t /= c.poch_nz(aq * b[j], w) * c.poch_nz(aq / b[j], w);
      }
      t *= c.poch(c.qpow(-N), w) * c.poch(cc, w) * c.poch(c.qpow(N + 1) * a * a / cc, w);
      for (int k = 0; k < n; ++k)
        t /= c.poch_nz(aq * z[k] / cc, y[k]) * c.poch_nz(c.qpow(-N) * cc * z[k] / a, y[k]) *
             c.poch_nz(c.qpow(N + 1) * a * z[k], y[k]);
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex& a = ps.s("a");
    const Complex& cc = ps.s("c");
    const VC& b = ps.list("b");
    const VC& z = ps.list("z");
    const int N = ps.N;
    Complex aq = a * c.q();
    Complex r = c.one();
    for (int k = 0; k < ps.n; ++k) {
      r *= c.poch(aq * z[k], N) * c.poch(aq / z[k], N) * c.poch(aq * b[k] / cc, N) *
           c.poch(aq / (b[k] * cc), N);
      r /= c.poch_nz(aq * z[k] / cc, N) * c.poch_nz(aq / (z[k] * cc), N) *
           c.poch_nz(aq * b[k], N) * c.poch_nz(aq / b[k], N);
    }
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const VC& b = ps.list("b");
    const Complex& a = ps.s("a");
    const Complex& cc = ps.s("c");
    Complex aq = a * ps.q;
    const int N = ps.N;
    s.delta(z);
    for (int j = 0; j < ps.n; ++j)
      for (int k = j + 1; k < ps.n; ++k) s.poch(z[j] * z[k], N);
    for (int j = 0; j < ps.n; ++j) {
      s.th(a * z[j]);
      s.poch(aq * b[j], N);
      s.poch(aq / b[j], N);
      s.poch(aq * z[j] / cc, N);
      s.poch(s.qp(-N) * cc * z[j] / a, N);
      s.poch(s.qp(N + 1) * a * z[j], N);
      s.poch(aq / (z[j] * cc), N);
    }
    s.qratio(z, uniform_m(ps.n, N));
  };
  return d;
}

IdentityDescriptor make_dn_jackson_box() {
  IdentityDescriptor d;
  d.id = "dn_jackson_box";
  d.family = Family::Dn;
  d.domain = DomainKind::Box;
  d.constraint = "a^2 q = b c d (solves d)";
  d.draw_scalars = {"a", "b", "c"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex dd = ps.s("a") * ps.s("a") * ps.q / (ps.s("b") * ps.s("c"));
    if (dd.is_zero()) throw ConstraintUnsolvable("d would be zero");
    ps.scalars.insert_or_assign("d", dd);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a") * ps.s("a") * ps.q, ps.s("b") * ps.s("c") * ps.s("d"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d");
    const int n = ps.n;
    Complex aq = a * c.q();
    return sum_box(c, ps.m, [&](const MultiIndex& y) {
      const int w = weight(y);
      Complex t = vandermonde_ratio(c, z, y) * vwp_weight(c, a, z, y) *
                  dn_coupling(c, z, y) * c.qpow(w);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          t *= c.poch(c.qpow(-ps.m[j]) * z[k] / z[j], y[k]) *
               c.poch(c.qpow(ps.m[j]) * z[j] * z[k], y[k]) /
               c.poch_nz(c.q() * z[k] / z[j], y[k]);
      for (int j = 0; j < n; ++j) {
        t *= c.poch(a * z[j], w) * c.poch(aq / z[j], w - y[j]);
        t /= c.poch_nz(c.qpow(1 + ps.m[j]) * a * z[j], w) *
             c.poch_nz(c.qpow(1 - ps.m[j]) * a / z[j], w);
      }
      t *= c.poch(b, w) * c.poch(cc, w) * c.poch(dd, w);
      for (int k = 0; k < n; ++k)
        t /= c.poch_nz(aq * z[k] / b, y[k]) * c.poch_nz(aq * z[k] / cc, y[k]) *
             c.poch_nz(aq * z[k] / dd, y[k]);
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d");
    Complex aq = a * c.q();
    Complex r = c.one();
    for (int k = 0; k < ps.n; ++k) {
      const int mk = ps.m[k];
      r *= c.poch(aq * z[k], mk) * c.poch(b * z[k] / a, mk) * c.poch(cc * z[k] / a, mk) *
           c.poch(dd * z[k] / a, mk);
      r /= c.poch_nz(z[k] / a, mk) * c.poch_nz(aq * z[k] / b, mk) *
           c.poch_nz(aq * z[k] / cc, mk) * c.poch_nz(aq * z[k] / dd, mk);
    }
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex aq = a * ps.q;
    const int w = weight(ps.m);
    s.delta(z);
    for (int j = 0; j < ps.n; ++j)
      for (int k = j + 1; k < ps.n; ++k) s.poch(z[j] * z[k], ps.m[j] + ps.m[k]);
    for (int j = 0; j < ps.n; ++j) {
      s.th(a * z[j]);
      s.poch(s.qp(1 + ps.m[j]) * a * z[j], w);
      s.poch(s.qp(1 - ps.m[j]) * a / z[j], w);
      s.poch(z[j] / a, ps.m[j]);
      for (const char* name : {"b", "c", "d"}) s.poch(aq * z[j] / ps.s(name), ps.m[j]);
    }
    s.qratio(z, ps.m);
  };
  return d;
}

IdentityDescriptor make_dn_jackson_box_reversed() {
  IdentityDescriptor d;
  d.id = "dn_jackson_box_reversed";
  d.family = Family::Dn;
  d.domain = DomainKind::Box;
  d.constraint = "a^2 q^{1+|m|} = b c d e (solves e)";
  d.draw_scalars = {"a", "b", "c", "d"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex e = ps.s("a") * ps.s("a") * ps.q.pow_int(1 + weight(ps.m)) /
                (ps.s("b") * ps.s("c") * ps.s("d"));
    if (e.is_zero()) throw ConstraintUnsolvable("e would be zero");
    ps.scalars.insert_or_assign("e", e);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a") * ps.s("a") * ps.q.pow_int(1 + weight(ps.m)),
                     ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d"), &e = ps.s("e");
    const int n = ps.n;
    Complex aq = a * c.q();
    return sum_box(c, ps.m, [&](const MultiIndex& y) {
      const int w = weight(y);
      Complex t = vandermonde_ratio(c, z, y) * vwp_weight(c, a, z, y) * c.qpow(w);
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) t *= c.poch(aq * z[j] * z[k] / e, y[j] + y[k]);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          t /= c.poch_nz(aq * z[j] * z[k] / e, y[k]);
          t *= c.poch(c.qpow(-ps.m[j]) * z[k] / z[j], y[k]) /
               c.poch_nz(c.q() * z[k] / z[j], y[k]);
        }
      for (int j = 0; j < n; ++j) {
        t *= c.poch(a * z[j], w) * c.poch(e / z[j], w);
        t /= c.poch_nz(c.qpow(1 + ps.m[j]) * a * z[j], w) * c.poch_nz(e / z[j], w - y[j]);
      }
      for (int k = 0; k < n; ++k)
        t *= c.poch(b * z[k], y[k]) * c.poch(cc * z[k], y[k]) * c.poch(dd * z[k], y[k]);
      t /= c.poch_nz(aq / b, w) * c.poch_nz(aq / cc, w) * c.poch_nz(aq / dd, w);
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &e = ps.s("e");
    const int n = ps.n;
    const int w = weight(ps.m);
    Complex aq = a * c.q();
    Complex r = c.one();
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        r *= c.poch(aq * z[j] * z[k] / e, ps.m[j] + ps.m[k]);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r /= c.poch_nz(aq * z[j] * z[k] / e, ps.m[k]);
    for (int k = 0; k < n; ++k) {
      const int mk = ps.m[k];
      r *= c.poch(aq * z[k], mk) * c.poch(aq * z[k] / (b * e), mk) *
           c.poch(aq * z[k] / (cc * e), mk) *
           c.poch(c.qpow(1 + w - mk) * a / (b * cc * z[k]), mk);
    }
    r /= c.poch_nz(aq / b, w) * c.poch_nz(aq / cc, w) * c.poch_nz(aq / (b * cc * e), w);
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex& e = ps.s("e");
    Complex aq = a * ps.q;
    const int w = weight(ps.m);
    s.delta(z);
    for (int j = 0; j < ps.n; ++j)
      for (int k = 0; k < ps.n; ++k)
        s.poch(aq * z[j] * z[k] / e, std::max(ps.m[k], ps.m[j] + ps.m[k]));
    for (int j = 0; j < ps.n; ++j) {
      s.th(a * z[j]);
      s.poch(s.qp(1 + ps.m[j]) * a * z[j], w);
      s.poch(e / z[j], w);
    }
    s.poch(aq / ps.s("b"), w);
    s.poch(aq / ps.s("c"), w);
    s.poch(aq / ps.s("d"), w);
    s.poch(aq / (ps.s("b") * ps.s("c") * e), w);
    s.qratio(z, ps.m);
  };
  return d;
}

// ------------------------------------------------------------------ C_n family

IdentityDescriptor make_cn_jackson_box() {
  IdentityDescriptor d;
  d.id = "cn_jackson_box";
  d.family = Family::Cn;
  d.domain = DomainKind::Box;
  d.constraint = "a^2 q^{1+|m|} = b c d e (solves e)";
  d.draw_scalars = {"a", "b", "c", "d"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex e = ps.s("a") * ps.s("a") * ps.q.pow_int(1 + weight(ps.m)) /
                (ps.s("b") * ps.s("c") * ps.s("d"));
    if (e.is_zero()) throw ConstraintUnsolvable("e would be zero");
    ps.scalars.insert_or_assign("e", e);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a") * ps.s("a") * ps.q.pow_int(1 + weight(ps.m)),
                     ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const int n = ps.n;
    Complex aq = a * c.q();
    VC nk = {ps.s("b"), ps.s("c"), ps.s("d"), ps.s("e")};
    VC dk;
    for (const Complex& u : nk) dk.push_back(aq / u);
    return sum_box(c, ps.m, [&](const MultiIndex& y) {
      Complex t = vandermonde_ratio(c, z, y) * cn_weight(c, a, z, y) * c.qpow(weight(y));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          t *= c.poch(c.qpow(-ps.m[j]) * z[k] / z[j], y[k]) * c.poch(a * z[j] * z[k], y[k]);
          t /= c.poch_nz(c.q() * z[k] / z[j], y[k]) *
               c.poch_nz(c.qpow(1 + ps.m[j]) * a * z[j] * z[k], y[k]);
        }
      for (int k = 0; k < n; ++k) {
        for (const Complex& u : nk) t *= c.poch(u * z[k], y[k]);
        for (const Complex& v : dk) t /= c.poch_nz(v * z[k], y[k]);
      }
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d"), &e = ps.s("e");
    const int n = ps.n;
    const int w = weight(ps.m);
    Complex aq = a * c.q();
    Complex r = c.one();
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r *= c.poch(aq * z[j] * z[k], ps.m[k]);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) r /= c.poch_nz(aq * z[j] * z[k], ps.m[j] + ps.m[k]);
    r *= c.poch(aq / (b * cc), w) * c.poch(aq / (b * dd), w) * c.poch(aq / (cc * dd), w);
    for (int k = 0; k < n; ++k)
      r /= c.poch_nz(aq * z[k] / b, ps.m[k]) * c.poch_nz(aq * z[k] / cc, ps.m[k]) *
           c.poch_nz(aq * z[k] / dd, ps.m[k]) *
           c.poch_nz(c.qpow(-ps.m[k]) * e / (a * z[k]), ps.m[k]);
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex aq = a * ps.q;
    s.delta(z);
    for (int j = 0; j < ps.n; ++j)
      for (int k = j; k < ps.n; ++k) {
        s.th(a * z[j] * z[k]);
        s.poch(s.qp(1 + ps.m[j]) * a * z[j] * z[k], ps.m[k]);
        s.poch(aq * z[j] * z[k], ps.m[j] + ps.m[k]);
      }
    for (int k = 0; k < ps.n; ++k) {
      for (const char* name : {"b", "c", "d"}) s.poch(aq * z[k] / ps.s(name), ps.m[k]);
      s.poch(s.qp(-ps.m[k]) * ps.s("e") / (a * z[k]), ps.m[k]);
    }
    s.qratio(z, ps.m);
  };
  return d;
}

IdentityDescriptor make_warnaar_first() {
  IdentityDescriptor d;
  d.id = "warnaar_first";
  d.family = Family::Cn;
  d.domain = DomainKind::Box;  // common bound N in every direction
  d.constraint = "a^2 q^{2+N-n} = b c d e (solves e)";
  d.draw_scalars = {"a", "b", "c", "d"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex e = ps.s("a") * ps.s("a") * ps.q.pow_int(2 + ps.N - ps.n) /
                (ps.s("b") * ps.s("c") * ps.s("d"));
    if (e.is_zero()) throw ConstraintUnsolvable("e would be zero");
    ps.scalars.insert_or_assign("e", e);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a") * ps.s("a") * ps.q.pow_int(2 + ps.N - ps.n),
                     ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const int n = ps.n, N = ps.N;
    Complex aq = a * c.q();
    VC nk = {ps.s("b"), ps.s("c"), ps.s("d"), ps.s("e")};
    VC dk;
    for (const Complex& u : nk) dk.push_back(aq / u);
    return sum_box(c, uniform_m(n, N), [&](const MultiIndex& y) {
      Complex t = vandermonde_ratio(c, z, y) * cn_weight(c, a, z, y) * c.qpow(weight(y));
      for (int k = 0; k < n; ++k) {
        t *= c.poch(a * z[k] * z[k], y[k]) * c.poch(c.qpow(-N), y[k]);
        t /= c.poch_nz(c.q(), y[k]) * c.poch_nz(c.qpow(N + 1) * a * z[k] * z[k], y[k]);
        for (const Complex& u : nk) t *= c.poch(u * z[k], y[k]);
        for (const Complex& v : dk) t /= c.poch_nz(v * z[k], y[k]);
      }
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d"), &e = ps.s("e");
    const int n = ps.n, N = ps.N;
    Complex aq = a * c.q();
    Complex r = c.one();
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        r *= c.th(c.qpow(N) * a * z[j] * z[k]) / c.th_nz(a * z[j] * z[k]);
    for (int k = 0; k < n; ++k) {
      r *= c.poch(aq * z[k] * z[k], N) * c.poch(c.qpow(1 - k) * a / (b * cc), N) *
           c.poch(c.qpow(1 - k) * a / (b * dd), N) * c.poch(c.qpow(1 - k) * a / (cc * dd), N);
      r /= c.poch_nz(aq * z[k] / b, N) * c.poch_nz(aq * z[k] / cc, N) *
           c.poch_nz(aq * z[k] / dd, N) * c.poch_nz(c.qpow(-N) * e / (a * z[k]), N);
    }
    return r;
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex aq = a * ps.q;
    const int N = ps.N;
    s.delta(z);
    s.poch(ps.q, N);
    for (int j = 0; j < ps.n; ++j)
      for (int k = j; k < ps.n; ++k) s.th(a * z[j] * z[k]);
    for (int k = 0; k < ps.n; ++k) {
      s.poch(s.qp(N + 1) * a * z[k] * z[k], N);
      for (const char* name : {"b", "c", "d"}) s.poch(aq * z[k] / ps.s(name), N);
      s.poch(s.qp(-N) * ps.s("e") / (a * z[k]), N);
    }
    s.qratio(z, uniform_m(ps.n, N));
  };
  return d;
}

// ------------------------------------------------------------------ Bailey
// transformations

Complex lam_of(const PS& ps, const char* x1, const char* x2, const char* x3) {
  return ps.s("a") * ps.s("a") * ps.q / (ps.s(x1) * ps.s(x2) * ps.s(x3));
}

IdentityDescriptor make_bailey_an_box() {
  IdentityDescriptor d;
  d.id = "bailey_an_box";
  d.family = Family::Bailey;
  d.domain = DomainKind::Box;
  d.constraint = "a^3 q^{2+|m|} = b c d e f g (solves g); lambda = a^2 q / (b c e)";
  d.draw_scalars = {"a", "b", "c", "d", "e", "f"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex g = ps.s("a").pow_int(3) * ps.q.pow_int(2 + weight(ps.m)) /
                (ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e") * ps.s("f"));
    if (g.is_zero()) throw ConstraintUnsolvable("g would be zero");
    ps.scalars.insert_or_assign("g", g);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a").pow_int(3) * ps.q.pow_int(2 + weight(ps.m)),
                     ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e") * ps.s("f") * ps.s("g"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const Complex& a = ps.s("a");
    Complex aq = a * c.q();
    VC nw = {ps.s("b"), ps.s("c"), ps.s("d")};
    VC dw = {aq / ps.s("e"), aq / ps.s("f"), aq / ps.s("g")};
    VC nk = {ps.s("e"), ps.s("f"), ps.s("g")};
    VC dk = {aq / ps.s("b"), aq / ps.s("c"), aq / ps.s("d")};
    return an_box_vwp_sum(c, ps.list("z"), ps.m, a, nw, dw, nk, dk);
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d"), &e = ps.s("e"),
                  &f = ps.s("f"), &g = ps.s("g");
    Complex lam = lam_of(ps, "b", "c", "e");
    Complex aq = a * c.q(), lq = lam * c.q();
    const int w = weight(ps.m);
    Complex pref = (a / lam).pow_int(w) * c.poch(lq / f, w) * c.poch(lq / g, w) /
                   (c.poch_nz(aq / f, w) * c.poch_nz(aq / g, w));
    for (int k = 0; k < ps.n; ++k)
      pref *= c.poch(aq * z[k], ps.m[k]) * c.poch(lq * z[k] / dd, ps.m[k]) /
              (c.poch_nz(lq * z[k], ps.m[k]) * c.poch_nz(aq * z[k] / dd, ps.m[k]));
    VC nw = {lam * b / a, lam * cc / a, dd};
    VC dw = {aq / e, lq / f, lq / g};
    VC nk = {lam * e / a, f, g};
    VC dk = {aq / b, aq / cc, lq / dd};
    return pref * an_box_vwp_sum(c, z, ps.m, lam, nw, dw, nk, dk);
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex lam = lam_of(ps, "b", "c", "e");
    Complex aq = a * ps.q, lq = lam * ps.q;
    const int w = weight(ps.m);
    s.delta(z);
    for (const char* name : {"e", "f", "g"}) s.poch(aq / ps.s(name), w);
    s.poch(lq / ps.s("f"), w);
    s.poch(lq / ps.s("g"), w);
    s.poch(aq / ps.s("e"), w);
    for (int k = 0; k < ps.n; ++k) {
      s.th(a * z[k]);
      s.th(lam * z[k]);
      s.poch(s.qp(1 + ps.m[k]) * a * z[k], w);
      s.poch(s.qp(1 + ps.m[k]) * lam * z[k], w);
      s.poch(lq * z[k], ps.m[k]);
      for (const char* name : {"b", "c", "d"}) s.poch(aq * z[k] / ps.s(name), ps.m[k]);
      s.poch(lq * z[k] / ps.s("d"), ps.m[k]);
    }
    s.qratio(z, ps.m);
  };
  return d;
}

IdentityDescriptor make_bailey_an_simplex() {
  IdentityDescriptor d;
  d.id = "bailey_an_simplex";
  d.family = Family::Bailey;
  d.domain = DomainKind::SimplexLe;
  d.constraint = "a^3 q^{2+N} = b_1...b_{n+2} c d e z_1...z_n (solves e); lambda = a^2 q / (c d e)";
  d.draw_scalars = {"a", "c", "d"};
  d.draw_lists = {{"b", 2}, {"z", 0}};
  d.solve = [](PS& ps) {
    Complex e = ps.s("a").pow_int(3) * ps.q.pow_int(2 + ps.N) /
                (list_product(ps.list("b"), ps.prec()) * ps.s("c") * ps.s("d") * list_product(ps.list("z"), ps.prec()));
    if (e.is_zero()) throw ConstraintUnsolvable("e would be zero");
    ps.scalars.insert_or_assign("e", e);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a").pow_int(3) * ps.q.pow_int(2 + ps.N),
                     list_product(ps.list("b"), ps.prec()) * ps.s("c") * ps.s("d") * ps.s("e") *
                         list_product(ps.list("z"), ps.prec()));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const Complex& a = ps.s("a");
    Complex aq = a * c.q();
    VC nw = {c.qpow(-ps.N), ps.s("c"), ps.s("d")};
    VC dw = {aq / ps.s("e")};
    for (const Complex& bj : ps.list("b")) dw.push_back(aq / bj);
    VC nk = {ps.s("e")};
    for (const Complex& bj : ps.list("b")) nk.push_back(bj);
    VC dk = {c.qpow(1 + ps.N) * a, aq / ps.s("c"), aq / ps.s("d")};
    return an_simplex_vwp_sum(c, ps.list("z"), ps.N, a, nw, dw, nk, dk);
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const VC& b = ps.list("b");
    const Complex& a = ps.s("a");
    const Complex &cc = ps.s("c"), &dd = ps.s("d"), &e = ps.s("e");
    Complex lam = lam_of(ps, "c", "d", "e");
    Complex aq = a * c.q(), lq = lam * c.q();
    const int N = ps.N;
    Complex pref = (a / lam).pow_int(N);
    for (const Complex& zk : z)
      pref *= c.poch(aq * zk, N) / c.poch_nz(lq * zk, N);
    for (const Complex& bj : b) pref *= c.poch(lq / bj, N) / c.poch_nz(aq / bj, N);
    VC nw = {c.qpow(-N), lam * cc / a, lam * dd / a};
    VC dw = {aq / e};
    for (const Complex& bj : b) dw.push_back(lq / bj);
    VC nk = {lam * e / a};
    for (const Complex& bj : b) nk.push_back(bj);
    VC dk = {c.qpow(1 + N) * lam, aq / cc, aq / dd};
    return pref * an_simplex_vwp_sum(c, z, N, lam, nw, dw, nk, dk);
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex lam = lam_of(ps, "c", "d", "e");
    Complex aq = a * ps.q, lq = lam * ps.q;
    const int N = ps.N;
    s.delta(z);
    s.poch(aq / ps.s("e"), N);
    for (const Complex& bj : ps.list("b")) {
      s.poch(aq / bj, N);
      s.poch(lq / bj, N);
    }
    for (const Complex& zk : z) {
      s.th(a * zk);
      s.th(lam * zk);
      s.poch(s.qp(1 + N) * a * zk, N);
      s.poch(s.qp(1 + N) * lam * zk, N);
      s.poch(lq * zk, N);
      s.poch(aq * zk / ps.s("c"), N);
      s.poch(aq * zk / ps.s("d"), N);
    }
    s.qratio(z, uniform_m(ps.n, N));
  };
  return d;
}

IdentityDescriptor make_bailey_cn_an() {
  IdentityDescriptor d;
  d.id = "bailey_cn_an";
  d.family = Family::Bailey;
  d.domain = DomainKind::Box;
  d.constraint = "a^3 q^{2+|m|} = b c d e f g (solves g); lambda = a^2 q / (b c d)";
  d.draw_scalars = {"a", "b", "c", "d", "e", "f"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex g = ps.s("a").pow_int(3) * ps.q.pow_int(2 + weight(ps.m)) /
                (ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e") * ps.s("f"));
    if (g.is_zero()) throw ConstraintUnsolvable("g would be zero");
    ps.scalars.insert_or_assign("g", g);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a").pow_int(3) * ps.q.pow_int(2 + weight(ps.m)),
                     ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e") * ps.s("f") * ps.s("g"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const int n = ps.n;
    Complex aq = a * c.q();
    VC nk = {ps.s("b"), ps.s("c"), ps.s("d"), ps.s("e"), ps.s("f"), ps.s("g")};
    VC dk;
    for (const Complex& u : nk) dk.push_back(aq / u);
    return sum_box(c, ps.m, [&](const MultiIndex& y) {
      Complex t = vandermonde_ratio(c, z, y) * cn_weight(c, a, z, y) * c.qpow(weight(y));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          t *= c.poch(c.qpow(-ps.m[j]) * z[k] / z[j], y[k]) * c.poch(a * z[j] * z[k], y[k]);
          t /= c.poch_nz(c.q() * z[k] / z[j], y[k]) *
               c.poch_nz(c.qpow(1 + ps.m[j]) * a * z[j] * z[k], y[k]);
        }
      for (int k = 0; k < n; ++k) {
        for (const Complex& u : nk) t *= c.poch(u * z[k], y[k]);
        for (const Complex& v : dk) t /= c.poch_nz(v * z[k], y[k]);
      }
      return t;
    });
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d"), &e = ps.s("e"),
                  &f = ps.s("f"), &g = ps.s("g");
    Complex lam = lam_of(ps, "b", "c", "d");
    Complex aq = a * c.q(), lq = lam * c.q();
    const int n = ps.n;
    const int w = weight(ps.m);
    Complex pref = c.one();
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) pref *= c.poch(aq * z[j] * z[k], ps.m[k]);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        pref /= c.poch_nz(aq * z[j] * z[k], ps.m[j] + ps.m[k]);
    pref *= c.poch(lq / e, w) * c.poch(lq / f, w) * c.poch(aq / (e * f), w);
    for (int k = 0; k < n; ++k)
      pref /= c.poch_nz(lq * z[k], ps.m[k]) * c.poch_nz(aq * z[k] / e, ps.m[k]) *
              c.poch_nz(aq * z[k] / f, ps.m[k]) *
              c.poch_nz(c.qpow(-ps.m[k]) * g / (a * z[k]), ps.m[k]);
    VC nw = {lam * b / a, lam * cc / a, lam * dd / a};
    VC dw = {lq / e, lq / f, lq / g};
    VC nk = {e, f, g};
    VC dk = {aq / b, aq / cc, aq / dd};
    return pref * an_box_vwp_sum(c, z, ps.m, lam, nw, dw, nk, dk);
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex lam = lam_of(ps, "b", "c", "d");
    Complex aq = a * ps.q, lq = lam * ps.q;
    const int w = weight(ps.m);
    s.delta(z);
    for (int j = 0; j < ps.n; ++j)
      for (int k = j; k < ps.n; ++k) {
        s.th(a * z[j] * z[k]);
        s.poch(s.qp(1 + ps.m[j]) * a * z[j] * z[k], ps.m[k]);
        s.poch(aq * z[j] * z[k], ps.m[j] + ps.m[k]);
      }
    for (const char* name : {"e", "f", "g"}) s.poch(lq / ps.s(name), w);
    s.poch(aq / (ps.s("e") * ps.s("f")), w);
    for (int k = 0; k < ps.n; ++k) {
      s.th(lam * z[k]);
      s.poch(s.qp(1 + ps.m[k]) * lam * z[k], w);
      s.poch(lq * z[k], ps.m[k]);
      for (const char* name : {"b", "c", "d", "e", "f", "g"})
        s.poch(aq * z[k] / ps.s(name), ps.m[k]);
      s.poch(s.qp(-ps.m[k]) * ps.s("g") / (a * z[k]), ps.m[k]);
    }
    s.qratio(z, ps.m);
  };
  return d;
}

// Shared summand of the D_n <-> D_n transformation: alpha is a on the left
// and lambda on the right, delta the d-type parameter attached to alpha.
Complex bailey_dn_sum(EvalCtx& c, const PS& ps, const Complex& alpha, const Complex& delta,
                      const Complex& pk1, const Complex& pk2) {
  const VC& z = ps.list("z");
  const Complex& a = ps.s("a");
  const Complex &b = ps.s("b"), &cc = ps.s("c"), &dd = ps.s("d"), &e = ps.s("e"),
                &f = ps.s("f");
  const int n = ps.n;
  Complex aq = a * c.q(), alq = alpha * c.q();
  return sum_box(c, ps.m, [&](const MultiIndex& y) {
    const int w = weight(y);
    Complex t = vandermonde_ratio(c, z, y) * vwp_weight(c, alpha, z, y) * c.qpow(w);
    for (int j = 0; j < n; ++j) {
      t *= c.poch(alpha * z[j], w) * c.poch(delta / z[j], w) * c.poch(alq / z[j], w - y[j]);
      t /= c.poch_nz(c.qpow(1 + ps.m[j]) * alpha * z[j], w) *
           c.poch_nz(c.qpow(1 - ps.m[j]) * alpha / z[j], w) *
           c.poch_nz(delta / z[j], w - y[j]);
    }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        t *= c.poch(c.qpow(-ps.m[j]) * z[k] / z[j], y[k]) *
             c.poch(c.qpow(ps.m[j]) * z[j] * z[k], y[k]);
        t /= c.poch_nz(c.q() * z[k] / z[j], y[k]) *
             c.poch_nz(aq * z[j] * z[k] / dd, y[k]);
      }
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        t *= c.poch(aq * z[j] * z[k] / dd, y[j] + y[k]) /
             c.poch_nz(z[j] * z[k], y[j] + y[k]);
    for (int k = 0; k < n; ++k) {
      t *= c.poch(pk1 * z[k], y[k]) * c.poch(pk2 * z[k], y[k]);
      t /= c.poch_nz(alq * z[k] / e, y[k]) * c.poch_nz(alq * z[k] / f, y[k]);
    }
    t *= c.poch(e, w) * c.poch(f, w) / (c.poch_nz(aq / b, w) * c.poch_nz(aq / cc, w));
    return t;
  });
}

IdentityDescriptor make_bailey_dn() {
  IdentityDescriptor d;
  d.id = "bailey_dn";
  d.family = Family::Bailey;
  d.domain = DomainKind::Box;
  d.constraint = "a^3 q^2 = b c d e f (solves f); lambda = a^2 q / (b c d)";
  d.draw_scalars = {"a", "b", "c", "d", "e"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex f = ps.s("a").pow_int(3) * ps.q * ps.q /
                (ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e"));
    if (f.is_zero()) throw ConstraintUnsolvable("f would be zero");
    ps.scalars.insert_or_assign("f", f);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a").pow_int(3) * ps.q * ps.q,
                     ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e") * ps.s("f"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    return bailey_dn_sum(c, ps, ps.s("a"), ps.s("d"), ps.s("b"), ps.s("c"));
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex lam = lam_of(ps, "b", "c", "d");
    Complex aq = a * c.q(), lq = lam * c.q();
    const Complex &e = ps.s("e"), &f = ps.s("f");
    Complex pref = c.one();
    for (int k = 0; k < ps.n; ++k) {
      const int mk = ps.m[k];
      pref *= c.poch(aq * z[k], mk) * c.poch(z[k] / lam, mk) * c.poch(lq * z[k] / e, mk) *
              c.poch(lq * z[k] / f, mk);
      pref /= c.poch_nz(lq * z[k], mk) * c.poch_nz(z[k] / a, mk) *
              c.poch_nz(aq * z[k] / e, mk) * c.poch_nz(aq * z[k] / f, mk);
    }
    return pref * bailey_dn_sum(c, ps, lam, lam * ps.s("d") / a, lam * ps.s("b") / a,
                                lam * ps.s("c") / a);
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex lam = lam_of(ps, "b", "c", "d");
    Complex aq = a * ps.q, lq = lam * ps.q;
    const int w = weight(ps.m);
    s.delta(z);
    s.poch(aq / ps.s("b"), w);
    s.poch(aq / ps.s("c"), w);
    for (int j = 0; j < ps.n; ++j) {
      s.th(a * z[j]);
      s.th(lam * z[j]);
      for (const Complex& al : {a, lam}) {
        s.poch(s.qp(1 + ps.m[j]) * al * z[j], w);
        s.poch(s.qp(1 - ps.m[j]) * al / z[j], w);
      }
      s.poch(ps.s("d") / z[j], w);
      s.poch(lam * ps.s("d") / (a * z[j]), w);
      s.poch(z[j] / a, ps.m[j]);
      s.poch(lq * z[j], ps.m[j]);
      for (const Complex& al : {a, lam}) {
        s.poch(al * ps.q * z[j] / ps.s("e"), std::max(ps.m[j], 0));
        s.poch(al * ps.q * z[j] / ps.s("f"), ps.m[j]);
      }
    }
    for (int j = 0; j < ps.n; ++j)
      for (int k = 0; k < ps.n; ++k) {
        s.poch(aq * z[j] * z[k] / ps.s("d"), ps.m[k]);
        if (j < k) s.poch(z[j] * z[k], ps.m[j] + ps.m[k]);
      }
    s.qratio(z, ps.m);
  };
  return d;
}

// Shared summand of the D_n transformation with single-parameter blocks.
Complex bailey_dn_an_sum(EvalCtx& c, const PS& ps, const Complex& alpha, const VC& nws,
                         const Complex& fk, const VC& dks) {
  const VC& z = ps.list("z");
  const int n = ps.n;
  Complex aq = ps.s("a") * c.q();
  Complex alq = alpha * c.q();
  return sum_box(c, ps.m, [&](const MultiIndex& y) {
    const int w = weight(y);
    Complex t = vandermonde_ratio(c, z, y) * vwp_weight(c, alpha, z, y) *
                dn_coupling(c, z, y) * c.qpow(w);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        t *= c.poch(c.qpow(-ps.m[j]) * z[k] / z[j], y[k]) *
             c.poch(c.qpow(ps.m[j]) * z[j] * z[k], y[k]);
        t /= c.poch_nz(c.q() * z[k] / z[j], y[k]);
      }
    for (int j = 0; j < n; ++j) {
      t *= c.poch(alpha * z[j], w) * c.poch(alq / z[j], w - y[j]);
      t /= c.poch_nz(c.qpow(1 + ps.m[j]) * alpha * z[j], w) *
           c.poch_nz(c.qpow(1 - ps.m[j]) * alpha / z[j], w);
    }
    for (const Complex& s : nws) t *= c.poch(s, w);
    t /= c.poch_nz(aq / ps.s("f"), w);
    for (int k = 0; k < n; ++k) {
      t *= c.poch(fk * z[k], y[k]);
      for (const Complex& v : dks) t /= c.poch_nz(v * z[k], y[k]);
    }
    return t;
  });
}

IdentityDescriptor make_bailey_dn_an() {
  IdentityDescriptor d;
  d.id = "bailey_dn_an";
  d.family = Family::Bailey;
  d.domain = DomainKind::Box;
  d.constraint = "a^3 q^2 = b c d e f (solves f); lambda = a^2 q / (b c f)";
  d.draw_scalars = {"a", "b", "c", "d", "e"};
  d.draw_lists = {{"z", 0}};
  d.solve = [](PS& ps) {
    Complex f = ps.s("a").pow_int(3) * ps.q * ps.q /
                (ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e"));
    if (f.is_zero()) throw ConstraintUnsolvable("f would be zero");
    ps.scalars.insert_or_assign("f", f);
  };
  d.constraint_gap = [](const PS& ps) {
    return gap_ratio(ps.s("a").pow_int(3) * ps.q * ps.q,
                     ps.s("b") * ps.s("c") * ps.s("d") * ps.s("e") * ps.s("f"));
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const Complex& a = ps.s("a");
    Complex aq = a * c.q();
    VC nws = {ps.s("b"), ps.s("c"), ps.s("d"), ps.s("e")};
    VC dks = {aq / ps.s("b"), aq / ps.s("c"), aq / ps.s("d"), aq / ps.s("e")};
    return bailey_dn_an_sum(c, ps, a, nws, ps.s("f"), dks);
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex lam = lam_of(ps, "b", "c", "f");
    Complex aq = a * c.q(), lq = lam * c.q();
    const Complex &dd = ps.s("d"), &e = ps.s("e");
    Complex pref = c.one();
    for (int k = 0; k < ps.n; ++k) {
      const int mk = ps.m[k];
      pref *= c.poch(aq * z[k], mk) * c.poch(z[k] / lam, mk) * c.poch(lq * z[k] / dd, mk) *
              c.poch(lq * z[k] / e, mk);
      pref /= c.poch_nz(lq * z[k], mk) * c.poch_nz(z[k] / a, mk) *
              c.poch_nz(aq * z[k] / dd, mk) * c.poch_nz(aq * z[k] / e, mk);
    }
    VC nws = {lam * ps.s("b") / a, lam * ps.s("c") / a, dd, e};
    VC dks = {aq / ps.s("b"), aq / ps.s("c"), lq / dd, lq / e};
    return pref * bailey_dn_an_sum(c, ps, lam, nws, lam * ps.s("f") / a, dks);
  };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    const VC& z = ps.list("z");
    const Complex& a = ps.s("a");
    Complex lam = lam_of(ps, "b", "c", "f");
    Complex aq = a * ps.q, lq = lam * ps.q;
    const int w = weight(ps.m);
    s.delta(z);
    s.poch(aq / ps.s("f"), w);
    for (int j = 0; j < ps.n; ++j)
      for (int k = j + 1; k < ps.n; ++k) s.poch(z[j] * z[k], ps.m[j] + ps.m[k]);
    for (int j = 0; j < ps.n; ++j) {
      s.th(a * z[j]);
      s.th(lam * z[j]);
      for (const Complex& al : {a, lam}) {
        s.poch(s.qp(1 + ps.m[j]) * al * z[j], w);
        s.poch(s.qp(1 - ps.m[j]) * al / z[j], w);
      }
      s.poch(z[j] / a, ps.m[j]);
      s.poch(lq * z[j], ps.m[j]);
      for (const char* name : {"b", "c", "d", "e"}) s.poch(aq * z[j] / ps.s(name), ps.m[j]);
      s.poch(lq * z[j] / ps.s("d"), ps.m[j]);
      s.poch(lq * z[j] / ps.s("e"), ps.m[j]);
    }
    s.qratio(z, ps.m);
  };
  return d;
}

// ------------------------------------------------------------------ theta-level
// catalog entries

IdentityDescriptor make_addition_ra() {
  IdentityDescriptor d;
  d.id = "addition_ra";
  d.family = Family::Primitive;
  d.domain = DomainKind::FiniteList;
  d.draw_scalars = {"x", "y", "z", "w"};
  // theta(xz, x/z, yw, y/w)
  //   = (y/z) theta(xy, x/y, zw, z/w) + theta(xw, x/w, yz, y/z)
  d.lhs = [](const PS& ps, EvalCtx& c) {
    const Complex &x = ps.s("x"), &y = ps.s("y"), &z = ps.s("z"), &w = ps.s("w");
    return c.th(x * z) * c.th(x / z) * c.th(y * w) * c.th(y / w);
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const Complex &x = ps.s("x"), &y = ps.s("y"), &z = ps.s("z"), &w = ps.s("w");
    return y / z * c.th(x * y) * c.th(x / y) * c.th(z * w) * c.th(z / w) +
           c.th(x * w) * c.th(x / w) * c.th(y * z) * c.th(y / z);
  };
  return d;
}

IdentityDescriptor make_det_identity_di() {
  IdentityDescriptor d;
  d.id = "det_identity_di";
  d.family = Family::Primitive;
  d.domain = DomainKind::FiniteList;
  d.note = "shape bounds m serve as the shift vector y";
  d.draw_lists = {{"z", 0}};
  d.lhs = [](const PS& ps, EvalCtx& c) {
    return det_identity_product(c, ps.list("z"), ps.m);
  };
  d.rhs = [](const PS&, EvalCtx& c) { return c.one(); };
  d.denom_args = [](const PS& ps, std::vector<Complex>& out) {
    DenomScan s{ps, out};
    s.delta(ps.list("z"));
    s.qratio(ps.list("z"), ps.m);
  };
  return d;
}

// ------------------------------------------------------------------ primitive
// property checks (suite "primitives")

IdentityDescriptor make_ti() {
  IdentityDescriptor d;
  d.id = "ti";
  d.family = Family::Primitive;
  d.domain = DomainKind::FiniteList;
  d.note = "theta inversion: theta(x) = -x theta(1/x)";
  d.draw_scalars = {"x"};
  d.lhs = [](const PS& ps, EvalCtx& c) { return c.th(ps.s("x")); };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    return (ps.s("x") * c.th(ps.s("x").inv())).neg();
  };
  return d;
}

IdentityDescriptor make_tqp() {
  IdentityDescriptor d;
  d.id = "tqp";
  d.family = Family::Primitive;
  d.domain = DomainKind::FiniteList;
  d.note = "quasi-periodicity: theta(px) = -theta(x)/x; needs p != 0";
  d.draw_scalars = {"x"};
  d.lhs = [](const PS& ps, EvalCtx& c) { return c.th(c.p().value() * ps.s("x")); };
  d.rhs = [](const PS& ps, EvalCtx& c) { return (c.th(ps.s("x")) / ps.s("x")).neg(); };
  return d;
}

IdentityDescriptor make_ap() {
  IdentityDescriptor d;
  d.id = "ap";
  d.family = Family::Primitive;
  d.domain = DomainKind::FiniteList;
  d.note = "Pochhammer splitting: (a)_{n+k} = (a)_n (a q^n)_k";
  d.draw_scalars = {"a"};
  d.draw_extra = [](PS& ps, RngStream& rng) {
    ps.ints["nn"] = rng.next_int(0, 5);
    ps.ints["kk"] = rng.next_int(0, 5);
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    return c.poch(ps.s("a"), ps.i("nn") + ps.i("kk"));
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    return c.poch(ps.s("a"), ps.i("nn")) * c.poch(c.qpow(ps.i("nn")) * ps.s("a"), ps.i("kk"));
  };
  return d;
}

IdentityDescriptor make_ep() {
  IdentityDescriptor d;
  d.id = "ep";
  d.family = Family::Primitive;
  d.domain = DomainKind::FiniteList;
  d.note = "Pochhammer reversal: (a)_{n-k} = (-1)^k q^C(k,2) (q^{1-n}/a)^k (a)_n / (q^{1-n}/a)_k";
  d.draw_scalars = {"a"};
  d.draw_extra = [](PS& ps, RngStream& rng) {
    ps.ints["nn"] = rng.next_int(0, 5);
    ps.ints["kk"] = rng.next_int(0, ps.ints["nn"]);
  };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    return c.poch(ps.s("a"), ps.i("nn") - ps.i("kk"));
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const int nn = ps.i("nn"), kk = ps.i("kk");
    Complex u = c.qpow(1 - nn) / ps.s("a");
    Complex r = c.qpow(binom2(kk)) * u.pow_int(kk) * c.poch(ps.s("a"), nn) /
                c.poch_nz(u, kk);
    if (kk % 2 != 0) r = r.neg();
    return r;
  };
  return d;
}

IdentityDescriptor make_ip() {
  IdentityDescriptor d;
  d.id = "ip";
  d.family = Family::Primitive;
  d.domain = DomainKind::FiniteList;
  d.note = "Pochhammer inversion: (a)_n = (-1)^n q^C(n,2) a^n (q^{1-n}/a)_n";
  d.draw_scalars = {"a"};
  d.draw_extra = [](PS& ps, RngStream& rng) { ps.ints["nn"] = rng.next_int(0, 5); };
  d.lhs = [](const PS& ps, EvalCtx& c) { return c.poch(ps.s("a"), ps.i("nn")); };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const int nn = ps.i("nn");
    Complex r = c.qpow(binom2(nn)) * ps.s("a").pow_int(nn) *
                c.poch(c.qpow(1 - nn) / ps.s("a"), nn);
    if (nn % 2 != 0) r = r.neg();
    return r;
  };
  return d;
}

IdentityDescriptor make_qp() {
  IdentityDescriptor d;
  d.id = "qp";
  d.family = Family::Primitive;
  d.domain = DomainKind::FiniteList;
  d.note = "nome shift: (pa)_k = (-1)^k q^{-C(k,2)} a^{-k} (a)_k; needs p != 0";
  d.draw_scalars = {"a"};
  d.draw_extra = [](PS& ps, RngStream& rng) { ps.ints["kk"] = rng.next_int(0, 5); };
  d.lhs = [](const PS& ps, EvalCtx& c) {
    return c.poch(c.p().value() * ps.s("a"), ps.i("kk"));
  };
  d.rhs = [](const PS& ps, EvalCtx& c) {
    const int kk = ps.i("kk");
    Complex r = c.qpow(-binom2(kk)) * ps.s("a").pow_int(-kk) * c.poch(ps.s("a"), kk);
    if (kk % 2 != 0) r = r.neg();
    return r;
  };
  return d;
}

}  // namespace

std::pair<Complex, Complex> evaluate_sides(const IdentityDescriptor& d, const ParameterSet& ps,
                                           const ThetaTruncation& tr, const Real& floor) {
  if (d.constraint_gap && !(d.constraint_gap(ps) < Real::two_pow(-ps.prec() + 16, 64)))
    throw ConstraintViolation(d.id + ": balancing relation not satisfied");
  EvalCtx ctx(ps.p, ps.q, tr, floor);
  return {d.lhs(ps, ctx), d.rhs(ps, ctx)};
}

const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> entries = [] {
    std::vector<IdentityDescriptor> v;
    v.push_back(make_pf_rational());
    v.push_back(make_pf_ww());
    v.push_back(make_pf_epf());
    v.push_back(make_pf_epa());
    v.push_back(make_pf_dn());
    v.push_back(make_pf_dn_alt());
    v.push_back(make_milne_ft());
    v.push_back(make_an_jackson_simplex());
    v.push_back(make_an_jackson_classical());
    v.push_back(make_an_jackson_box());
    v.push_back(make_dn_jackson_simplex());
    v.push_back(make_dn_jackson_classical());
    v.push_back(make_dn_jackson_box());
    v.push_back(make_dn_jackson_box_reversed());
    v.push_back(make_cn_jackson_box());
    v.push_back(make_warnaar_first());
    v.push_back(make_bailey_an_box());
    v.push_back(make_bailey_an_simplex());
    v.push_back(make_bailey_cn_an());
    v.push_back(make_bailey_dn());
    v.push_back(make_bailey_dn_an());
    v.push_back(make_addition_ra());
    v.push_back(make_det_identity_di());
    return v;
  }();
  return entries;
}

const std::vector<IdentityDescriptor>& primitive_checks() {
  static const std::vector<IdentityDescriptor> entries = [] {
    std::vector<IdentityDescriptor> v;
    v.push_back(make_ti());
    v.push_back(make_tqp());
    v.push_back(make_ap());
    v.push_back(make_ep());
    v.push_back(make_ip());
    v.push_back(make_qp());
    return v;
  }();
  return entries;
}

const IdentityDescriptor* find_descriptor(const std::string& id) {
  for (const auto& d : catalog())
    if (d.id == id) return &d;
  for (const auto& d : primitive_checks())
    if (d.id == id) return &d;
  return nullptr;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& d : catalog()) ids.push_back(d.id);
  return ids;
}

std::vector<std::string> primitive_check_ids() {
  std::vector<std::string> ids;
  for (const auto& d : primitive_checks()) ids.push_back(d.id);
  return ids;
}

}  // namespace ehsum
