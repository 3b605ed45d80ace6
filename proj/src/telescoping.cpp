#include "hypersum/telescoping.hpp"

#include <algorithm>

#include "hypersum/roots.hpp"

namespace hypersum {

XYPoly sigma_x(const XYPoly& p, long k) {
  if (k == 0) return p;
  return p.map<QFunc>([k](const QFunc& c) { return c.shift(k); });
}

XYFunc sigma_x(const XYFunc& r, long k) {
  if (k == 0) return r;
  return XYFunc::from_coprime(sigma_x(r.num(), k), sigma_x(r.den(), k));
}

bool is_compatible(const BivariateTerm& t) {
  if (t.f.is_zero() || t.g.is_zero()) return false;
  return sigma_x(t.g) / t.g == t.f.shift(1) / t.f;
}

XYFunc x_shift_ratio(const XYFunc& f, int j) {
  XYFunc acc(1);
  for (int k = 0; k < j; ++k) acc = acc * sigma_x(f, k);
  return acc;
}

std::vector<Rat> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw MathError("rational roots of the zero polynomial");
  std::vector<BigInt> a = primitive_integer_coeffs(p);
  const int d = static_cast<int>(a.size()) - 1;
  if (d <= 0) return {};
  // t = a_d x turns p into a monic integer polynomial: b_k = a_k a_d^{d-1-k}
  std::vector<Rat> b(a.size());
  b[static_cast<std::size_t>(d)] = Rat(1);
  BigInt s = 1;
  for (int k = d - 1; k >= 0; --k) {
    b[static_cast<std::size_t>(k)] = Rat(BigInt(a[static_cast<std::size_t>(k)] * s));
    s *= a[static_cast<std::size_t>(d)];
  }
  std::vector<Rat> out;
  for (long t : integer_roots(QPoly(b))) out.push_back(Rat(BigInt(t), a[static_cast<std::size_t>(d)]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// primitive representative in Q[x][y]: coefficients polynomial in x, coprime, integer
XYPoly primitive_xy(const XYPoly& p) {
  if (p.is_zero()) return p;
  QPoly l(1);
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) l = lcm(l, c.den());
  QPoly g;
  std::vector<QPoly> nums;
  for (const auto& c : p.coeffs()) {
    nums.push_back(c.num() * l.exact_div(c.den()));
    g = gcd(g, nums.back());
  }
  std::vector<QFunc> out;
  BigInt den = 1, num = 0;
  for (auto& n : nums) {
    n = n.exact_div(g);
    for (const auto& c : n.coeffs()) {
      den = big_lcm(den, c.den());
      num = big_gcd(num, c.num());
    }
  }
  Rat s(den, num == 0 ? BigInt(1) : num);
  for (auto& n : nums) out.push_back(QFunc(n * s));
  return XYPoly(out);
}

XYPoly d_dx(const XYPoly& p) {
  return p.map<QFunc>([](const QFunc& c) { return QFunc(c.num().derivative()); });
}

// n d/dx - m d/dy on Q[x][y]
XYPoly directional(const XYPoly& p, long m, long n) {
  return d_dx(p) * QFunc(Rat(n)) - p.derivative() * QFunc(Rat(m));
}

}  // namespace

bool is_integer_linear(const XYPoly& p0) {
  if (p0.is_zero()) throw MathError("is_integer_linear of the zero polynomial");
  XYPoly p = primitive_xy(p0);  // drops the factors in x alone
  if (p.degree() <= 0) return true;
  int d = 0;
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeff(i).is_zero()) d = std::max(d, i + p.coeff(i).num().degree());
  std::vector<Rat> top(static_cast<std::size_t>(d) + 1, Rat(0));
  for (int i = 0; i <= p.degree(); ++i) {
    const QFunc& c = p.coeff(i);
    if (!c.is_zero() && i + c.num().degree() == d) top[static_cast<std::size_t>(d - i)] = c.num().lc();
  }
  const QPoly h(top);
  std::vector<std::pair<long, long>> slopes;
  if (h.degree() < d) slopes.emplace_back(0, 1);
  for (const Rat& r : rational_roots(h)) {
    // x - r y  ~  m x + n y
    if (r.is_zero()) continue;
    if (!r.num().fits_slong_p() || !r.den().fits_slong_p()) continue;
    long m = r.den().get_si(), n = -r.num().get_si();
    if (n < 0) { m = -m; n = -n; }
    slopes.emplace_back(m, n);
  }
  for (auto [m, n] : slopes) {
    XYPoly a = p;
    while (true) {
      XYPoly da = directional(a, m, n);
      if (da.is_zero()) break;
      a = primitive_xy(gcd(a, da));
    }
    if (a.degree() > 0) p = primitive_xy(p.exact_div(a));
    if (p.degree() <= 0) return true;
  }
  return p.degree() <= 0;
}

ExistenceTest existence_test(const BivariateTerm& t) {
  ExistenceTest out;
  out.reduction = modified_ap_reduction(t.g);
  const auto& r = out.reduction.residual;
  out.exists = r.a.is_zero() || is_integer_linear(r.b);
  return out;
}

namespace {

// Fraction-free row echelon over Q[x]; returns pivot columns.
std::vector<int> bareiss_echelon(std::vector<std::vector<QPoly>>& M, int cols) {
  std::vector<int> pivots;
  const std::size_t rows = M.size();
  std::size_t r = 0;
  QPoly prev(1);
  for (int c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    // smallest nonzero pivot keeps entries small
    for (std::size_t i = r; i < rows; ++i) {
      const auto& e = M[i][static_cast<std::size_t>(c)];
      if (e.is_zero()) continue;
      const auto& cur = M[piv][static_cast<std::size_t>(c)];
      if (cur.is_zero() || e.degree() < cur.degree()) piv = i;
    }
    if (M[piv][static_cast<std::size_t>(c)].is_zero()) continue;
    std::swap(M[piv], M[r]);
    const QPoly pv = M[r][static_cast<std::size_t>(c)];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const QPoly f = M[i][static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) {
        auto& e = M[i][static_cast<std::size_t>(j)];
        e = (pv * e - f * M[r][static_cast<std::size_t>(j)]).exact_div(prev);
      }
    }
    prev = pv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct SolveResult {
  int rank = 0;
  std::vector<QPoly> kernel;  // empty when only the trivial solution exists
};

// Nullspace of the system sum_j l_j r_j = 0 in the last unknown, assuming the
// earlier columns are independent.
SolveResult solve_step(const std::vector<ResidualForm<QFunc>>& rs) {
  const std::size_t n = rs.size();
  XYPoly D(QFunc(1));
  for (const auto& r : rs)
    if (!r.a.is_zero()) D = lcm(D, r.b);
  const int dd = D.degree();
  int qdeg = -1;
  for (const auto& r : rs) qdeg = std::max(qdeg, r.q.degree());
  std::vector<XYPoly> nums;
  for (const auto& r : rs) nums.push_back(r.a.is_zero() ? XYPoly() : r.a * D.exact_div(r.b));
  std::vector<std::vector<QPoly>> M;
  auto add_row = [&](auto&& entry) {
    std::vector<QFunc> row;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(entry(j));
      any = any || !row.back().is_zero();
    }
    if (!any) return;
    QPoly l(1);
    for (const auto& e : row)
      if (!e.is_zero()) l = lcm(l, e.den());
    std::vector<QPoly> prow;
    for (const auto& e : row) prow.push_back(e.is_zero() ? QPoly() : e.num() * l.exact_div(e.den()));
    M.push_back(std::move(prow));
  };
  for (int k = 0; k < dd; ++k) add_row([&](std::size_t j) { return nums[j].coeff(k); });
  for (int k = 0; k <= qdeg; ++k) add_row([&](std::size_t j) { return rs[j].q.coeff(k); });

  SolveResult out;
  std::vector<int> piv = bareiss_echelon(M, static_cast<int>(n));
  out.rank = static_cast<int>(piv.size());
  if (out.rank == static_cast<int>(n)) return out;
  for (std::size_t k = 0; k < piv.size(); ++k)
    if (piv[k] != static_cast<int>(k)) throw MathError("telescoper system: earlier orders are dependent");
  // l_{n-1} = 1, back substitution over Q(x)
  std::vector<QFunc> l(n, QFunc());
  l[n - 1] = QFunc(1);
  for (std::size_t k = piv.size(); k-- > 0;) {
    std::vector<QFunc> terms;
    for (std::size_t j = k + 1; j < n; ++j)
      if (!M[k][j].is_zero() && !l[j].is_zero()) terms.push_back(QFunc(M[k][j]) * l[j]);
    l[k] = -balanced_sum(std::move(terms)) / QFunc(M[k][k]);
  }
  QPoly den(1);
  for (const auto& c : l) den = lcm(den, c.den());
  QPoly g;
  std::vector<QPoly> coeffs;
  for (const auto& c : l) {
    coeffs.push_back(c.num() * den.exact_div(c.den()));
    g = gcd(g, coeffs.back());
  }
  BigInt cden = 1, cnum = 0;
  for (auto& c : coeffs) {
    c = c.exact_div(g);
    for (const auto& z : c.coeffs()) {
      cden = big_lcm(cden, z.den());
      cnum = big_gcd(cnum, z.num());
    }
  }
  Rat s(cden, cnum);
  if (coeffs.back().lc().sign() < 0) s = -s;
  for (auto& c : coeffs) c *= s;
  out.kernel = std::move(coeffs);
  return out;
}

}  // namespace

TelescopeResult reduction_ct(const BivariateTerm& t, const TelescopeOptions& opts) {
  if (opts.max_order < 0) throw MathError("max_order must be nonnegative");
  if (!is_compatible(t)) throw MathError("incompatible shift quotients");
  TelescopeResult out;
  ExistenceTest ex = existence_test(t);
  const ReductionResult<QFunc>& r0 = ex.reduction;
  out.kernel_shell = {r0.kernel, r0.shell};
  const Kernel<QFunc>& K = r0.kernel;
  const PhiBasis<QFunc> basis = build_phi_basis_any(K);

  TelescopeStep s0;
  s0.reduced = r0.residual;
  s0.aligned = r0.residual;
  if (opts.want_certificate) out.certificate_parts.push_back(r0.cofactor);
  if (r0.residual.is_zero()) {
    s0.rank = 0;
    out.steps.push_back(s0);
    out.status = TelescopeStatus::Found;
    out.telescoper.coeffs = {QPoly(1)};
    if (opts.combine_certificate && opts.want_certificate) out.combined = r0.cofactor;
    return out;
  }
  if (!ex.exists) {
    out.steps.push_back(s0);
    out.status = TelescopeStatus::NoTelescoper;
    return out;
  }
  s0.rank = 1;
  out.steps.push_back(s0);

  // N = sigma_x(H)/H
  const XYFunc N = t.f * r0.shell / sigma_x(r0.shell);
  XYPoly base = r0.residual.a.is_zero() ? XYPoly(QFunc(1)) : r0.residual.b;
  std::vector<ResidualForm<QFunc>> rs{r0.residual};
  for (int i = 1; i <= opts.max_order; ++i) {
    const ResidualForm<QFunc>& prev = rs.back();
    XYFunc shell = sigma_x(prev.value()) * N;
    TelescopeStep st;
    XYFunc u;
    if (shell.is_zero()) {
      st.reduced.kernel = K;
    } else {
      ReductionResult<QFunc> red = reduce_shell(shell, basis);
      st.reduced = red.residual;
      u = red.cofactor;
    }
    ResidualSum<QFunc> al = align_residual(base, st.reduced, basis);
    st.aligned = al.rewritten;
    if (!st.aligned.a.is_zero()) base = lcm(base, st.aligned.b);
    if (opts.want_certificate) {
      const XYFunc& uprev = out.certificate_parts.back();
      out.certificate_parts.push_back(sigma_x(uprev) * N + u + al.witness);
    }
    rs.push_back(st.aligned);
    SolveResult sol = solve_step(rs);
    st.rank = sol.rank;
    out.steps.push_back(st);
    if (!sol.kernel.empty()) {
      out.status = TelescopeStatus::Found;
      out.telescoper.coeffs = std::move(sol.kernel);
      if (opts.want_certificate && opts.combine_certificate) {
        std::vector<XYFunc> terms;
        for (std::size_t j = 0; j < out.certificate_parts.size(); ++j) {
          const QPoly& c = out.telescoper.coeffs[j];
          if (!c.is_zero()) terms.push_back(out.certificate_parts[j] * XYFunc(QFunc(c)));
        }
        out.combined = balanced_sum(std::move(terms));
      }
      return out;
    }
  }
  out.status = TelescopeStatus::OrderCapExceeded;
  return out;
}

bool verify_telescoper(const BivariateTerm& t, const Telescoper& L, const std::vector<XYFunc>* parts) {
  try {
    if (L.coeffs.empty() || L.coeffs.back().is_zero()) return false;
    if (!is_compatible(t)) return false;
    // P = L(T)/T
    std::vector<XYFunc> terms;
    XYFunc ratio(1);
    for (std::size_t j = 0; j < L.coeffs.size(); ++j) {
      if (j > 0) ratio = ratio * sigma_x(t.f, static_cast<long>(j) - 1);
      if (!L.coeffs[j].is_zero()) terms.push_back(ratio * XYFunc(QFunc(L.coeffs[j])));
    }
    const XYFunc P = balanced_sum(std::move(terms));
    if (parts) {
      if (parts->size() != L.coeffs.size()) return false;
      std::vector<XYFunc> cs;
      for (std::size_t j = 0; j < parts->size(); ++j)
        if (!L.coeffs[j].is_zero()) cs.push_back((*parts)[j] * XYFunc(QFunc(L.coeffs[j])));
      // G = W T with W = sum l_j u_j / shell
      const XYFunc S = kernel_shell(t.g).shell;
      const XYFunc W = balanced_sum(std::move(cs)) / S;
      return P == t.g * W.shift(1) - W;
    }
    if (P.is_zero()) return true;
    return is_summable(t.g * P.shift(1) / P).summable;
  } catch (const MathError&) {
    return false;
  }
}

}  // namespace hypersum
