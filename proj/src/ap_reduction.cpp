#include "hypersum/ap_reduction.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "hypersum/partial_fractions.hpp"

namespace hypersum {

template <class F>
Poly<F> phi_K(const Poly<F>& p, const Kernel<F>& K) {
  if (K.is_one()) throw MathError("phi_K is not injective for K = 1");
  return K.u * p.shift(1) - K.v * p;
}

namespace {

template <class F>
Poly<F> phi_any(const Poly<F>& p, const Kernel<F>& K) {
  return K.u * p.shift(1) - K.v * p;
}

template <class F>
Poly<F> ymono(int k) {
  return Poly<F>::monomial(F(1), k);
}

}  // namespace

// ---------------------------------------------------------------------------
// PhiBasis

template <class F>
std::optional<Poly<F>> PhiBasis<F>::generic_preimage(int d) const {
  switch (case_id) {
    case 0:
      return d >= 0 ? std::optional(ymono<F>(d + 1)) : std::nullopt;
    case 1:
      return d >= beta ? std::optional(ymono<F>(d - beta)) : std::nullopt;
    case 2:
      return d >= alpha1 ? std::optional(ymono<F>(d - alpha1)) : std::nullopt;
    case 3:
      if (d == beta) return Poly<F>(1);
      return d >= alpha1 ? std::optional(ymono<F>(d - alpha1 + 1)) : std::nullopt;
    case 4:
      return d >= alpha1 - 1 ? std::optional(ymono<F>(d - alpha1 + 1)) : std::nullopt;
    case 5: {
      const long t = *as_integer(*tau);
      if (d == alpha1 + t - 1) return std::nullopt;
      return d >= alpha1 - 1 ? std::optional(ymono<F>(d - alpha1 + 1)) : std::nullopt;
    }
    default:
      throw MathError("invalid phi basis case");
  }
}

template <class F>
const typename PhiBasis<F>::Row* PhiBasis<F>::row(int d) const {
  if (d < 0 || d > max_degree()) throw MathError("phi basis row outside materialised range");
  const auto& r = rows_[static_cast<std::size_t>(d)];
  return r ? &*r : nullptr;
}

template <class F>
PhiBasis<F> PhiBasis<F>::extended_to(int degree) const {
  PhiBasis out = *this;
  for (int d = max_degree() + 1; d <= degree; ++d) {
    std::optional<Poly<F>> pre;
    if (case_id == 5 && !special_image.is_zero() && d == special_image.degree()) {
      out.rows_.push_back(Row{special_image, special_preimage});
      continue;
    }
    pre = generic_preimage(d);
    if (!pre) {
      out.rows_.emplace_back(std::nullopt);
      continue;
    }
    Poly<F> img = phi_any(*pre, kernel);
    if (img.degree() != d) throw MathError("phi basis row has unexpected degree");
    out.rows_.push_back(Row{std::move(img), std::move(*pre)});
  }
  return out;
}

template <class F>
std::vector<Poly<F>> PhiBasis<F>::preimages() const {
  std::vector<Poly<F>> out;
  for (const auto& r : rows_)
    if (r) out.push_back(r->preimage);
  return out;
}

template <class F>
PhiBasis<F> build_phi_basis_any(const Kernel<F>& K) {
  PhiBasis<F> b;
  b.kernel = K;
  b.alpha1 = K.u.degree();
  b.alpha2 = K.v.degree();
  if (K.is_one()) {
    b.case_id = 0;
    return b.extended_to(4);
  }
  const Poly<F> vu = K.v - K.u;
  b.beta = vu.degree();
  b.tau = vu.lc() / K.u.lc();
  const int a1 = b.alpha1;
  std::set<int>& W = b.complement_exponents;
  if (b.beta > a1) {
    b.case_id = 1;
    for (int i = 0; i < b.alpha2; ++i) W.insert(i);
  } else if (b.beta == a1) {
    b.case_id = 2;
    for (int i = 0; i < a1; ++i) W.insert(i);
  } else if (b.beta < a1 - 1) {
    b.case_id = 3;
    for (int i = 0; i < a1; ++i)
      if (i != b.beta) W.insert(i);
  } else {
    std::optional<long> t = as_integer(*b.tau);
    if (!t || *t <= 0) {
      b.case_id = 4;
      for (int i = 0; i < a1 - 1; ++i) W.insert(i);
    } else {
      b.case_id = 5;
      if (*t > std::numeric_limits<int>::max() / 4) throw MathError("tau_K too large");
      const int T = static_cast<int>(*t);
      // rows below alpha1 + tau - 1 are all ordinary
      PhiBasis<F> tmp = b.extended_to(a1 + T - 2);
      Poly<F> img = phi_any(ymono<F>(T), K);
      Poly<F> pre = ymono<F>(T);
      for (int d = img.degree(); d >= 0 && !img.is_zero(); --d) {
        if (d > tmp.max_degree()) continue;
        const auto* r = tmp.row(d);
        if (!r) continue;
        F c = img.coeff(d);
        if (c.is_zero()) continue;
        c /= r->image.lc();
        img -= r->image * c;
        pre -= r->preimage * c;
      }
      if (img.is_zero() || img.degree() >= a1 - 1) throw MathError("case 5 reduction failed");
      b.special_image = img;
      b.special_preimage = pre;
      for (int i = 0; i < a1 - 1; ++i)
        if (i != img.degree()) W.insert(i);
      W.insert(a1 + T - 1);
    }
  }
  int top = std::max({b.alpha1, b.alpha2, b.beta}) + 2;
  if (!W.empty()) top = std::max(top, *W.rbegin() + 1);
  return b.extended_to(top);
}

template <class F>
PhiBasis<F> build_phi_basis(const Kernel<F>& K) {
  if (K.is_one()) throw MathError("build_phi_basis requires K != 1");
  return build_phi_basis_any(K);
}

template <class F>
PolyReduction<F> polynomial_reduction(const Poly<F>& p, const PhiBasis<F>& basis) {
  PolyReduction<F> out;
  if (p.is_zero()) return out;
  const PhiBasis<F>* B = &basis;
  PhiBasis<F> ext;
  if (p.degree() > basis.max_degree()) {
    ext = basis.extended_to(p.degree());
    B = &ext;
  }
  std::vector<F> c = p.coeffs();
  std::vector<F> qc(c.size(), F(0));
  for (int d = p.degree(); d >= 0; --d) {
    F t = c[static_cast<std::size_t>(d)];
    if (t.is_zero()) continue;
    const auto* r = B->row(d);
    if (!r) {
      qc[static_cast<std::size_t>(d)] = t;
      continue;
    }
    t /= r->image.lc();
    const auto& ic = r->image.coeffs();
    for (int j = 0; j <= d; ++j) {
      if (!ic[static_cast<std::size_t>(j)].is_zero()) c[static_cast<std::size_t>(j)] -= t * ic[static_cast<std::size_t>(j)];
    }
    out.f += r->preimage * t;
  }
  out.q = Poly<F>(std::move(qc));
  return out;
}

// ---------------------------------------------------------------------------
// Residual forms and shell reduction

template <class F>
RatFunc<F> ResidualForm<F>::value() const {
  return RatFunc<F>(a, b) + RatFunc<F>(q, kernel.v);
}

template <class F>
bool check_congruence(const RatFunc<F>& S, const Kernel<F>& K, const RatFunc<F>& w,
                      const RatFunc<F>& value) {
  return (S - (K.value() * w.shift(1) - w) - value).is_zero();
}

namespace {

// Splits n/den into A/cpow + B/rest + P where cpow is the part of den built
// from the squarefree s.
template <class F>
struct Split {
  Poly<F> cpow, rest, A, B, P;
};

template <class F>
Split<F> split_off(const RatFunc<F>& X, const Poly<F>& s) {
  Split<F> out;
  out.cpow = power_part(X.den(), s).first;
  out.rest = X.den().exact_div(out.cpow);
  auto pf = partial_fraction_numerators(X.num(), {out.cpow, out.rest});
  out.P = std::move(pf.poly_part);
  out.A = std::move(pf.nums[0]);
  out.B = std::move(pf.nums[1]);
  return out;
}

}  // namespace

template <class F>
ShellReduction<F> shell_reduction_any(const RatFunc<F>& S, const Kernel<F>& K) {
  ShellReduction<F> out;
  const Poly<F>& D = S.den();
  const Poly<F>& u = K.u;
  const Poly<F>& v = K.v;
  if (D.is_one()) {
    out.p = S.num() * v;
    return out;
  }
  const ShiftBasis<F> sb = shift_basis<F>({D, u, v});
  const std::size_t nc = sb.reps.size();
  constexpr long kNone = std::numeric_limits<long>::min();
  std::vector<long> minpos(nc, kNone), maxU(nc, kNone), minV(nc, kNone);
  struct Block {
    std::size_t elem;
    Poly<F> pw;
  };
  std::vector<Block> blocks;
  std::vector<Poly<F>> factors;
  for (std::size_t i = 0; i < sb.elems.size(); ++i) {
    const auto& e = sb.elems[i];
    auto [pw, m] = power_part(D, e.g);
    if (m > 0) {
      blocks.push_back({i, pw});
      factors.push_back(pw);
      if (minpos[e.cls] == kNone || e.pos < minpos[e.cls]) minpos[e.cls] = e.pos;
    }
    if (e.g.divides(u) && (maxU[e.cls] == kNone || e.pos > maxU[e.cls])) maxU[e.cls] = e.pos;
    if (e.g.divides(v) && (minV[e.cls] == kNone || e.pos < minV[e.cls])) minV[e.cls] = e.pos;
  }
  std::vector<long> target(nc, kNone);
  for (std::size_t c = 0; c < nc; ++c) {
    if (minpos[c] == kNone) continue;
    if (maxU[c] != kNone && minV[c] != kNone) throw MathError("kernel is not shift-reduced");
    target[c] = minpos[c];
    if (maxU[c] != kNone) target[c] = std::max(minpos[c], maxU[c] + 1);
    if (minV[c] != kNone) target[c] = std::min(minpos[c], minV[c] - 1);
  }

  auto pf = partial_fraction_numerators(S.num(), factors);
  Poly<F> p = pf.poly_part * v;
  RatFunc<F> W;
  RatFunc<F> rest_sum;
  const RatFunc<F> Kv = K.value();
  const RatFunc<F> invKm1 = Kv.shift(-1).inverse();
  const Poly<F> um1 = u.shift(-1);

  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (pf.nums[bi].is_zero()) continue;
    const auto& e = sb.elems[blocks[bi].elem];
    const Poly<F>& rep = sb.reps[e.cls];
    const long t = target[e.cls];
    long cur = e.pos;
    RatFunc<F> X(pf.nums[bi], blocks[bi].pw);
    while (cur != t && !X.is_zero()) {
      if (cur < t) {
        // X = K sigma(-X) + X + sigma(X) K
        W -= X;
        ++cur;
        Split<F> sp = split_off(X.shift(1) * Kv, rep.shift(cur));
        // sp.rest divides v
        p += sp.B * v.exact_div(sp.rest) + sp.P * v;
        X = sp.A.is_zero() ? RatFunc<F>() : RatFunc<F>(sp.A, sp.cpow);
      } else {
        // X = K sigma(r) - r + r with r = sigma^{-1}(X) sigma^{-1}(1/K)
        RatFunc<F> r = X.shift(-1) * invKm1;
        W += r;
        --cur;
        Split<F> sp = split_off(r, rep.shift(cur));
        // sp.rest divides sigma^{-1}(u); C/sigma^{-1}(u) = K sigma(w) - w + sigma(C)/v, w = -C/sigma^{-1}(u)
        Poly<F> C = sp.B * um1.exact_div(sp.rest);
        if (!C.is_zero()) {
          W -= RatFunc<F>(C, um1);
          p += C.shift(1);
        }
        p += sp.P * v;
        X = sp.A.is_zero() ? RatFunc<F>() : RatFunc<F>(sp.A, sp.cpow);
      }
    }
    rest_sum += X;
  }
  auto [quo, a] = rest_sum.num().divmod(rest_sum.den());
  p += quo * v;
  out.S1 = W;
  out.b = rest_sum.den();
  out.a = a;
  out.p = p;
  return out;
}

template <class F>
ShellReduction<F> shell_reduction(const RatFunc<F>& S, const Kernel<F>& K) {
  if (K.is_one()) throw MathError("shell_reduction requires K != 1");
  if (S.is_zero()) throw MathError("shell_reduction of a zero shell");
  return shell_reduction_any(S, K);
}

template <class F>
ReductionResult<F> reduce_shell(const RatFunc<F>& S, const PhiBasis<F>& basis) {
  const Kernel<F>& K = basis.kernel;
  ShellReduction<F> sr = shell_reduction_any(S, K);
  PolyReduction<F> pr = polynomial_reduction(sr.p, basis);
  ReductionResult<F> out;
  out.kernel = K;
  out.shell = S;
  out.cofactor = sr.S1 + RatFunc<F>(pr.f);
  out.residual = ResidualForm<F>{sr.a, sr.b, pr.q, K};
  return out;
}

template <class F>
ReductionResult<F> rational_reduction_full(const RatFunc<F>& S) {
  Kernel<F> one;
  return reduce_shell(S, build_phi_basis_any(one));
}

template <class F>
ResidualForm<F> rational_reduction(const RatFunc<F>& S) {
  return rational_reduction_full(S).residual;
}

template <class F>
ReductionResult<F> modified_ap_reduction(const RatFunc<F>& g) {
  if (g.is_zero()) throw MathError("modified_ap_reduction of a zero shift quotient");
  KernelShell<F> ks = kernel_shell(g);
  return reduce_shell(ks.shell, build_phi_basis_any(ks.kernel));
}

template <class F>
Summability<F> is_summable(const RatFunc<F>& g) {
  Summability<F> s;
  s.reduction = modified_ap_reduction(g);
  s.summable = s.reduction.residual.is_zero();
  return s;
}

#define HYPERSUM_INSTANTIATE(F)                                                                    \
  template Poly<F> phi_K(const Poly<F>&, const Kernel<F>&);                                        \
  template class PhiBasis<F>;                                                                      \
  template PhiBasis<F> build_phi_basis(const Kernel<F>&);                                          \
  template PhiBasis<F> build_phi_basis_any(const Kernel<F>&);                                      \
  template PolyReduction<F> polynomial_reduction(const Poly<F>&, const PhiBasis<F>&);              \
  template struct ResidualForm<F>;                                                                 \
  template bool check_congruence(const RatFunc<F>&, const Kernel<F>&, const RatFunc<F>&,           \
                                 const RatFunc<F>&);                                               \
  template ShellReduction<F> shell_reduction_any(const RatFunc<F>&, const Kernel<F>&);             \
  template ShellReduction<F> shell_reduction(const RatFunc<F>&, const Kernel<F>&);                 \
  template ReductionResult<F> reduce_shell(const RatFunc<F>&, const PhiBasis<F>&);                 \
  template ReductionResult<F> rational_reduction_full(const RatFunc<F>&);                          \
  template ResidualForm<F> rational_reduction(const RatFunc<F>&);                                  \
  template ReductionResult<F> modified_ap_reduction(const RatFunc<F>&);                            \
  template Summability<F> is_summable(const RatFunc<F>&);

HYPERSUM_INSTANTIATE(Rat)
HYPERSUM_INSTANTIATE(QFunc)

#undef HYPERSUM_INSTANTIATE

}  // namespace hypersum
