#include "hypersum/residual.hpp"

#include "hypersum/partial_fractions.hpp"

namespace hypersum {

template <class F>
Absorbed<F> kernel_absorb_v(const Poly<F>& p, int m, const PhiBasis<F>& basis) {
  const Kernel<F>& K = basis.kernel;
  if (K.is_one()) throw MathError("kernel_absorb_v requires K != 1");
  if (m < 0) throw MathError("kernel_absorb_v: negative order");
  Absorbed<F> out;
  if (p.is_zero()) return out;
  std::vector<RatFunc<F>> w;
  Poly<F> acc = p;
  if (!K.v.is_constant()) {
    for (int k = m; k >= 1; --k) {
      // acc / w_k = K sigma(s / w_{k-1}) - s / w_{k-1} + t / w_{k-1}
      // with sigma(s) u + (t - s) sigma^k(v) = acc
      const Poly<F> sv = K.v.shift(k);
      ExtGcd<F> e = extended_euclid(K.u.rem(sv), sv);
      if (!e.g.is_one()) throw MathError("kernel is not shift-reduced");
      Poly<F> A = (acc.rem(sv) * e.s).rem(sv);
      Poly<F> B = (acc - A * K.u).exact_div(sv);
      Poly<F> s = A.shift(-1);
      if (!s.is_zero()) w.emplace_back(s, shifted_product(K.v, 0, k - 1));
      acc = B + s;
    }
  }
  PolyReduction<F> pr = polynomial_reduction(acc, basis);
  w.emplace_back(pr.f);
  out.q = std::move(pr.q);
  out.witness = balanced_sum(std::move(w));
  return out;
}

template <class F>
Absorbed<F> kernel_absorb_v(const Poly<F>& p, int m, const Kernel<F>& K) {
  return kernel_absorb_v(p, m, build_phi_basis(K));
}

template <class F>
Absorbed<F> kernel_absorb_u(const Poly<F>& p, int m, const PhiBasis<F>& basis) {
  const Kernel<F>& K = basis.kernel;
  if (K.is_one()) throw MathError("kernel_absorb_u requires K != 1");
  if (m < 1) throw MathError("kernel_absorb_u: order must be positive");
  Absorbed<F> out;
  if (p.is_zero()) return out;
  std::vector<RatFunc<F>> w;
  Poly<F> accv;
  Poly<F> cur = p;
  for (int k = m; k >= 1 && !cur.is_zero(); --k) {
    // cur/z_k = K sigma(-cur/z_k) + cur/z_k + sigma(cur)/(v z_{k-1})
    const Poly<F> zk = shifted_product(K.u, -k, -1);
    w.push_back(-RatFunc<F>(cur, zk));
    const Poly<F> zk1 = shifted_product(K.u, -(k - 1), -1);
    auto pf = partial_fraction_numerators(cur.shift(1), {K.v, zk1});
    accv += pf.nums[0] + pf.poly_part * K.v;
    cur = std::move(pf.nums[1]);
  }
  PolyReduction<F> pr = polynomial_reduction(accv, basis);
  w.emplace_back(pr.f);
  out.q = std::move(pr.q);
  out.witness = balanced_sum(std::move(w));
  return out;
}

template <class F>
Absorbed<F> kernel_absorb_u(const Poly<F>& p, int m, const Kernel<F>& K) {
  return kernel_absorb_u(p, m, build_phi_basis(K));
}

template <class F>
Congruent<F> shift_congruence(const RatFunc<F>& f, long ell, const Kernel<F>& K) {
  if (K.u.is_zero()) throw MathError("shift_congruence: zero kernel");
  std::vector<RatFunc<F>> w;
  RatFunc<F> cur = f;
  const RatFunc<F> Kv = K.value();
  if (ell > 0) {
    for (long s = 0; s < ell; ++s) {
      w.push_back(-cur);
      cur = cur.shift(1) * Kv;
    }
  } else {
    const RatFunc<F> inv = Kv.shift(-1).inverse();
    for (long s = 0; s < -ell; ++s) {
      cur = cur.shift(-1) * inv;
      w.push_back(cur);
    }
  }
  return {cur, balanced_sum(std::move(w))};
}

namespace {

template <class F>
Relocated<F> relocate_unchecked(const Poly<F>& a, const Poly<F>& b, long ell, const PhiBasis<F>& basis) {
  const Kernel<F>& K = basis.kernel;
  Relocated<F> out;
  if (a.is_zero()) return out;
  if (K.is_one()) {
    // polynomials are summable; the proper part just moves
    auto [P, a1] = a.divmod(b);
    PolyReduction<F> pr = polynomial_reduction(P, basis);
    Congruent<F> cg = shift_congruence(RatFunc<F>(a1, b), ell, K);
    out.c = a1.shift(ell);
    out.q = std::move(pr.q);
    out.witness = RatFunc<F>(pr.f) + cg.witness;
    return out;
  }
  if (ell == 0) {
    auto [P, c] = a.divmod(b);
    PolyReduction<F> pr = polynomial_reduction(P * K.v, basis);
    out.c = std::move(c);
    out.q = std::move(pr.q);
    out.witness = RatFunc<F>(pr.f);
    return out;
  }
  const Poly<F> sb = b.shift(ell);
  std::vector<RatFunc<F>> w;
  // witness of the shift congruence, term by term
  RatFunc<F> cur(a, b);
  const RatFunc<F> Kv = K.value();
  if (ell > 0) {
    for (long s = 0; s < ell; ++s) {
      w.push_back(-cur);
      if (s + 1 < ell) cur = cur.shift(1) * Kv;
    }
    const Poly<F> V = shifted_product(K.v, 0, ell - 1);
    const Poly<F> U = shifted_product(K.u, 0, ell - 1);
    auto pf = partial_fraction_numerators(a.shift(ell) * U, {sb, V});
    Absorbed<F> ab = kernel_absorb_v(pf.nums[1] + pf.poly_part * V, static_cast<int>(ell - 1), basis);
    out.c = std::move(pf.nums[0]);
    out.q = std::move(ab.q);
    w.push_back(ab.witness);
  } else {
    const long m = -ell;
    const RatFunc<F> inv = Kv.shift(-1).inverse();
    for (long s = 0; s < m; ++s) {
      cur = cur.shift(-1) * inv;
      w.push_back(cur);
    }
    const Poly<F> Z = shifted_product(K.u, -m, -1);
    const Poly<F> Vm = shifted_product(K.v, -m, -1);
    auto pf = partial_fraction_numerators(a.shift(-m) * Vm, {sb, Z});
    Absorbed<F> ab = kernel_absorb_u(pf.nums[1] + pf.poly_part * Z, static_cast<int>(m), basis);
    out.c = std::move(pf.nums[0]);
    out.q = std::move(ab.q);
    w.push_back(ab.witness);
  }
  out.witness = balanced_sum(std::move(w));
  return out;
}

template <class F>
ResidualForm<F> make_residual(const RatFunc<F>& frac, const Poly<F>& q, const Kernel<F>& K) {
  ResidualForm<F> r;
  r.a = frac.num();
  r.b = frac.den();
  r.q = q;
  r.kernel = K;
  return r;
}

}  // namespace

template <class F>
Relocated<F> relocate_fraction(const Poly<F>& a, const Poly<F>& b, long ell, const PhiBasis<F>& basis) {
  const Kernel<F>& K = basis.kernel;
  if (b.is_zero()) throw MathError("relocate_fraction: zero denominator");
  if (!is_shift_free(b) || !is_strongly_prime(b, K) || !is_strongly_prime(b.shift(ell), K)) {
    throw MathError("relocate_fraction: denominator is not shift-free and strongly prime");
  }
  return relocate_unchecked(a, b, ell, basis);
}

template <class F>
ResidualSum<F> align_residual(const Poly<F>& base, const ResidualForm<F>& s, const PhiBasis<F>& basis) {
  const Kernel<F>& K = basis.kernel;
  ResidualSum<F> out;
  if (s.a.is_zero() || s.b.is_constant() || base.is_constant()) {
    out.rewritten = s;
    out.rewritten.kernel = K;
    return out;
  }
  ShiftCoprimeDecomp<F> d = shift_coprime_decomposition(s.b, base);
  if (d.parts.empty()) {
    out.rewritten = s;
    return out;
  }
  std::vector<Poly<F>> factors{d.gtilde};
  for (const auto& part : d.parts) factors.push_back(pow(part.p, static_cast<unsigned>(part.m)).shift(part.ell));
  auto pf = partial_fraction_numerators(s.a, factors);
  std::vector<RatFunc<F>> fracs;
  if (!pf.nums[0].is_zero()) fracs.emplace_back(pf.nums[0], d.gtilde);
  Poly<F> q = s.q;
  std::vector<RatFunc<F>> w;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& part = d.parts[i];
    Relocated<F> rel = relocate_unchecked(pf.nums[i + 1], factors[i + 1], -part.ell, basis);
    if (!rel.c.is_zero()) fracs.emplace_back(rel.c, pow(part.p, static_cast<unsigned>(part.m)));
    q += rel.q;
    w.push_back(rel.witness);
  }
  out.rewritten = make_residual(balanced_sum(std::move(fracs)), q, K);
  out.witness = balanced_sum(std::move(w));
  return out;
}

template <class F>
ResidualSum<F> residual_add(const ResidualForm<F>& r, const ResidualForm<F>& s, const PhiBasis<F>& basis) {
  if (!(r.kernel == s.kernel) || !(r.kernel == basis.kernel)) {
    throw MathError("residual_add: kernel mismatch");
  }
  ResidualSum<F> out = align_residual(r.b, s, basis);
  out.sum = make_residual(RatFunc<F>(r.a, r.b) + RatFunc<F>(out.rewritten.a, out.rewritten.b),
                          r.q + out.rewritten.q, r.kernel);
  return out;
}

template <class F>
ResidualSum<F> residual_add(const ResidualForm<F>& r, const ResidualForm<F>& s) {
  return residual_add(r, s, build_phi_basis_any(r.kernel));
}

#define HYPERSUM_INSTANTIATE(F)                                                                             \
  template Absorbed<F> kernel_absorb_v(const Poly<F>&, int, const PhiBasis<F>&);                            \
  template Absorbed<F> kernel_absorb_v(const Poly<F>&, int, const Kernel<F>&);                              \
  template Absorbed<F> kernel_absorb_u(const Poly<F>&, int, const PhiBasis<F>&);                            \
  template Absorbed<F> kernel_absorb_u(const Poly<F>&, int, const Kernel<F>&);                              \
  template Congruent<F> shift_congruence(const RatFunc<F>&, long, const Kernel<F>&);                        \
  template Relocated<F> relocate_fraction(const Poly<F>&, const Poly<F>&, long, const PhiBasis<F>&);        \
  template ResidualSum<F> align_residual(const Poly<F>&, const ResidualForm<F>&, const PhiBasis<F>&);       \
  template ResidualSum<F> residual_add(const ResidualForm<F>&, const ResidualForm<F>&, const PhiBasis<F>&); \
  template ResidualSum<F> residual_add(const ResidualForm<F>&, const ResidualForm<F>&);

HYPERSUM_INSTANTIATE(Rat)
HYPERSUM_INSTANTIATE(QFunc)

#undef HYPERSUM_INSTANTIATE

}  // namespace hypersum
