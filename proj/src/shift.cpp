#include "hypersum/shift.hpp"

#include <algorithm>
#include <functional>

namespace hypersum {

template <class F>
Kernel<F> Kernel<F>::make(Poly<F> u, Poly<F> v) {
  if (u.is_zero() || v.is_zero()) throw MathError("kernel with zero numerator or denominator");
  const F inv = F(1) / v.lc();
  u *= inv;
  v *= inv;
  if (!gcd(u, v).is_one()) throw MathError("kernel numerator and denominator are not coprime");
  return Kernel{std::move(u), std::move(v)};
}

template <class F>
bool is_shift_free(const Poly<F>& b) {
  if (b.is_zero()) throw MathError("is_shift_free of the zero polynomial");
  for (long l : dispersion_set(b, b)) {
    if (l != 0) return false;
  }
  return true;
}

template <class F>
bool is_shift_reduced(const Poly<F>& u, const Poly<F>& v) {
  return dispersion_set(u, v).empty();
}

template <class F>
bool is_strongly_prime(const Poly<F>& p, const Kernel<F>& K) {
  if (p.is_zero()) throw MathError("is_strongly_prime of the zero polynomial");
  if (p.is_constant()) return true;
  for (long l : dispersion_set(p, K.u)) {
    if (l <= 0) return false;
  }
  for (long l : dispersion_set(p, K.v)) {
    if (l >= 0) return false;
  }
  return true;
}

template <class F>
KernelShell<F> kernel_shell(const RatFunc<F>& g) {
  if (g.is_zero()) throw MathError("kernel_shell of zero");
  Poly<F> num = g.num(), den = g.den();
  RatFunc<F> shell(1);
  while (true) {
    std::vector<long> ds = dispersion_set(num, den);
    ds.erase(std::remove(ds.begin(), ds.end(), 0L), ds.end());
    if (ds.empty()) break;
    std::sort(ds.begin(), ds.end(), std::greater<>());
    for (long l : ds) {
      Poly<F> d = gcd(num, den.shift(l));
      if (d.is_constant()) continue;
      num = num.exact_div(d);
      if (l > 0) {
        // d / sigma^{-l}(d) = sigma(S)/S with S = prod_{j=1}^{l} sigma^{-j}(d)
        den = den.exact_div(d.shift(-l));
        shell *= RatFunc<F>(shifted_product(d, -l, -1));
      } else {
        // d / sigma^{m}(d) = sigma(S)/S with S = 1 / prod_{j=0}^{m-1} sigma^j(d)
        const long m = -l;
        den = den.exact_div(d.shift(m));
        shell /= RatFunc<F>(shifted_product(d, 0, m - 1));
      }
    }
  }
  return {Kernel<F>::make(num, den), shell};
}

template <class F>
ShiftCoprimeDecomp<F> shift_coprime_decomposition(const Poly<F>& g, const Poly<F>& f) {
  if (g.is_zero() || f.is_zero()) throw MathError("shift_coprime_decomposition of zero");
  if (!is_shift_free(g) || !is_shift_free(f)) {
    throw MathError("shift_coprime_decomposition needs shift-free inputs");
  }
  ShiftCoprimeDecomp<F> out{g, {}};
  if (g.is_constant() || f.is_constant()) return out;
  const Poly<F> fs = squarefree_part(f);
  for (long l : dispersion_set(g, f)) {
    if (l == 0) continue;
    const Poly<F> sf = fs.shift(l);
    Poly<F> block(1);
    Poly<F> d = gcd(out.gtilde, sf);
    while (!d.is_constant()) {
      block *= d;
      out.gtilde = out.gtilde.exact_div(d);
      d = gcd(out.gtilde, d);
    }
    for (auto& [pk, k] : squarefree_decomposition(block.shift(-l))) {
      out.parts.push_back({pk, l, k});
    }
  }
  return out;
}

template <class F>
std::vector<Poly<F>> gcd_free_basis(const std::vector<Poly<F>>& polys) {
  std::vector<Poly<F>> basis;
  std::vector<Poly<F>> todo;
  for (const auto& p : polys) {
    if (!p.is_zero() && !p.is_constant()) todo.push_back(squarefree_part(p));
  }
  while (!todo.empty()) {
    Poly<F> h = std::move(todo.back());
    todo.pop_back();
    if (h.is_constant()) continue;
    h = h.monic();
    bool placed = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Poly<F> g = gcd(h, basis[k]);
      if (g.is_constant()) continue;
      placed = true;
      if (g == h && g == basis[k]) break;
      Poly<F> bk = std::move(basis[k]);
      basis.erase(basis.begin() + static_cast<long>(k));
      todo.push_back(bk.exact_div(g));
      todo.push_back(h.exact_div(g));
      todo.push_back(g);
      break;
    }
    if (!placed) basis.push_back(std::move(h));
  }
  return basis;
}

template <class F>
ShiftBasis<F> shift_basis(const std::vector<Poly<F>>& polys) {
  std::vector<Poly<F>> basis = gcd_free_basis(polys);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i; j < basis.size() && !changed; ++j) {
        for (long l : dispersion_set(basis[i], basis[j])) {
          if (i == j && l == 0) continue;
          Poly<F> sj = basis[j].shift(l);
          Poly<F> d = gcd(basis[i], sj);
          if (d == basis[i] && d == sj) continue;
          std::vector<Poly<F>> next = basis;
          next.push_back(d);
          next.push_back(d.shift(-l));
          basis = gcd_free_basis(next);
          changed = true;
          break;
        }
      }
    }
  }
  ShiftBasis<F> out;
  for (auto& g : basis) {
    bool found = false;
    for (std::size_t c = 0; c < out.reps.size() && !found; ++c) {
      std::vector<long> ds = dispersion_set(g, out.reps[c]);
      if (ds.empty()) continue;
      out.elems.push_back({g, c, ds.front()});
      found = true;
    }
    if (!found) {
      out.reps.push_back(g);
      out.elems.push_back({g, out.reps.size() - 1, 0});
    }
  }
  return out;
}

#define HYPERSUM_INSTANTIATE(F)                                                           \
  template struct Kernel<F>;                                                              \
  template bool is_shift_free(const Poly<F>&);                                            \
  template bool is_shift_reduced(const Poly<F>&, const Poly<F>&);                         \
  template bool is_strongly_prime(const Poly<F>&, const Kernel<F>&);                      \
  template KernelShell<F> kernel_shell(const RatFunc<F>&);                                \
  template ShiftCoprimeDecomp<F> shift_coprime_decomposition(const Poly<F>&, const Poly<F>&); \
  template std::vector<Poly<F>> gcd_free_basis(const std::vector<Poly<F>>&);              \
  template ShiftBasis<F> shift_basis(const std::vector<Poly<F>>&);

HYPERSUM_INSTANTIATE(Rat)
HYPERSUM_INSTANTIATE(QFunc)

#undef HYPERSUM_INSTANTIATE

}  // namespace hypersum
