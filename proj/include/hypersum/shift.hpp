#pragma once

// Shift operator, dispersion-based predicates, kernel/shell decomposition and
// shift-coprime decompositions over F in {Rat, QFunc}.

#include <vector>

#include "hypersum/roots.hpp"

namespace hypersum {

template <class F>
Poly<F> shift_y(const Poly<F>& p, long ell) {
  return p.shift(ell);
}

/// K = u/v with gcd(u, v) = 1, v monic, u coprime to every shift of v.
template <class F>
struct Kernel {
  Poly<F> u{1};
  Poly<F> v{1};

  /// Validates and normalises (v monic).
  static Kernel make(Poly<F> u, Poly<F> v);
  bool is_one() const { return u.is_one() && v.is_one(); }
  RatFunc<F> value() const { return RatFunc<F>::from_coprime(u, v); }
  friend bool operator==(const Kernel& a, const Kernel& b) { return a.u == b.u && a.v == b.v; }
};

template <class F>
struct KernelShell {
  Kernel<F> kernel;
  RatFunc<F> shell;
};

template <class F>
struct ShiftPart {
  Poly<F> p;  // monic factor of f
  long ell;   // nonzero
  int m;      // multiplicity
};

template <class F>
struct ShiftCoprimeDecomp {
  Poly<F> gtilde;
  std::vector<ShiftPart<F>> parts;
};

template <class F>
bool is_shift_free(const Poly<F>& b);

template <class F>
bool is_shift_reduced(const Poly<F>& u, const Poly<F>& v);

template <class F>
bool is_strongly_prime(const Poly<F>& p, const Kernel<F>& K);

/// g = K * sigma(S) / S with K shift-reduced.
template <class F>
KernelShell<F> kernel_shell(const RatFunc<F>& g);

/// g = gtilde * prod sigma^{ell_i}(p_i^{m_i}) with gtilde shift-coprime to f.
template <class F>
ShiftCoprimeDecomp<F> shift_coprime_decomposition(const Poly<F>& g, const Poly<F>& f);

/// Pairwise coprime, squarefree, monic, nonconstant polynomials whose
/// products give the squarefree part of every input.
template <class F>
std::vector<Poly<F>> gcd_free_basis(const std::vector<Poly<F>>& polys);

/// gcd-free basis refined so that any two elements are either shifts of each
/// other or shift-coprime, grouped into shift classes.
template <class F>
struct ShiftBasis {
  struct Elem {
    Poly<F> g;
    std::size_t cls;
    long pos;  // g == reps[cls].shift(pos)
  };
  std::vector<Elem> elems;
  std::vector<Poly<F>> reps;
};

template <class F>
ShiftBasis<F> shift_basis(const std::vector<Poly<F>>& polys);

/// Largest power of the squarefree polynomial s dividing p, as (power, exponent).
template <class F>
std::pair<Poly<F>, int> power_part(const Poly<F>& p, const Poly<F>& s) {
  Poly<F> acc(1);
  int e = 0;
  if (s.is_constant() || p.is_zero()) return {acc, 0};
  Poly<F> rest = p;
  while (true) {
    auto [q, r] = rest.divmod(s);
    if (!r.is_zero()) break;
    rest = std::move(q);
    acc *= s;
    ++e;
  }
  return {acc, e};
}

/// prod_{i=lo}^{hi} sigma^i(p); 1 when hi < lo.
template <class F>
Poly<F> shifted_product(const Poly<F>& p, long lo, long hi) {
  Poly<F> r(1);
  for (long i = lo; i <= hi; ++i) r *= p.shift(i);
  return r;
}

}  // namespace hypersum
