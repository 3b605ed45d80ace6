#pragma once

// Congruence-preserving rewriting modulo V_K = { K sigma(r) - r }. Every
// operation returns a witness w with  input - output = K sigma(w) - w.

#include <vector>

#include "hypersum/ap_reduction.hpp"

namespace hypersum {

template <class F>
struct Absorbed {
  Poly<F> q;  // in W_K
  RatFunc<F> witness;
};

/// p / prod_{i=0}^{m} sigma^i(v)  ==  q / v.
template <class F>
Absorbed<F> kernel_absorb_v(const Poly<F>& p, int m, const PhiBasis<F>& basis);
template <class F>
Absorbed<F> kernel_absorb_v(const Poly<F>& p, int m, const Kernel<F>& K);

/// p / prod_{j=1}^{m} sigma^{-j}(u)  ==  q / v,  m >= 1.
template <class F>
Absorbed<F> kernel_absorb_u(const Poly<F>& p, int m, const PhiBasis<F>& basis);
template <class F>
Absorbed<F> kernel_absorb_u(const Poly<F>& p, int m, const Kernel<F>& K);

template <class F>
struct Congruent {
  RatFunc<F> g;
  RatFunc<F> witness;
};

/// f == sigma^ell(f) prod_{i<ell} sigma^i(K) (ell > 0), or the mirrored product (ell < 0).
template <class F>
Congruent<F> shift_congruence(const RatFunc<F>& f, long ell, const Kernel<F>& K);

template <class F>
struct Relocated {
  Poly<F> c;  // over sigma^ell(b), deg c < deg b
  Poly<F> q;  // in W_K
  RatFunc<F> witness;
};

/// a/b == c / sigma^ell(b) + q/v; K = 1 allowed. Checks that b and sigma^ell(b) are strongly prime with K.
template <class F>
Relocated<F> relocate_fraction(const Poly<F>& a, const Poly<F>& b, long ell, const PhiBasis<F>& basis);

template <class F>
struct ResidualSum {
  ResidualForm<F> sum;        // r + rewritten
  ResidualForm<F> rewritten;  // congruent to s, denominators moved onto den(r)'s shift classes
  RatFunc<F> witness;         // s - rewritten = K sigma(w) - w
};

template <class F>
ResidualSum<F> residual_add(const ResidualForm<F>& r, const ResidualForm<F>& s, const PhiBasis<F>& basis);
template <class F>
ResidualSum<F> residual_add(const ResidualForm<F>& r, const ResidualForm<F>& s);

/// Rewrite s so that lcm(base, den) stays shift-free; the ResidualForm of s is
/// taken w.r.t. basis.kernel.
template <class F>
ResidualSum<F> align_residual(const Poly<F>& base, const ResidualForm<F>& s, const PhiBasis<F>& basis);

}  // namespace hypersum
