#pragma once

#include <vector>

#include "hypersum/ratfunc.hpp"

namespace hypersum {

template <class F>
struct PartialFractionNumerators {
  Poly<F> poly_part;
  std::vector<Poly<F>> nums;  // nums[i] / factors[i], deg nums[i] < deg factors[i]
};

/// n / prod(factors) = poly_part + sum nums[i] / factors[i]. Factors must be
/// pairwise coprime and nonzero; n need not be reduced against them.
template <class F>
PartialFractionNumerators<F> partial_fraction_numerators(const Poly<F>& n,
                                                         const std::vector<Poly<F>>& factors) {
  Poly<F> prod(1);
  for (const auto& f : factors) {
    if (f.is_zero()) throw MathError("partial_fractions: zero factor");
    prod *= f;
  }
  auto [q, r] = n.divmod(prod);
  PartialFractionNumerators<F> out{std::move(q), {}};
  out.nums.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.is_constant()) {
      out.nums.emplace_back();
      continue;
    }
    Poly<F> cof = prod.exact_div(f);
    ExtGcd<F> e = extended_euclid(cof.rem(f), f);
    if (!e.g.is_one()) throw MathError("partial_fractions: factors are not pairwise coprime");
    out.nums.push_back((r.rem(f) * e.s).rem(f));
  }
  return out;
}

template <class F>
struct PartialFractions {
  Poly<F> poly_part;
  std::vector<RatFunc<F>> parts;
};

/// f = poly_part + sum parts[i], den(parts[i]) = factors[i] (made monic).
template <class F>
PartialFractions<F> partial_fractions(const RatFunc<F>& f, const std::vector<Poly<F>>& factors) {
  Poly<F> prod(1);
  for (const auto& g : factors) prod *= g;
  if (prod.is_zero() || !(prod.monic() == f.den())) {
    throw MathError("partial_fractions: factor product differs from the denominator");
  }
  // f.num()/f.den() = (f.num()/lc(prod)) / prod
  Poly<F> n = f.num() * (F(1) / prod.lc());
  auto pf = partial_fraction_numerators(n, factors);
  PartialFractions<F> out{std::move(pf.poly_part), {}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].is_constant()) continue;
    out.parts.push_back(pf.nums[i].is_zero() ? RatFunc<F>()
                                            : RatFunc<F>::from_coprime(pf.nums[i], factors[i]));
  }
  return out;
}

}  // namespace hypersum
