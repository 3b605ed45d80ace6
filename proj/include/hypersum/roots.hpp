#pragma once

// Integer roots and dispersion sets. Candidates come from modular arithmetic
// or from specialising x; every reported value is verified exactly.

#include <vector>

#include "hypersum/field.hpp"

namespace hypersum {

/// Coefficients of the primitive integer polynomial proportional to p, lc > 0.
std::vector<BigInt> primitive_integer_coeffs(const Poly<Rat>& p);

/// Integer root bound (Fujiwara) for a polynomial with integer coefficients.
BigInt root_bound(const std::vector<BigInt>& a);

/// All integers n with p(n) = 0, ascending. Throws on p = 0.
std::vector<long> integer_roots(const Poly<Rat>& p);
/// Over Q(x): integers n with p(n) = 0 in Q(x).
std::vector<long> integer_roots(const Poly<QFunc>& p);

/// { l : gcd(p, q(y + l)) nonconstant }, ascending. Throws on zero input.
std::vector<long> dispersion_set(const Poly<Rat>& p, const Poly<Rat>& q);
std::vector<long> dispersion_set(const Poly<QFunc>& p, const Poly<QFunc>& q);

}  // namespace hypersum
