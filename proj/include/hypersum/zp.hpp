#pragma once

// Word-size prime field arithmetic. Only used to generate candidate integer
// roots and shifts; every candidate is re-checked with exact arithmetic.

#include <cstdint>
#include <vector>

#include "hypersum/rat.hpp"

namespace hypersum::zp {

using u64 = std::uint64_t;

/// Primes just below 2^31, in decreasing order.
u64 prime(std::size_t index);

inline u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }
inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
u64 reduce(const BigInt& a, u64 p);

/// Polynomial over GF(p), coefficient i = degree i, trimmed.
using Poly = std::vector<u64>;

void trim(Poly& a);
Poly from_big(const std::vector<BigInt>& c, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly rem(Poly a, const Poly& b, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
u64 eval(const Poly& a, u64 x, u64 p);
/// a(y + 1)
Poly shift_one(const Poly& a, u64 p);
Poly shift(const Poly& a, std::int64_t ell, u64 p);
u64 resultant(Poly a, Poly b, u64 p);
/// Interpolation through (xs[i], ys[i]); xs pairwise distinct.
Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);
/// All roots of a in [0, p); a nonzero.
std::vector<u64> roots(const Poly& a, u64 p);

}  // namespace hypersum::zp
