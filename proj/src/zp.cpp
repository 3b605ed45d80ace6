#include "hypersum/zp.hpp"

#include <algorithm>
#include <random>

#include "hypersum/errors.hpp"

namespace hypersum::zp {

u64 prime(std::size_t index) {
  static std::vector<u64> cache;
  while (cache.size() <= index) {
    BigInt start = cache.empty() ? BigInt(2147483647) : BigInt(static_cast<unsigned long>(cache.back() - 1));
    // walk downwards: largest prime <= start
    BigInt c = start;
    while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0) --c;
    cache.push_back(c.get_ui());
  }
  return cache[index];
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw MathError("modular inverse of zero");
  return powmod(a, p - 2, p);
}

u64 reduce(const BigInt& a, u64 p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly from_big(const std::vector<BigInt>& c, u64 p) {
  Poly r;
  r.reserve(c.size());
  for (const auto& x : c) r.push_back(reduce(x, p));
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly rem(Poly a, const Poly& b, u64 p) {
  if (b.empty()) throw MathError("polynomial division by zero mod p");
  const std::size_t db = b.size() - 1;
  const u64 inv = invmod(b.back(), p);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t k = a.size() - 1 - db;
    u64 t = mulmod(a.back(), inv, p);
    for (std::size_t j = 0; j <= db; ++j) a[k + j] = submod(a[k + j], mulmod(t, b[j], p), p);
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

u64 eval(const Poly& a, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = addmod(mulmod(acc, x, p), *it, p);
  return acc;
}

Poly shift_one(const Poly& a, u64 p) {
  Poly r = a;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) r[j] = addmod(r[j], r[j + 1], p);
  }
  return r;
}

Poly shift(const Poly& a, std::int64_t ell, u64 p) {
  u64 c = ell >= 0 ? static_cast<u64>(ell) % p : (p - (static_cast<u64>(-ell) % p)) % p;
  Poly r(a.size(), 0);
  for (std::size_t k = a.size(); k-- > 0;) {
    for (std::size_t j = a.size() - 1 - k; j > 0; --j) r[j] = addmod(mulmod(r[j], c, p), r[j - 1], p);
    r[0] = addmod(mulmod(r[0], c, p), a[k], p);
  }
  trim(r);
  return r;
}

u64 resultant(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  u64 acc = 1;
  while (true) {
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    if (n == 0) return mulmod(acc, powmod(b[0], m, p), p);
    if (m == 0) return mulmod(acc, powmod(a[0], n, p), p);
    Poly r = rem(a, b, p);
    if (r.empty()) return 0;
    if ((m & 1u) && (n & 1u)) acc = (p - acc) % p;
    acc = mulmod(acc, powmod(b.back(), m - (r.size() - 1), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<u64> c = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      u64 num = submod(c[i], c[i - 1], p);
      u64 den = submod(xs[i], xs[i - j], p);
      c[i] = mulmod(num, invmod(den, p), p);
      if (i == j) break;
    }
  }
  Poly r{c[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // r <- r * (y - xs[k]) + c[k]
    Poly t(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      t[i + 1] = addmod(t[i + 1], r[i], p);
      t[i] = submod(t[i], mulmod(r[i], xs[k], p), p);
    }
    t[0] = addmod(t[0], c[k], p);
    r = std::move(t);
  }
  trim(r);
  return r;
}

namespace {

Poly powmod_poly(Poly base, u64 e, const Poly& m, u64 p) {
  Poly r{1};
  base = rem(base, m, p);
  while (e) {
    if (e & 1u) r = rem(mul(r, base, p), m, p);
    e >>= 1u;
    if (e) base = rem(mul(base, base, p), m, p);
  }
  return r;
}

// h is monic, squarefree, and splits into distinct linear factors.
void split_linear(const Poly& h, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  if (h.size() <= 1) return;
  if (h.size() == 2) {
    out.push_back((p - mulmod(h[0], invmod(h[1], p), p)) % p);
    return;
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    Poly t{dist(rng), 1};
    Poly w = powmod_poly(t, (p - 1) / 2, h, p);
    if (w.empty()) w = {0};
    w[0] = submod(w[0], 1, p);
    trim(w);
    Poly g = gcd(h, w, p);
    if (g.size() > 1 && g.size() < h.size()) {
      split_linear(g, p, rng, out);
      // h / g
      Poly q = h;
      Poly quo(h.size() - g.size() + 1, 0);
      u64 inv = invmod(g.back(), p);
      for (std::size_t k = quo.size(); k-- > 0;) {
        u64 c = mulmod(q[k + g.size() - 1], inv, p);
        quo[k] = c;
        for (std::size_t j = 0; j < g.size(); ++j) q[k + j] = submod(q[k + j], mulmod(c, g[j], p), p);
      }
      trim(quo);
      split_linear(quo, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(const Poly& a, u64 p) {
  std::vector<u64> out;
  if (a.empty()) throw MathError("roots of zero polynomial mod p");
  if (a.size() == 1) return out;
  if (a.size() - 1 >= p / 4) {
    for (u64 x = 0; x < p; ++x) {
      if (eval(a, x, p) == 0) out.push_back(x);
    }
    return out;
  }
  // gcd(a, y^p - y) collects the distinct linear factors.
  Poly yp = powmod_poly(Poly{0, 1}, p, a, p);
  yp.resize(std::max<std::size_t>(yp.size(), 2), 0);
  yp[1] = submod(yp[1], 1, p);
  trim(yp);
  Poly h = gcd(a, yp, p);
  if (h.empty()) h = a;  // a divides y^p - y
  std::mt19937_64 rng(0x5eed);
  if (h.size() > 1 && h[0] == 0) {
    out.push_back(0);
    h.erase(h.begin());
  }
  split_linear(h, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypersum::zp
