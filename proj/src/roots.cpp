#include "hypersum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hypersum/zp.hpp"

namespace hypersum {

namespace {

BigInt horner(const std::vector<BigInt>& a, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<BigInt> derivative(const std::vector<BigInt>& a) {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  return d;
}

double log2_abs(const BigInt& a) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, a.get_mpz_t());
  return static_cast<double>(e) + std::log2(std::fabs(d));
}

long to_long(const BigInt& a) {
  if (!a.fits_slong_p()) throw MathError("integer root does not fit in a machine word");
  return a.get_si();
}

// Smallest prime (by index) not dividing any of the given integers.
std::size_t good_prime(const std::vector<BigInt>& avoid, std::size_t start = 0) {
  for (std::size_t i = start;; ++i) {
    zp::u64 p = zp::prime(i);
    bool ok = true;
    for (const auto& a : avoid) ok = ok && zp::reduce(a, p) != 0;
    if (ok) return i;
  }
}

BigInt symmetric(const BigInt& r, const BigInt& m) {
  BigInt s = r % m;
  if (s < 0) s += m;
  if (2 * s > m) s -= m;
  return s;
}

// Integer roots of a squarefree primitive a with a[0] != 0.
std::vector<BigInt> roots_nonzero_const(const std::vector<BigInt>& a) {
  std::vector<BigInt> out;
  if (a.size() <= 1) return out;
  BigInt bound = big_abs(a[0]);
  BigInt fb = root_bound(a);
  if (fb < bound) bound = fb;
  const BigInt brute = BigInt(static_cast<unsigned long>(8 * a.size() + 2000));
  if (bound <= brute) {
    const long L = bound.get_si();
    for (long n = 1; n <= L; ++n) {
      if (!mpz_divisible_ui_p(a[0].get_mpz_t(), static_cast<unsigned long>(n))) continue;
      if (horner(a, BigInt(n)) == 0) out.emplace_back(n);
      if (horner(a, BigInt(-n)) == 0) out.emplace_back(-n);
    }
    return out;
  }
  // Hensel lifting from a prime where a stays squarefree.
  std::vector<BigInt> da = derivative(a);
  std::size_t idx = 0;
  zp::u64 p = 0;
  zp::Poly am;
  for (;; ++idx) {
    idx = good_prime({a.back()}, idx);
    p = zp::prime(idx);
    am = zp::from_big(a, p);
    zp::Poly dm = zp::from_big(da, p);
    if (zp::gcd(am, dm, p).size() == 1) break;
  }
  const BigInt limit = 2 * bound + 1;
  for (zp::u64 r0 : zp::roots(am, p)) {
    BigInt r = BigInt(static_cast<unsigned long>(r0));
    BigInt m = BigInt(static_cast<unsigned long>(p));
    while (m <= limit) {
      m = m * m;
      BigInt fr = horner(a, r) % m, dr = horner(da, r) % m, inv;
      if (dr < 0) dr += m;
      if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t()) == 0) break;
      r = (r - fr * inv) % m;
    }
    BigInt s = symmetric(r, m);
    if (big_abs(s) <= bound && horner(a, s) == 0) out.push_back(s);
  }
  return out;
}

std::vector<long> sorted_unique(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<long> intersect(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

// Deterministic sequence of specialisation points for x.
class PointStream {
 public:
  Rat next() {
    std::uniform_int_distribution<long> d(300, 9000);
    long v = d(rng_);
    return Rat(rng_() & 1u ? v : -v);
  }

 private:
  std::mt19937_64 rng_{0x9e3779b97f4a7c15ULL};
};

bool admissible(const Poly<QFunc>& p, const Rat& x0) {
  for (const auto& c : p.coeffs()) {
    if (c.den().eval(x0).is_zero()) return false;
  }
  return !p.lc().num().eval(x0).is_zero();
}

Rat admissible_point(PointStream& s, const std::vector<const Poly<QFunc>*>& ps) {
  for (int tries = 0; tries < 1000; ++tries) {
    Rat x0 = s.next();
    bool ok = true;
    for (const auto* p : ps) ok = ok && admissible(*p, x0);
    if (ok) return x0;
  }
  throw MathError("no admissible specialisation point");
}

}  // namespace

std::vector<BigInt> primitive_integer_coeffs(const Poly<Rat>& p) {
  std::vector<BigInt> out;
  if (p.is_zero()) return out;
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = big_lcm(l, c.den());
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.num() * (l / c.den()));
    g = big_gcd(g, out.back());
  }
  if (p.lc().sign() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

BigInt root_bound(const std::vector<BigInt>& a) {
  const std::size_t n = a.size() - 1;
  if (n == 0) return 0;
  const double lc = log2_abs(a[n]);
  double best = -1e300;
  for (std::size_t i = 1; i <= n; ++i) {
    if (a[n - i] == 0) continue;
    best = std::max(best, (log2_abs(a[n - i]) - lc) / static_cast<double>(i));
  }
  if (best < -1e299) return 1;
  const double lg = best + 1.0;
  if (lg < 50) return BigInt(static_cast<unsigned long>(std::ceil(std::exp2(lg) * (1 + 1e-9)))) + 1;
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(std::ceil(lg)) + 2);
  return r;
}

std::vector<long> integer_roots(const Poly<Rat>& p) {
  if (p.is_zero()) throw MathError("integer_roots of the zero polynomial");
  if (p.is_constant()) return {};
  std::vector<BigInt> a = primitive_integer_coeffs(squarefree_part(p));
  std::vector<long> out;
  std::size_t k = 0;
  while (k < a.size() && a[k] == 0) ++k;
  if (k > 0) {
    out.push_back(0);
    a.erase(a.begin(), a.begin() + static_cast<long>(k));
  }
  for (const auto& r : roots_nonzero_const(a)) out.push_back(to_long(r));
  return sorted_unique(out);
}

std::vector<long> integer_roots(const Poly<QFunc>& p) {
  if (p.is_zero()) throw MathError("integer_roots of the zero polynomial");
  if (p.is_constant()) return {};
  PointStream pts;
  std::vector<long> cand;
  for (int round = 0; round < 2; ++round) {
    Rat x0 = admissible_point(pts, {&p});
    std::vector<long> c = integer_roots(specialize(p, x0));
    cand = round == 0 ? c : intersect(cand, c);
    if (cand.empty()) return {};
  }
  std::vector<long> out;
  for (long n : cand) {
    if (p.eval(QFunc(n)).is_zero()) out.push_back(n);
  }
  return out;
}

std::vector<long> dispersion_set(const Poly<Rat>& p, const Poly<Rat>& q) {
  if (p.is_zero() || q.is_zero()) throw MathError("dispersion_set of a zero polynomial");
  if (p.is_constant() || q.is_constant()) return {};
  const Poly<Rat> ps = squarefree_part(p), qs = squarefree_part(q);
  const std::vector<BigInt> a = primitive_integer_coeffs(ps), b = primitive_integer_coeffs(qs);
  const BigInt L = root_bound(a) + root_bound(b);
  const std::size_t D = (a.size() - 1) * (b.size() - 1);

  std::vector<long> cand;
  if (L > BigInt(1L << 30)) {
    // Exact resultant in k, interpolated over Q; only for huge root bounds.
    std::vector<Poly<Rat>> basis;
    std::vector<Rat> xs, ys;
    for (std::size_t k = 0; k <= D; ++k) {
      xs.emplace_back(static_cast<long>(k));
      ys.push_back(resultant(ps, qs.shift(static_cast<long>(k))));
    }
    // Newton form
    std::vector<Rat> c = ys;
    for (std::size_t j = 1; j <= D; ++j)
      for (std::size_t i = D; i >= j; --i) {
        c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
        if (i == j) break;
      }
    Poly<Rat> R(c[D]);
    for (std::size_t k = D; k-- > 0;) R = R * Poly<Rat>::linear(-xs[k]) + Poly<Rat>(c[k]);
    cand = integer_roots(R);
  } else {
    const long Ls = L.get_si();
    std::size_t idx = good_prime({a.back(), b.back()});
    for (;; idx = good_prime({a.back(), b.back()}, idx + 1)) {
      const zp::u64 P = zp::prime(idx);
      const zp::Poly am = zp::from_big(a, P), bm = zp::from_big(b, P);
      cand.clear();
      if (static_cast<std::size_t>(2 * Ls + 1) <= 2 * D + 256) {
        zp::Poly s = zp::shift(bm, -Ls, P);
        for (long l = -Ls; l <= Ls; ++l) {
          if (zp::gcd(am, s, P).size() > 1) cand.push_back(l);
          s = zp::shift_one(s, P);
        }
        break;
      }
      std::vector<zp::u64> xs, ys;
      zp::Poly s = bm;
      for (std::size_t k = 0; k <= D; ++k) {
        xs.push_back(k);
        ys.push_back(zp::resultant(am, s, P));
        s = zp::shift_one(s, P);
      }
      zp::Poly R = zp::interpolate(xs, ys, P);
      if (R.empty()) continue;  // unlucky prime
      for (zp::u64 r : zp::roots(R, P)) {
        long v = static_cast<long>(r);
        if (r > P / 2) v = static_cast<long>(r) - static_cast<long>(P);
        if (v >= -Ls && v <= Ls) cand.push_back(v);
      }
      break;
    }
  }
  std::vector<long> out;
  for (long l : sorted_unique(cand)) {
    if (!gcd(ps, qs.shift(l)).is_constant()) out.push_back(l);
  }
  return out;
}

std::vector<long> dispersion_set(const Poly<QFunc>& p, const Poly<QFunc>& q) {
  if (p.is_zero() || q.is_zero()) throw MathError("dispersion_set of a zero polynomial");
  if (p.is_constant() || q.is_constant()) return {};
  PointStream pts;
  std::vector<long> cand;
  for (int round = 0; round < 2; ++round) {
    Rat x0 = admissible_point(pts, {&p, &q});
    std::vector<long> c = dispersion_set(specialize(p, x0), specialize(q, x0));
    cand = round == 0 ? c : intersect(cand, c);
    if (cand.empty()) return {};
  }
  std::vector<long> out;
  for (long l : cand) {
    if (!gcd(p, q.shift(l)).is_constant()) out.push_back(l);
  }
  return out;
}

}  // namespace hypersum
