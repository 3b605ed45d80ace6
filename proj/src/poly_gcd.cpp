#include "hypersum/poly.hpp"
#include "hypersum/ratfunc.hpp"

namespace hypersum::detail {

namespace {

using ZPoly = std::vector<BigInt>;

ZPoly primitive(const Poly<Rat>& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = big_lcm(l, c.den());
  ZPoly out;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.num() * (l / c.den()));
    g = big_gcd(g, out.back());
  }
  if (out.back() < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

BigInt max_norm(const ZPoly& a) {
  BigInt m = 0;
  for (const auto& c : a)
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = big_abs(c);
  return m;
}

BigInt eval(const ZPoly& a, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

// Symmetric xi-adic digits of g.
ZPoly digits(BigInt g, const BigInt& xi) {
  ZPoly out;
  const BigInt half = xi / 2;
  while (g != 0) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    out.push_back(r);
    g -= r;
    mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
  }
  return out;
}

bool divides(const ZPoly& g, ZPoly a) {
  const std::size_t dg = g.size() - 1;
  if (a.size() < g.size()) return false;
  for (std::size_t k = a.size() - g.size() + 1; k-- > 0;) {
    BigInt& top = a[k + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return false;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), g.back().get_mpz_t());
    for (std::size_t j = 0; j <= dg; ++j) a[k + j] -= q * g[j];
  }
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}


void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void zsub_into(ZPoly& a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
}

// a / b when exact in Z[x]
std::optional<ZPoly> zdiv(ZPoly a, const ZPoly& b) {
  ztrim(a);
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - b.size() + 1, BigInt(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = a[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) a[k + j] -= q[k] * b[j];
  }
  for (const auto& c : a)
    if (c != 0) return std::nullopt;
  return q;
}

// Bivariate integer polynomials: index = y-degree, entries in Z[x].
using BPoly = std::vector<ZPoly>;

Poly<Rat> to_qpoly(const ZPoly& a) {
  std::vector<Rat> c;
  for (const auto& z : a) c.emplace_back(z);
  return Poly<Rat>(std::move(c));
}

// Primitive over Z[x]; lc positive.
BPoly primitive_b(std::vector<Poly<Rat>> nums) {
  Poly<Rat> g;
  for (const auto& n : nums) g = gcd(g, n);
  BPoly out;
  BigInt l = 1, h = 0;
  for (auto& n : nums) {
    n = n.exact_div(g);
    for (const auto& c : n.coeffs()) l = big_lcm(l, c.den());
  }
  for (const auto& n : nums) {
    ZPoly z;
    for (const auto& c : n.coeffs()) {
      z.push_back(c.num() * (l / c.den()));
      h = big_gcd(h, z.back());
    }
    out.push_back(std::move(z));
  }
  if (out.back().back() < 0) h = -h;
  for (auto& z : out)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), h.get_mpz_t());
  return out;
}

BPoly to_bpoly(const Poly<RatFunc<Rat>>& p) {
  Poly<Rat> l(1);
  for (const auto& c : p.coeffs())
    if (!c.is_zero() && !c.den().is_one()) l = lcm(l, c.den());
  std::vector<Poly<Rat>> nums;
  for (const auto& c : p.coeffs()) nums.push_back(c.is_zero() ? Poly<Rat>() : c.num() * l.exact_div(c.den()));
  return primitive_b(std::move(nums));
}

BigInt max_norm_b(const BPoly& a) {
  BigInt m = 0;
  for (const auto& z : a) {
    BigInt n = z.empty() ? BigInt(0) : max_norm(z);
    if (n > m) m = n;
  }
  return m;
}

bool bdivides(const BPoly& g, BPoly a) {
  const std::size_t dg = g.size() - 1;
  while (!a.empty() && a.back().empty()) a.pop_back();
  while (a.size() >= g.size()) {
    const std::size_t k = a.size() - g.size();
    auto q = zdiv(a.back(), g.back());
    if (!q) return false;
    for (std::size_t j = 0; j <= dg; ++j) zsub_into(a[k + j], zmul(*q, g[j]));
    while (!a.empty() && a.back().empty()) a.pop_back();
  }
  return a.empty();
}

}  // namespace

std::optional<Poly<Rat>> heuristic_gcd(const Poly<Rat>& a, const Poly<Rat>& b) {
  const ZPoly A = primitive(a), B = primitive(b);
  BigInt na = max_norm(A), nb = max_norm(B);
  BigInt xi = 2 * (na < nb ? na : nb) + 29;
  const std::size_t maxdeg = std::max(A.size(), B.size());
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * maxdeg > 4000000) break;
    BigInt ga = eval(A, xi), gb = eval(B, xi);
    BigInt g = big_gcd(ga, gb);
    ZPoly G = digits(g, xi);
    if (!G.empty()) {
      BigInt cont = 0;
      for (const auto& c : G) cont = big_gcd(cont, c);
      if (G.back() < 0) cont = -cont;
      for (auto& c : G) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
      if (divides(G, A) && divides(G, B)) {
        std::vector<Rat> rc;
        rc.reserve(G.size());
        for (const auto& c : G) rc.emplace_back(c, G.back());
        return Poly<Rat>(std::move(rc));
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

std::optional<Poly<RatFunc<Rat>>> heuristic_gcd(const Poly<RatFunc<Rat>>& a, const Poly<RatFunc<Rat>>& b) {
  using QF = RatFunc<Rat>;
  const BPoly A = to_bpoly(a), B = to_bpoly(b);
  BigInt na = max_norm_b(A), nb = max_norm_b(B);
  BigInt xi = 2 * (na < nb ? na : nb) + 29;
  std::size_t xdeg = 0;
  for (const auto* P : {&A, &B})
    for (const auto& z : *P) xdeg = std::max(xdeg, z.size());
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * xdeg > 200000) break;
    std::vector<Rat> ea, eb;
    BigInt ca = 0, cb = 0;
    for (const auto& z : A) {
      ea.emplace_back(eval(z, xi));
      ca = big_gcd(ca, ea.back().num());
    }
    for (const auto& z : B) {
      eb.emplace_back(eval(z, xi));
      cb = big_gcd(cb, eb.back().num());
    }
    const Poly<Rat> g = gcd(Poly<Rat>(std::move(ea)), Poly<Rat>(std::move(eb)));
    // xi exceeds the root bounds of the leading coefficients, so degrees are kept
    if (g.is_constant()) return Poly<QF>(QF(1));
    ZPoly gp = primitive(g);
    const BigInt c = big_gcd(ca, cb);
    std::vector<Poly<Rat>> cand;
    for (auto& z : gp) cand.push_back(to_qpoly(digits(z * c, xi)));
    if (!cand.back().is_zero()) {
      BPoly G = primitive_b(std::move(cand));
      if (bdivides(G, A) && bdivides(G, B)) {
        std::vector<QF> out;
        const QF lc(to_qpoly(G.back()));
        for (const auto& z : G) out.push_back(QF(to_qpoly(z)) / lc);
        return Poly<QF>(std::move(out));
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace hypersum::detail
