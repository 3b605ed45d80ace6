#pragma once

// Dense univariate polynomials over an exact field F.
//
// F must be a value type with F(int), the four field operations, ==,
// is_zero(), is_one() and to_string(). In this project F is either Rat or
// RatFunc<Rat> (the field Q(x)).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "hypersum/errors.hpp"
#include "hypersum/rat.hpp"

namespace hypersum {

template <class F>
class Poly {
 public:
  /// Degree reported for the zero polynomial. Only compare it via is_zero().
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(int c) : Poly(F(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const F& c, int k) {
    if (c.is_zero()) return {};
    std::vector<F> v(static_cast<std::size_t>(k) + 1, F(0));
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly var() { return monomial(F(1), 1); }
  /// y + c
  static Poly linear(const F& c) { return Poly(std::vector<F>{c, F(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& lc() const {
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
  }
  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<F>& coeffs() const { return c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const F& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const F& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<F> r = c_;
    const int dd = d.degree();
    std::vector<F> q(static_cast<std::size_t>(degree() - dd) + 1, F(0));
    const F inv = F(1) / d.lc();
    for (int k = degree() - dd; k >= 0; --k) {
      F t = r[static_cast<std::size_t>(k + dd)];
      if (t.is_zero()) continue;
      if (!d.lc().is_one()) t *= inv;
      q[static_cast<std::size_t>(k)] = t;
      for (int j = 0; j <= dd; ++j) {
        if (!d.c_[static_cast<std::size_t>(j)].is_zero())
          r[static_cast<std::size_t>(k + j)] -= t * d.c_[static_cast<std::size_t>(j)];
      }
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  Poly quo(const Poly& d) const { return divmod(d).first; }
  Poly rem(const Poly& d) const { return divmod(d).second; }
  /// Division that must be exact.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
  }
  bool divides(const Poly& p) const { return p.rem(*this).is_zero(); }

  Poly monic() const {
    if (is_zero() || lc().is_one()) return *this;
    Poly r = *this;
    const F inv = F(1) / lc();
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  F eval(const F& a) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
  }

  /// p(y + a) by Horner's scheme.
  Poly taylor_shift(const F& a) const {
    if (a.is_zero() || is_constant()) return *this;
    std::vector<F> r(c_.size(), F(0));
    // r <- r*(y+a) + c_i, from the top
    for (std::size_t k = c_.size(); k-- > 0;) {
      for (std::size_t j = c_.size() - 1 - k; j > 0; --j) {
        r[j] = r[j] * a + r[j - 1];
      }
      r[0] = r[0] * a + c_[k];
    }
    return Poly(std::move(r));
  }
  /// sigma_y^ell(p) = p(y + ell).
  Poly shift(long ell) const { return taylor_shift(F(static_cast<int>(ell))); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<int>(i));
    return Poly(std::move(r));
  }

  /// Apply f to each coefficient (used for sigma_x and specialisation).
  template <class G, class Fn>
  Poly<G> map(Fn&& f) const {
    std::vector<G> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(f(x));
    return Poly<G>(std::move(r));
  }

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

namespace detail {

// Coefficient printing. Rationals print bare; Q(x) coefficients print in x and
// are parenthesised unless atomic.
inline bool coeff_is_atomic(const Rat&) { return true; }
template <class F>
bool coeff_is_atomic(const F& f) {
  return f.is_atomic();
}
inline bool coeff_is_negative(const Rat& r) { return r.sign() < 0; }
template <class F>
bool coeff_is_negative(const F& f) {
  return f.prints_negative();
}
inline std::string coeff_string(const Rat& r) { return r.to_string(); }
template <class F>
std::string coeff_string(const F& f) {
  return f.to_string("x");
}

}  // namespace detail

template <class F>
std::string Poly<F>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const F& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    bool neg = detail::coeff_is_negative(c);
    F mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = var + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) {
      std::string s = detail::coeff_string(mag);
      out += detail::coeff_is_atomic(mag) ? s : "(" + s + ")";
    } else if (mag.is_one()) {
      out += mono;
    } else {
      std::string s = detail::coeff_string(mag);
      out += (detail::coeff_is_atomic(mag) ? s : "(" + s + ")") + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Euclidean-domain algorithms over F[y].

template <class F>
class RatFunc;

namespace detail {
/// Monic gcd over Q via integer evaluation; nullopt when the heuristic gives up.
std::optional<Poly<Rat>> heuristic_gcd(const Poly<Rat>& a, const Poly<Rat>& b);
/// Same over Q(x): x is evaluated at a large integer first.
std::optional<Poly<RatFunc<Rat>>> heuristic_gcd(const Poly<RatFunc<Rat>>& a, const Poly<RatFunc<Rat>>& b);
}  // namespace detail

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if constexpr (std::is_same_v<F, Rat>) {
    if (!a.is_constant() && !b.is_constant() && a.degree() + b.degree() > 4) {
      if (auto g = detail::heuristic_gcd(a, b)) return *g;
    }
  } else if constexpr (std::is_same_v<F, RatFunc<Rat>>) {
    if (!a.is_constant() && !b.is_constant() && a.degree() + b.degree() > 2) {
      if (auto g = detail::heuristic_gcd(a, b)) return *g;
    }
  }
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.is_constant()) return Poly<F>(1);
    Poly<F> r = a.rem(b);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <class F>
Poly<F> lcm(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a.quo(gcd(a, b)) * b).monic();
}

template <class F>
struct ExtGcd {
  Poly<F> g, s, t;  // s*a + t*b = g, g monic
};

/// Extended Euclid. Cofactors satisfy deg s < deg(b/g), deg t < deg(a/g).
template <class F>
ExtGcd<F> extended_euclid(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw MathError("extended_euclid: both inputs are zero");
  Poly<F> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const F inv = F(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class F>
Poly<F> pow(const Poly<F>& p, unsigned k) {
  Poly<F> r(1), b = p;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return r;
}

/// Squarefree decomposition (Yun): p = lc * prod_i f_i^i, returned as (f_i, i)
/// with f_i monic, squarefree, pairwise coprime and nonconstant.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& p) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (p.is_constant()) return out;
  Poly<F> a = p.monic();
  Poly<F> d = a.derivative();
  Poly<F> g = gcd(a, d);
  Poly<F> b = a.exact_div(g);
  Poly<F> c = d.exact_div(g);
  Poly<F> e = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    Poly<F> h = gcd(b, e);
    if (!h.is_constant()) out.emplace_back(h, i);
    b = b.exact_div(h);
    c = e.exact_div(h);
    e = c - b.derivative();
  }
  return out;
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.is_constant()) return Poly<F>(1);
  return p.monic().exact_div(gcd(p, p.derivative()));
}

/// Resultant over a field by the Euclidean remainder sequence. Sign follows the
/// Sylvester determinant convention res(a, b) = lc(a)^deg b * prod b(alpha_i).
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
  if (a.is_zero() || b.is_zero()) return F(0);
  F acc(1);
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) {
      F lb = b.lc(), r(1);
      for (int i = 0; i < m; ++i) r *= lb;
      return acc * r;
    }
    if (m == 0 && n > 0) {
      F la = a.lc(), r(1);
      for (int i = 0; i < n; ++i) r *= la;
      return acc * r;
    }
    Poly<F> r = a.rem(b);
    if (r.is_zero()) return F(0);
    // res(a, b) = (-1)^(m n) lc(b)^(m - deg r) res(b, r)
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    F lb = b.lc();
    for (int i = 0; i < m - r.degree(); ++i) acc *= lb;
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace hypersum
