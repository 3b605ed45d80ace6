#pragma once

// Canonical rational functions num/den over F: gcd(num, den) = 1, den monic.

#include <string>
#include <utility>
#include <vector>

#include "hypersum/poly.hpp"

namespace hypersum {

template <class F>
class RatFunc {
 public:
  using Coeff = F;
  using PolyT = Poly<F>;

  RatFunc() : num_(), den_(1) {}
  RatFunc(int c) : num_(F(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const F& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(PolyT p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(PolyT n, PolyT d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  /// Skips the gcd; caller guarantees coprimality.
  static RatFunc from_coprime(PolyT n, PolyT d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.make_den_monic();
    return r;
  }

  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Printable without parentheses as a coefficient.
  bool is_atomic() const {
    if (!den_.is_one()) return false;
    const auto& c = num_.coeffs();
    if (c.size() <= 1) return true;
    return c.size() == 2 && c[0].is_zero() && c[1].is_one();
  }

  bool prints_negative() const { return !is_zero() && detail::coeff_is_negative(num_.lc()); }

  RatFunc operator-() const { return from_coprime(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return from_coprime(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return from_coprime(a.num_ + b.num_ * a.den_, a.den_);
    PolyT g = gcd(a.den_, b.den_);
    if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    PolyT ad = a.den_.exact_div(g), bd = b.den_.exact_div(g);
    PolyT n = a.num_ * bd + b.num_ * ad;
    return RatFunc(std::move(n), ad * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    PolyT g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return from_coprime(a.num_.exact_div(g1) * b.num_.exact_div(g2),
                        a.den_.exact_div(g2) * b.den_.exact_div(g1));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const {
    if (is_zero()) throw MathError("inverse of zero rational function");
    return from_coprime(den_, num_);
  }

  /// r(y + ell)
  RatFunc shift(long ell) const {
    if (ell == 0) return *this;
    return from_coprime(num_.shift(ell), den_.shift(ell));
  }

  F eval(const F& a) const {
    F d = den_.eval(a);
    if (d.is_zero()) throw MathError("rational function evaluated at a pole");
    return num_.eval(a) / d;
  }

  std::string to_string(const std::string& var = "y") const {
    if (den_.is_one()) return num_.to_string(var);
    std::string n = num_.to_string(var), d = den_.to_string(var);
    int terms = 0;
    for (const auto& c : num_.coeffs()) terms += c.is_zero() ? 0 : 1;
    bool simple = terms == 1 && detail::coeff_is_atomic(num_.lc()) &&
                  (num_.degree() == 0 || num_.lc().is_one()) && !prints_negative();
    if (!simple) n = "(" + n + ")";
    if (den_.degree() >= 1) {
      const auto& c = den_.coeffs();
      bool bare_var = c.size() == 2 && c[0].is_zero() && c[1].is_one();
      if (!bare_var) d = "(" + d + ")";
    }
    return n + "/" + d;
  }

 private:
  void make_den_monic() {
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    if (!den_.lc().is_one()) {
      const F inv = F(1) / den_.lc();
      num_ *= inv;
      den_ *= inv;
    }
  }
  void normalize() {
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = PolyT(1);
      return;
    }
    PolyT g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    make_den_monic();
  }

  PolyT num_;
  PolyT den_;
};

/// Sum of many fractions by pairwise (balanced) addition.
template <class F>
RatFunc<F> balanced_sum(std::vector<RatFunc<F>> xs) {
  if (xs.empty()) return {};
  while (xs.size() > 1) {
    std::vector<RatFunc<F>> next;
    next.reserve((xs.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] + xs[i + 1]);
    if (xs.size() % 2) next.push_back(std::move(xs.back()));
    xs = std::move(next);
  }
  return xs.front();
}

/// The field Q(x): canonical rational functions over Q in the variable x.
using QPoly = Poly<Rat>;
using QFunc = RatFunc<Rat>;

}  // namespace hypersum
