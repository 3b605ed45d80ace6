#pragma once

#include <random>
#include <vector>

#include "hypersum/ratfunc.hpp"

namespace testutil {

using hypersum::Poly;
using hypersum::QFunc;
using hypersum::QPoly;
using hypersum::Rat;

inline Rat rand_rat(std::mt19937_64& rng, int range = 9, int maxden = 3) {
  std::uniform_int_distribution<int> n(-range, range), d(1, maxden);
  return Rat(hypersum::BigInt(n(rng)), hypersum::BigInt(d(rng)));
}

inline QPoly rand_qpoly(std::mt19937_64& rng, int deg, int range = 9, int maxden = 3) {
  std::vector<Rat> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rand_rat(rng, range, maxden));
  if (c.back().is_zero()) c.back() = Rat(1);
  return QPoly(c);
}

inline QFunc rand_qfunc(std::mt19937_64& rng, int deg = 1) {
  QPoly d = rand_qpoly(rng, deg, 5, 1);
  return QFunc(rand_qpoly(rng, deg, 5, 2), d.is_zero() ? QPoly(1) : d);
}

inline Poly<QFunc> rand_xpoly(std::mt19937_64& rng, int deg, int xdeg = 1) {
  std::vector<QFunc> c;
  for (int i = 0; i <= deg; ++i) c.push_back(QFunc(rand_qpoly(rng, xdeg, 5, 1)));
  if (c.back().is_zero()) c.back() = QFunc(1);
  return Poly<QFunc>(c);
}

/// x as an element of Q(x).
inline QFunc X() { return QFunc(QPoly::var()); }
/// y + c
template <class F>
Poly<F> Y(const F& c = F(0)) {
  return Poly<F>::linear(c);
}

/// Determinant by fraction-free cofactor expansion (small sizes only).
template <class F>
F det(std::vector<std::vector<F>> m) {
  const std::size_t n = m.size();
  if (n == 0) return F(1);
  F acc(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return F(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      acc = -acc;
    }
    acc *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      F f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return acc;
}

/// Sylvester matrix determinant (the textbook definition of the resultant).
template <class F>
F sylvester_resultant(const Poly<F>& a, const Poly<F>& b) {
  const int m = a.degree(), n = b.degree();
  const std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<F>> s(N, std::vector<F>(N, F(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
  return det(s);
}

}  // namespace testutil
