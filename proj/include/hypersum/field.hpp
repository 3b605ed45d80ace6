#pragma once

// Small per-field hooks used by the generic algorithms.

#include <optional>

#include "hypersum/ratfunc.hpp"

namespace hypersum {

/// The integer value of c when c is an integer constant fitting in a long.
inline std::optional<long> as_integer(const Rat& c) {
  if (!c.is_integer() || !c.num().fits_slong_p()) return std::nullopt;
  return c.num().get_si();
}

inline std::optional<long> as_integer(const QFunc& c) {
  if (!c.is_constant()) return std::nullopt;
  return as_integer(c.is_zero() ? Rat(0) : c.num().lc());
}

/// Specialise x := x0 in a coefficient. Throws at a pole.
inline Rat specialize(const QFunc& c, const Rat& x0) { return c.eval(x0); }

/// p(x0, y) for p in Q(x)[y].
inline Poly<Rat> specialize(const Poly<QFunc>& p, const Rat& x0) {
  return p.map<Rat>([&](const QFunc& c) { return c.eval(x0); });
}

/// Q[y] -> Q(x)[y].
inline Poly<QFunc> lift(const Poly<Rat>& p) {
  return p.map<QFunc>([](const Rat& c) { return QFunc(c); });
}

}  // namespace hypersum
