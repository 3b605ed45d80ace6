#include "hypersum/rat.hpp"

#include "hypersum/errors.hpp"

namespace hypersum {

Rat::Rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw MathError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
  std::string str(s);
  mpq_class q;
  if (q.set_str(str, 10) != 0 || q.get_den() == 0) {
    throw MathError("malformed rational literal '" + str + "'");
  }
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw MathError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  return Rat(mpq_class(1 / v_));
}

}  // namespace hypersum
