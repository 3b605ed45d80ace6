#include "hypersum/term.hpp"

#include <algorithm>

namespace hypersum {

namespace {

QFunc xq(const Rat& c, long m) { return QFunc(QPoly(std::vector<Rat>{c, Rat(m)})); }

/// m x + n y + c
XYPoly linear(long m, long n, const Rat& c) { return XYPoly(std::vector<QFunc>{xq(c, m), QFunc(Rat(n))}); }

BigInt floor_rat(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return q;
}

XYFunc rat_pow(const XYFunc& r, long e) {
  if (e == 0) return XYFunc(1);
  XYFunc b = e > 0 ? r : r.inverse();
  const auto k = static_cast<unsigned>(e > 0 ? e : -e);
  return XYFunc::from_coprime(pow(b.num(), k), pow(b.den(), k));
}

/// Gamma(L + k)/Gamma(L) for L = m x + n y + c.
XYFunc rising(long m, long n, const Rat& c, long k) {
  XYPoly p(QFunc(1));
  if (k >= 0) {
    for (long j = 0; j < k; ++j) p *= linear(m, n, c + Rat(j));
    return XYFunc(p);
  }
  for (long j = 1; j <= -k; ++j) p *= linear(m, n, c - Rat(j));
  return XYFunc(XYPoly(QFunc(1)), p);
}

struct Lin {
  long m, n;
  Rat c;
};

Lin as_linear(const HyperForm& h, const Expr& at, const std::string& fn) {
  auto fail = [&]() -> Lin {
    throw ParseError(at.line, at.col, "argument of " + fn + " is not of the form m*x + n*y + c with integer m, n");
  };
  if (!h.gammas.empty() || !h.rat.den().is_one() || h.rat.num().degree() > 1) return fail();
  const QFunc c0 = h.rat.num().coeff(0), c1 = h.rat.num().coeff(1);
  if (!c1.is_constant() || !c0.is_polynomial() || c0.num().degree() > 1) return fail();
  const Rat n = c1.num().coeff(0), m = c0.num().coeff(1);
  if (!n.is_integer() || !m.is_integer() || !n.num().fits_slong_p() || !m.num().fits_slong_p()) return fail();
  return {m.num().get_si(), n.num().get_si(), c0.num().coeff(0)};
}

/// T = rat * Gamma(L)^e folded into canonical form.
void add_gamma(HyperForm& h, const Lin& l, long e, const Expr& at) {
  if (l.m == 0 && l.n == 0) {
    if (l.c.is_integer() && l.c.sign() <= 0) throw ParseError(at.line, at.col, "Gamma evaluated at a pole");
    return;  // nonzero constant
  }
  const BigInt k = floor_rat(l.c);
  if (!k.fits_slong_p()) throw ParseError(at.line, at.col, "shift too large");
  const Rat c0 = l.c - Rat(k);
  h.rat *= rat_pow(rising(l.m, l.n, c0, k.get_si()), e);
  const GammaKey key{l.m, l.n, c0};
  if ((h.gammas[key] += e) == 0) h.gammas.erase(key);
}

HyperForm mul(HyperForm a, const HyperForm& b, long sign) {
  a.rat *= sign > 0 ? b.rat : b.rat.inverse();
  for (const auto& [k, e] : b.gammas)
    if ((a.gammas[k] += sign * e) == 0) a.gammas.erase(k);
  return a;
}

HyperForm eval(const Expr& e) {
  using K = Expr::Kind;
  HyperForm h;
  switch (e.kind) {
    case K::Num: h.rat = XYFunc(QFunc(e.value)); return h;
    case K::Var:
      h.rat = e.var == 'y' ? XYFunc(XYPoly::var()) : XYFunc(QFunc(QPoly::var()));
      return h;
    case K::Neg:
      h = eval(*e.args[0]);
      h.rat = -h.rat;
      return h;
    case K::Add:
    case K::Sub: {
      HyperForm a = eval(*e.args[0]), b = eval(*e.args[1]);
      if (a.gammas != b.gammas) {
        throw ParseError(e.line, e.col, "sum of terms that are not rational multiples of each other");
      }
      a.rat = e.kind == K::Add ? a.rat + b.rat : a.rat - b.rat;
      if (a.rat.is_zero()) throw ParseError(e.line, e.col, "expression is identically zero");
      return a;
    }
    case K::Mul: return mul(eval(*e.args[0]), eval(*e.args[1]), 1);
    case K::Div: {
      HyperForm b = eval(*e.args[1]);
      if (b.rat.is_zero()) throw ParseError(e.line, e.col, "division by zero");
      return mul(eval(*e.args[0]), b, -1);
    }
    case K::Pow: {
      h = eval(*e.args[0]);
      if (h.rat.is_zero()) {
        if (e.exponent < 0) throw ParseError(e.line, e.col, "division by zero");
        return h;
      }
      h.rat = rat_pow(h.rat, e.exponent);
      for (auto& [k, x] : h.gammas) x *= e.exponent;
      if (e.exponent == 0) h.gammas.clear();
      return h;
    }
    case K::Call: {
      std::vector<Lin> a;
      for (const auto& arg : e.args) a.push_back(as_linear(eval(*arg), e, e.name));
      auto plus = [](Lin l, const Rat& d) {
        l.c += d;
        return l;
      };
      auto minus = [](const Lin& p, const Lin& q) { return Lin{p.m - q.m, p.n - q.n, p.c - q.c}; };
      if (e.name == "factorial") {
        add_gamma(h, plus(a[0], 1), 1, e);
      } else if (e.name == "binomial") {
        add_gamma(h, plus(a[0], 1), 1, e);
        add_gamma(h, plus(a[1], 1), -1, e);
        add_gamma(h, plus(minus(a[0], a[1]), 1), -1, e);
      } else if (e.name == "pochhammer") {
        add_gamma(h, Lin{a[0].m + a[1].m, a[0].n + a[1].n, a[0].c + a[1].c}, 1, e);
        add_gamma(h, a[0], -1, e);
      } else {  // gamma_ratio
        add_gamma(h, a[0], 1, e);
        add_gamma(h, a[1], -1, e);
      }
      return h;
    }
  }
  return h;
}

// --- printing ---------------------------------------------------------------

std::string rat_term(const Rat& c, const std::string& mono, bool first) {
  std::string s;
  const Rat mag = c.abs();
  if (first) {
    if (c.sign() < 0) s = "-";
  } else {
    s = c.sign() < 0 ? " - " : " + ";
  }
  if (mono.empty()) return s + mag.to_string();
  if (!mag.is_one()) s += mag.to_string() + "*";
  return s + mono;
}

std::string lin_string(long m, long n, const Rat& c) {
  std::string s;
  bool first = true;
  if (m != 0) {
    s += rat_term(Rat(m), "x", first);
    first = false;
  }
  if (n != 0) {
    s += rat_term(Rat(n), "y", first);
    first = false;
  }
  if (!c.is_zero() || first) s += rat_term(c, "", first);
  return s;
}

std::string mono(int i, int j) {
  std::string s;
  if (i > 0) s += "x" + (i > 1 ? "^" + std::to_string(i) : "");
  if (j > 0) s += (s.empty() ? "" : "*") + std::string("y") + (j > 1 ? "^" + std::to_string(j) : "");
  return s;
}

int term_count(const XYPoly& p) {
  int t = 0;
  for (const auto& c : p.coeffs()) {
    for (const auto& r : c.num().coeffs()) t += r.is_zero() ? 0 : 1;
  }
  return t;
}

/// N / D with N, D in Q[x][y], no common content in x, D normalised.
std::pair<XYPoly, XYPoly> cleared(const XYFunc& r) {
  QPoly l(1);
  for (const auto* p : {&r.num(), &r.den()})
    for (const auto& c : p->coeffs()) l = lcm(l, c.den());
  auto scale = [&](const XYPoly& p) { return p.map<QFunc>([&](const QFunc& c) { return c * QFunc(l); }); };
  XYPoly n = scale(r.num()), d = scale(r.den());
  QPoly g;
  for (const auto* p : {&n, &d})
    for (const auto& c : p->coeffs()) g = gcd(g, c.num());
  if (!g.is_zero() && !g.is_one()) {
    auto div = [&](const XYPoly& p) {
      return p.map<QFunc>([&](const QFunc& c) { return QFunc(c.num().exact_div(g)); });
    };
    n = div(n);
    d = div(d);
  }
  const Rat lc = d.lc().num().lc();
  return {n * QFunc(lc.inverse()), d * QFunc(lc.inverse())};
}

/// Exact division by m x + n y + c if possible.
bool divide_linear(XYPoly& p, long m, long n, const Rat& c) {
  if (p.is_zero()) return false;
  if (n != 0) {
    // root y = -(m x + c)/n
    const QFunc root = xq(c, m) * QFunc(Rat(-1) / Rat(n)), zero;
    if (!(p.eval(root) == zero)) return false;
    p = p.exact_div(linear(m, n, c));
    return true;
  }
  const QPoly lx(std::vector<Rat>{c, Rat(m)});
  const Rat root = -c / Rat(m);
  for (const auto& cf : p.coeffs())
    if (!cf.num().eval(root).is_zero()) return false;
  p = p.map<QFunc>([&](const QFunc& cf) { return QFunc(cf.num().exact_div(lx)); });
  return true;
}

bool divide_linear_pow(XYPoly& p, long m, long n, const Rat& c, long e) {
  XYPoly t = p;
  for (long i = 0; i < e; ++i)
    if (!divide_linear(t, m, n, c)) return false;
  p = std::move(t);
  return true;
}

std::string poly_expanded(const XYPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int j = p.degree(); j >= 0; --j) {
    const QPoly c = p.coeff(j).num();
    for (int i = c.degree(); i >= 0; --i) {
      if (c.coeff(i).is_zero()) continue;
      s += rat_term(c.coeff(i), mono(i, j), first);
      first = false;
    }
  }
  return s;
}

}  // namespace

bool HyperForm::uses_x() const {
  for (const auto& [k, e] : gammas)
    if (std::get<0>(k) != 0) return true;
  for (const auto* p : {&rat.num(), &rat.den()})
    for (const auto& c : p->coeffs())
      if (!c.is_constant()) return true;
  return false;
}

bool HyperForm::uses_y() const {
  for (const auto& [k, e] : gammas)
    if (std::get<1>(k) != 0) return true;
  return rat.num().degree() > 0 || rat.den().degree() > 0;
}

HyperForm evaluate(const Expr& e) {
  HyperForm h = eval(e);
  if (h.rat.is_zero()) throw ParseError(e.line, e.col, "expression is identically zero");
  return h;
}

BivariateTerm shift_quotients(const HyperForm& t) {
  BivariateTerm b;
  b.f = sigma_x(t.rat) / t.rat;
  b.g = t.rat.shift(1) / t.rat;
  for (const auto& [k, e] : t.gammas) {
    const auto& [m, n, c] = k;
    if (m != 0) b.f *= rat_pow(rising(m, n, c, m), e);
    if (n != 0) b.g *= rat_pow(rising(m, n, c, n), e);
  }
  if (!is_compatible(b)) throw Error(ErrorCode::Internal, "shift quotients failed the compatibility check");
  return b;
}

HyperForm summable_companion(const HyperForm& t) {
  HyperForm c = t;
  c.rat *= shift_quotients(t).g - XYFunc(1);
  if (c.rat.is_zero()) throw Error(ErrorCode::Math, "companion of a y-free term is zero");
  return c;
}

std::string xy_to_string(const XYPoly& p) { return xy_to_string(XYFunc(p)); }

std::string xy_to_string(const XYFunc& r) {
  auto [n, d] = cleared(r);
  if (d.is_one()) return poly_expanded(n);
  std::string ns = poly_expanded(n), ds = poly_expanded(d);
  if (term_count(n) > 1) ns = "(" + ns + ")";
  if (term_count(d) > 1 || ds.find('*') != std::string::npos) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::string xy_factored(const XYFunc& r) {
  const XYPoly& den = r.den();
  if (den.is_constant()) return xy_to_string(r);
  ShiftBasis<QFunc> sb = shift_basis(std::vector<XYPoly>{den});
  std::string s;
  for (const auto& el : sb.elems) {
    const int mult = power_part(den, el.g).second;
    if (!s.empty()) s += " * ";
    s += "[" + xy_to_string(el.g) + "]";
    if (mult > 1) s += "^" + std::to_string(mult);
    s += " {class " + std::to_string(el.cls) + ", " + (el.pos >= 0 ? "+" : "") + std::to_string(el.pos) + "}";
  }
  return "(" + xy_to_string(r.num()) + ") / (" + s + ")";
}

std::string to_string(const HyperForm& t) {
  auto [n, d] = cleared(t.rat);
  std::vector<std::string> num, den;
  for (const auto& [k, e] : t.gammas) {
    const auto& [m, nn, c] = k;
    long s = 0;
    if (e > 0) {
      while (divide_linear_pow(n, m, nn, c + Rat(s), e)) ++s;
      if (s == 0)
        while (divide_linear_pow(d, m, nn, c + Rat(s - 1), e)) --s;
    } else {
      while (divide_linear_pow(d, m, nn, c + Rat(s), -e)) ++s;
      if (s == 0)
        while (divide_linear_pow(n, m, nn, c + Rat(s - 1), -e)) --s;
    }
    std::string atom = "factorial(" + lin_string(m, nn, c + Rat(s - 1)) + ")";
    const long a = e > 0 ? e : -e;
    if (a > 1) atom += "^" + std::to_string(a);
    (e > 0 ? num : den).push_back(atom);
  }
  const Rat lc = d.lc().num().lc();
  n = n * QFunc(lc.inverse());
  d = d * QFunc(lc.inverse());

  if (!d.is_one()) {
    std::string ds = poly_expanded(d);
    if (term_count(d) > 1 || ds.find('*') != std::string::npos) ds = "(" + ds + ")";
    den.insert(den.begin(), ds);
  }
  std::string out;
  const bool n_one = n.is_one(), n_minus = (-n).is_one();
  if (num.empty() || !(n_one || n_minus)) {
    std::string ns = poly_expanded(n);
    if ((!num.empty() || !den.empty()) && term_count(n) > 1) ns = "(" + ns + ")";
    num.insert(num.begin(), ns);
  } else if (n_minus) {
    out = "-";
  }
  for (std::size_t i = 0; i < num.size(); ++i) out += (i ? "*" : "") + num[i];
  if (den.empty()) return out;
  std::string ds;
  for (std::size_t i = 0; i < den.size(); ++i) ds += (i ? "*" : "") + den[i];
  const bool bare = den.size() == 1 && (ds.front() == '(' || ds.find_first_of("^*") == std::string::npos);
  return out + "/" + (bare ? ds : "(" + ds + ")");
}

RatFunc<Rat> to_univariate(const XYFunc& r) {
  auto down = [](const XYPoly& p) {
    return p.map<Rat>([](const QFunc& c) {
      if (!c.is_constant()) throw Error(ErrorCode::Internal, "coefficient depends on x");
      return c.num().coeff(0);
    });
  };
  return RatFunc<Rat>::from_coprime(down(r.num()), down(r.den()));
}

XYFunc from_univariate(const RatFunc<Rat>& r) {
  auto up = [](const QPoly& p) { return p.map<QFunc>([](const Rat& c) { return QFunc(c); }); };
  return XYFunc::from_coprime(up(r.num()), up(r.den()));
}

}  // namespace hypersum
