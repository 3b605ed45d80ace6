#include "doctest.h"
#include "helpers.hpp"
#include "hypersum/telescoping.hpp"

using namespace hypersum;
using testutil::X;
using testutil::Y;

namespace {

QFunc xc(int c) { return X() + QFunc(c); }
QFunc cst(int c) { return QFunc(c); }
XYPoly yp() { return Y(QFunc(0)); }
// a x + b y + c
XYPoly lin(int a, int b, int c) { return XYPoly(std::vector<QFunc>{X() * QFunc(a) + QFunc(c), QFunc(b)}); }
XYFunc frac(const XYPoly& n, const XYPoly& d) { return XYFunc(n, d); }

XYFunc cube(const XYFunc& r) { return r * r * r; }

BivariateTerm binomial_term(int power) {
  XYFunc f = frac(XYPoly(xc(1)), lin(1, -1, 1));  // (x+1)/(x+1-y)
  XYFunc g = frac(lin(1, -1, 0), Y(cst(1)));       // (x-y)/(y+1)
  BivariateTerm t;
  for (int i = 0; i < power; ++i) {
    t.f = t.f * f;
    t.g = t.g * g;
  }
  return t;
}

QPoly qx(std::initializer_list<int> c) {
  std::vector<Rat> v;
  for (int z : c) v.emplace_back(z);
  return QPoly(v);
}

// exhaustive PDE oracle over small slopes for an irreducible p
bool any_slope_annihilates(const XYPoly& p, int bound) {
  for (int m = -bound; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) {
      if (m == 0 && n == 0) continue;
      XYPoly dx = p.map<QFunc>([](const QFunc& c) { return QFunc(c.num().derivative()); });
      if ((dx * QFunc(n) - p.derivative() * QFunc(m)).is_zero()) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("sigma_x and compatibility") {
  XYPoly p = lin(2, 1, 3);
  CHECK(sigma_x(p) == lin(2, 1, 5));
  CHECK(sigma_x(sigma_x(p), -1) == p);
  CHECK(is_compatible(binomial_term(1)));
  CHECK(is_compatible(binomial_term(3)));
  BivariateTerm bad = binomial_term(1);
  bad.f = bad.f * frac(yp(), XYPoly(cst(1)));
  CHECK_FALSE(is_compatible(bad));
  CHECK(x_shift_ratio(binomial_term(1).f, 0) == XYFunc(1));
  CHECK(x_shift_ratio(binomial_term(1).f, 2) == binomial_term(1).f * sigma_x(binomial_term(1).f));
}

TEST_CASE("rational roots") {
  // (2x - 3)(x + 5)(x^2 + 1)
  QPoly p = qx({-3, 2}) * qx({5, 1}) * qx({1, 0, 1});
  auto r = rational_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Rat(-5));
  CHECK(r[1] == Rat(BigInt(3), BigInt(2)));
  CHECK(rational_roots(qx({7})).empty());
}

TEST_CASE("integer-linearity") {
  CHECK(is_integer_linear(lin(1, 1, 0) * lin(2, 1, -1)));
  CHECK(is_integer_linear(yp() * yp() + XYPoly(cst(3))));  // univariate in y
  CHECK(is_integer_linear(XYPoly(X() * X() + QFunc(1))));  // univariate in x
  CHECK(is_integer_linear(pow(lin(1, 1, 0), 2) * lin(1, -1, 4) * lin(3, 2, 1)));
  CHECK(is_integer_linear(XYPoly(X() * X() + QFunc(1)) * lin(1, 2, 0)));
  // (x + y)^2 + 1 is a polynomial in x + y
  CHECK(is_integer_linear(lin(1, 1, 0) * lin(1, 1, 0) + XYPoly(cst(1))));

  // x^2 + y^3
  XYPoly a = XYPoly(X() * X()) + pow(yp(), 3);
  CHECK_FALSE(any_slope_annihilates(a, 6));
  CHECK_FALSE(is_integer_linear(a));
  // y^2 + x
  XYPoly b = yp() * yp() + XYPoly(X());
  CHECK_FALSE(any_slope_annihilates(b, 4));
  CHECK_FALSE(is_integer_linear(b));
  CHECK_FALSE(is_integer_linear(b * lin(1, 1, 0)));
  // x y + 1: top form x y has rational slopes but the polynomial is not linear in them
  XYPoly c = yp() * XYPoly(X()) + XYPoly(cst(1));
  CHECK_FALSE(is_integer_linear(c));
  CHECK_THROWS_AS(is_integer_linear(XYPoly()), MathError);
}

TEST_CASE("existence test") {
  CHECK(existence_test(binomial_term(3)).exists);
  // T = x! y! / (y^2 + x)
  XYPoly w = yp() * yp() + XYPoly(X());
  BivariateTerm t;
  t.f = frac(XYPoly(xc(1)) * w, sigma_x(w));
  t.g = frac(Y(cst(1)) * w, w.shift(1));
  REQUIRE(is_compatible(t));
  auto ex = existence_test(t);
  CHECK_FALSE(ex.exists);
  CHECK_FALSE(ex.reduction.residual.is_zero());
  auto res = reduction_ct(t);
  CHECK(res.status == TelescopeStatus::NoTelescoper);
}

TEST_CASE("summable term has the trivial telescoper") {
  // y y! x!
  BivariateTerm t;
  t.f = XYFunc(XYPoly(xc(1)));
  t.g = frac(Y(cst(1)) * Y(cst(1)), yp());
  TelescopeOptions o;
  o.want_certificate = true;
  auto res = reduction_ct(t, o);
  REQUIRE(res.status == TelescopeStatus::Found);
  CHECK(res.telescoper.order() == 0);
  CHECK(res.telescoper.coeffs[0] == QPoly(1));
  CHECK(verify_telescoper(t, res.telescoper));
  CHECK(verify_telescoper(t, res.telescoper, &res.certificate_parts));
}

TEST_CASE("binomial(x, y): S_x - 2") {
  BivariateTerm t = binomial_term(1);
  TelescopeOptions o;
  o.want_certificate = true;
  o.combine_certificate = true;
  auto res = reduction_ct(t, o);
  REQUIRE(res.status == TelescopeStatus::Found);
  REQUIRE(res.telescoper.order() == 1);
  CHECK(res.telescoper.coeffs[0] == QPoly(-2));
  CHECK(res.telescoper.coeffs[1] == QPoly(1));
  CHECK(verify_telescoper(t, res.telescoper));
  CHECK(verify_telescoper(t, res.telescoper, &res.certificate_parts));
  REQUIRE(res.combined.has_value());
  Telescoper bad{{QPoly(-3), QPoly(1)}};
  CHECK_FALSE(verify_telescoper(t, bad));
  CHECK_FALSE(verify_telescoper(t, bad, &res.certificate_parts));
}

TEST_CASE("binomial(x, y)^3: order two") {
  BivariateTerm t = binomial_term(3);
  TelescopeOptions o;
  o.want_certificate = true;
  auto res = reduction_ct(t, o);
  REQUIRE(res.status == TelescopeStatus::Found);
  REQUIRE(res.telescoper.order() == 2);
  // (x+2)^2 S_x^2 - (7x^2+21x+16) S_x - 8(x+1)^2
  CHECK(res.telescoper.coeffs[2] == qx({4, 4, 1}));
  CHECK(res.telescoper.coeffs[1] == qx({-16, -21, -7}));
  CHECK(res.telescoper.coeffs[0] == qx({-8, -16, -8}));
  CHECK(verify_telescoper(t, res.telescoper));
  CHECK(verify_telescoper(t, res.telescoper, &res.certificate_parts));

  // shell 1, kernel g, residuals q_i / (y+1)^3
  CHECK(res.kernel_shell.shell == XYFunc(1));
  CHECK(res.kernel_shell.kernel.v == pow(Y(cst(1)), 3));
  REQUIRE(res.steps.size() == 3);
  const XYPoly y = yp();
  const XYPoly q0 = XYPoly(xc(1) * QFunc(Rat(BigInt(1), BigInt(2)))) *
                    (XYPoly(X() * X() - X() + QFunc(1)) + XYPoly(cst(3)) * y * (y - XYPoly(X()) + XYPoly(cst(1))));
  const XYPoly q1 = XYPoly(xc(1) * xc(1) * xc(1));
  const QFunc c2 = xc(1) * xc(1) * xc(1) / (xc(2) * xc(2));
  const XYPoly q2 = XYPoly(c2) * (XYPoly(X() * X() * QFunc(11) + X() * QFunc(17) + QFunc(20)) +
                                  y * XYPoly(QFunc(12) - X() * QFunc(12)) + y * y * XYPoly(cst(12)));
  const std::vector<XYPoly> qs{q0, q1, q2};
  for (int i = 0; i < 3; ++i) {
    CHECK(res.steps[static_cast<std::size_t>(i)].aligned.a.is_zero());
    CHECK(res.steps[static_cast<std::size_t>(i)].aligned.q == qs[static_cast<std::size_t>(i)]);
  }
  // minimality: orders 0 and 1 have only the trivial solution
  CHECK(res.steps[0].rank == 1);
  CHECK(res.steps[1].rank == 2);
  CHECK(res.steps[2].rank == 2);
}

TEST_CASE("loop invariant sigma_x^i(T) = Delta_y(u_i H) + r_i H") {
  // binomial(x,y)^2 / (x + y + 1)
  BivariateTerm t = binomial_term(2);
  XYPoly w = lin(1, 1, 1);
  t.f = t.f * frac(w, sigma_x(w));
  t.g = t.g * frac(w, w.shift(1));
  REQUIRE(is_compatible(t));
  TelescopeOptions o;
  o.want_certificate = true;
  auto res = reduction_ct(t, o);
  REQUIRE(res.status == TelescopeStatus::Found);
  const auto& K = res.kernel_shell.kernel;
  const XYFunc& S = res.kernel_shell.shell;
  for (std::size_t i = 0; i < res.steps.size(); ++i) {
    XYFunc lhs = x_shift_ratio(t.f, static_cast<int>(i)) * S;
    XYFunc rhs = K.value() * res.certificate_parts[i].shift(1) - res.certificate_parts[i] + res.steps[i].aligned.value();
    CHECK(lhs == rhs);
    if (i + 1 < res.steps.size()) CHECK(res.steps[i].rank == static_cast<int>(i) + 1);
  }
  CHECK(verify_telescoper(t, res.telescoper));
  CHECK(verify_telescoper(t, res.telescoper, &res.certificate_parts));
}

TEST_CASE("rescaling T by a function of x") {
  // T' = c(x) T: the telescoper for T' is l_j / c(x + j), renormalised
  BivariateTerm t = binomial_term(2);
  auto base = reduction_ct(t);
  REQUIRE(base.status == TelescopeStatus::Found);
  const QFunc c = QFunc(qx({1, 0, 1}), qx({3, 1}));  // (x^2+1)/(x+3)
  BivariateTerm t2 = t;
  t2.f = t2.f * XYFunc(c.shift(1) / c);
  auto res = reduction_ct(t2);
  REQUIRE(res.status == TelescopeStatus::Found);
  REQUIRE(res.telescoper.order() == base.telescoper.order());
  std::vector<QFunc> expect, got;
  for (int j = 0; j <= base.telescoper.order(); ++j) {
    expect.push_back(QFunc(base.telescoper.coeffs[static_cast<std::size_t>(j)]) / c.shift(j));
    got.push_back(QFunc(res.telescoper.coeffs[static_cast<std::size_t>(j)]));
  }
  const QFunc ratio = got.back() / expect.back();
  for (std::size_t j = 0; j < got.size(); ++j) CHECK(got[j] == ratio * expect[j]);
  CHECK(verify_telescoper(t2, res.telescoper));
}

TEST_CASE("order cap and invalid input") {
  TelescopeOptions o;
  o.max_order = 1;
  auto res = reduction_ct(binomial_term(3), o);
  CHECK(res.status == TelescopeStatus::OrderCapExceeded);
  BivariateTerm bad = binomial_term(1);
  bad.f = bad.f * frac(yp(), XYPoly(cst(1)));
  CHECK_THROWS_AS(reduction_ct(bad), MathError);
  CHECK_FALSE(verify_telescoper(bad, Telescoper{{QPoly(1)}}));
}
