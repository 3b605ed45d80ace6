#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hypersum/partial_fractions.hpp"
#include "hypersum/roots.hpp"

using namespace hypersum;
using testutil::X;
using testutil::Y;

namespace {
const QPoly y = QPoly::var();
}

TEST_CASE("rationals are canonical") {
  CHECK(Rat(BigInt(6), BigInt(-4)) == Rat(BigInt(-3), BigInt(2)));
  CHECK(Rat(BigInt(-3), BigInt(2)).den() == 2);
  CHECK(Rat(0).den() == 1);
  CHECK(Rat::parse("10/4") == Rat(BigInt(5), BigInt(2)));
  CHECK_THROWS_AS(Rat(1) / Rat(0), MathError);
  CHECK_THROWS_AS(Rat::parse("1/0"), MathError);
}

TEST_CASE("gcd examples") {
  CHECK(gcd(y * y - QPoly(1), y - QPoly(1)) == y - QPoly(1));
  CHECK(gcd(y + QPoly(1), y + QPoly(2)) == QPoly(1));
  CHECK(gcd(QPoly(), QPoly()).is_zero());

  // over Q(x): y - x divides both inputs, and the gcd has degree 1
  Poly<QFunc> a = Y(-X()), b = Y(QFunc()) * Y(QFunc()) - Poly<QFunc>(X() * X());
  Poly<QFunc> g = gcd(a, b);
  CHECK(g.divides(a));
  CHECK(g.divides(b));
  CHECK(g == a);
}

TEST_CASE("extended Euclid") {
  auto e = extended_euclid(y, y + QPoly(1));
  CHECK(e.g == QPoly(1));
  CHECK(e.s == QPoly(-1));
  CHECK(e.t == QPoly(1));

  auto f = extended_euclid(y * y, y);
  CHECK(f.g == y);
  CHECK(f.s.is_zero());
  CHECK(f.t == QPoly(1));

  auto h = extended_euclid(y * y + QPoly(1), y + QPoly(1));
  CHECK(h.g == QPoly(1));
  CHECK(h.s * (y * y + QPoly(1)) + h.t * (y + QPoly(1)) == QPoly(1));

  CHECK_THROWS_AS(extended_euclid(QPoly(), QPoly()), MathError);
}

TEST_CASE("Bezout identity and cofactor degrees on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(0, 10);
  for (int it = 0; it < 1000; ++it) {
    QPoly a = testutil::rand_qpoly(rng, deg(rng)), b = testutil::rand_qpoly(rng, deg(rng));
    if (it % 7 == 0) {
      QPoly c = testutil::rand_qpoly(rng, 2);
      a *= c;
      b *= c;
    }
    auto e = extended_euclid(a, b);
    REQUIRE(e.s * a + e.t * b == e.g);
    CHECK(e.g == gcd(a, b));
    QPoly ag = a.exact_div(e.g), bg = b.exact_div(e.g);
    if (!bg.is_constant()) CHECK(e.s.degree() < bg.degree());
    if (!ag.is_constant()) CHECK(e.t.degree() < ag.degree());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    QPoly p = testutil::rand_qpoly(rng, 5), q = testutil::rand_qpoly(rng, 4), r = testutil::rand_qpoly(rng, 3);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q).degree() == p.degree() + q.degree());
    auto [qq, rr] = p.divmod(r);
    CHECK(qq * r + rr == p);
    CHECK(rr.degree() < r.degree());
  }
}

TEST_CASE("rational function canonical form") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    QPoly n = testutil::rand_qpoly(rng, 3), d = testutil::rand_qpoly(rng, 3), c = testutil::rand_qpoly(rng, 2);
    QFunc f(n * c, d * c);
    CHECK(gcd(f.num(), f.den()).is_one());
    CHECK(f.den().lc().is_one());
    QFunc g(n, d);
    CHECK(f == g);
    // a/b == c/d iff ad == cb
    CHECK(f.num() * d == n * f.den());
    CHECK((f - g).is_zero());
    CHECK(f / g == QFunc(1));
  }
  CHECK_THROWS_AS(QFunc(QPoly(1), QPoly()), MathError);
}

TEST_CASE("partial fractions") {
  auto pf = partial_fractions(QFunc(QPoly(1), y * (y + QPoly(1))), {y, y + QPoly(1)});
  CHECK(pf.poly_part.is_zero());
  REQUIRE(pf.parts.size() == 2);
  CHECK(pf.parts[0] == QFunc(QPoly(1), y));
  CHECK(pf.parts[1] == QFunc(QPoly(-1), y + QPoly(1)));

  // y^2 = (y - 1)(y + 1) + 1
  auto pf2 = partial_fractions(QFunc(y * y, y + QPoly(1)), {y + QPoly(1)});
  CHECK(pf2.poly_part == y - QPoly(1));
  REQUIRE(pf2.parts.size() == 1);
  CHECK(pf2.parts[0] == QFunc(QPoly(1), y + QPoly(1)));

  QPoly p = y * y * y + QPoly(2);
  auto pf3 = partial_fractions(QFunc(p), {QPoly(1)});
  CHECK(pf3.poly_part == p);
  CHECK(pf3.parts.empty());

  CHECK_THROWS_AS(partial_fractions(QFunc(QPoly(1), y * y), {y, y}), MathError);
  CHECK_THROWS_AS(partial_fractions(QFunc(QPoly(1), y), {y + QPoly(1)}), MathError);
}

TEST_CASE("partial fractions recombine exactly") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    std::vector<QPoly> fs;
    QPoly den(1);
    for (int k = 0; k < 3; ++k) {
      QPoly f = testutil::rand_qpoly(rng, 1 + k % 2);
      if (!gcd(f, den).is_one() || f.is_constant()) continue;
      fs.push_back(f);
      den *= f;
    }
    QFunc f(testutil::rand_qpoly(rng, 6), den);
    // the reduced denominator may have lost factors; use the surviving ones
    std::vector<QPoly> use;
    for (const auto& g : fs) {
      QPoly h = gcd(g, f.den());
      if (!h.is_constant()) use.push_back(h);
    }
    auto pf = partial_fractions(f, use);
    QFunc sum(pf.poly_part);
    for (const auto& part : pf.parts) sum += part;
    CHECK(sum == f);
    for (std::size_t i = 0; i < pf.parts.size(); ++i) CHECK(pf.parts[i].num().degree() < use[i].degree());
  }
}

TEST_CASE("resultant sign matches the Sylvester determinant") {
  CHECK(resultant(y - QPoly(1), y - QPoly(2)) == Rat(-1));
  CHECK(testutil::sylvester_resultant(y - QPoly(1), y - QPoly(2)) == Rat(-1));
  CHECK(resultant(y, y).is_zero());
  CHECK(resultant(y * y + QPoly(1), y * y + QPoly(1)).is_zero());

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int it = 0; it < 200; ++it) {
    QPoly a = testutil::rand_qpoly(rng, deg(rng)), b = testutil::rand_qpoly(rng, deg(rng));
    CHECK(resultant(a, b) == testutil::sylvester_resultant(a, b));
  }
}

TEST_CASE("integer roots") {
  CHECK(integer_roots(y * y - QPoly(3) * y + QPoly(2)) == std::vector<long>{1, 2});
  CHECK(integer_roots(y * y + QPoly(1)).empty());
  CHECK(integer_roots(y * y * (y + QPoly(7))) == std::vector<long>{-7, 0});
  CHECK_THROWS_AS(integer_roots(QPoly()), MathError);

  // (k - 1)(k - x) over Q(x)
  Poly<QFunc> k1 = Y(QFunc(-1)), kx = Y(-X());
  CHECK(integer_roots(k1 * kx) == std::vector<long>{1});
  CHECK(integer_roots(kx).empty());
}

TEST_CASE("integer roots beyond the brute-force window") {
  // roots large enough to force the modular lifting path
  QPoly p = (y - QPoly(123457)) * (y + QPoly(99991)) * (QPoly(3) * y - QPoly(1)) * (y * y + QPoly(5));
  CHECK(integer_roots(p) == std::vector<long>{-99991, 123457});
  QPoly big = (y - QPoly(Rat(BigInt("4000000000000")))) * (y - QPoly(2));
  auto r = integer_roots(big);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == 2);
  CHECK(r[1] == 4000000000000L);
}

TEST_CASE("integer roots agree with brute force") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> root(-30, 30), deg(0, 3);
  for (int it = 0; it < 200; ++it) {
    QPoly p(1);
    std::set<long> planted;
    for (int k = 0; k < 3; ++k) {
      long r = root(rng);
      p *= y - QPoly(static_cast<int>(r));
    }
    p *= testutil::rand_qpoly(rng, deg(rng));
    if (p.is_zero()) continue;
    auto a = primitive_integer_coeffs(p);
    BigInt B = 1;
    for (const auto& c : a) B = std::max(B, big_abs(c));
    const long w = std::min<long>(B.get_si() + 1, 5000);
    std::vector<long> brute;
    for (long n = -w; n <= w; ++n)
      if (p.eval(Rat(n)).is_zero()) brute.push_back(n);
    CHECK(integer_roots(p) == brute);
  }
}
