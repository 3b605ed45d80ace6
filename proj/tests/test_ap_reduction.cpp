#include "doctest.h"
#include "helpers.hpp"
#include "hypersum/ap_reduction.hpp"

using namespace hypersum;

namespace {

const QPoly y = QPoly::var();
QPoly L(int c) { return y + QPoly(c); }
Rat R(long n, long d) { return Rat(BigInt(n), BigInt(d)); }
QPoly C(const Rat& c) { return QPoly(c); }

Kernel<Rat> kernel(const QPoly& u, const QPoly& v) { return Kernel<Rat>::make(u, v); }

// Oracle for dim W_K: eliminate phi_K(y^i), i <= N, and count the leading
// degrees below M. No use of the case table.
int complement_dimension(const Kernel<Rat>& K, int M, int N) {
  std::vector<QPoly> ech;  // distinct leading degrees
  for (int i = 0; i <= N; ++i) {
    QPoly p = K.u * QPoly::monomial(Rat(1), i).shift(1) - K.v * QPoly::monomial(Rat(1), i);
    bool again = true;
    while (again && !p.is_zero()) {
      again = false;
      for (const auto& e : ech) {
        if (e.degree() == p.degree()) {
          p -= e * (p.lc() / e.lc());
          again = true;
          break;
        }
      }
    }
    if (!p.is_zero()) ech.push_back(p);
  }
  int below = 0;
  for (const auto& e : ech) below += e.degree() < M ? 1 : 0;
  return M - below;
}

bool is_shift_reduced_kernel(const QPoly& u, const QPoly& v) {
  return gcd(u, v).is_one() && is_shift_reduced(u, v);
}

}  // namespace

TEST_CASE("phi_K") {
  Kernel<Rat> K = kernel(pow(y, 4) + QPoly(1), pow(L(1), 4));
  QPoly p = pow(y, 4) + C(R(1, 3)) * y + C(R(1, 2));
  CHECK(phi_K(p, K) == C(R(5, 3)) * y * y + QPoly(2) * y + C(R(4, 3)));
  CHECK(phi_K(QPoly(1), kernel(L(1), QPoly(1))) == y);
  CHECK_THROWS_AS(phi_K(y, Kernel<Rat>{}), MathError);
  std::mt19937_64 rng(2);
  for (int it = 0; it < 50; ++it) {
    QPoly a = testutil::rand_qpoly(rng, 5), b = testutil::rand_qpoly(rng, 3);
    Rat l = testutil::rand_rat(rng), m = testutil::rand_rat(rng);
    CHECK(phi_K(a * l + b * m, K) == phi_K(a, K) * l + phi_K(b, K) * m);
  }
}

TEST_CASE("phi basis: the five cases") {
  auto b5 = build_phi_basis(kernel(pow(y, 4) + QPoly(1), pow(L(1), 4)));
  CHECK(b5.case_id == 5);
  CHECK(*b5.tau == Rat(4));
  CHECK(b5.complement_exponents == std::set<int>{0, 1, 7});
  CHECK(b5.special_preimage == pow(y, 4) + C(R(1, 3)) * y + C(R(1, 2)));
  CHECK(b5.special_image == C(R(5, 3)) * y * y + QPoly(2) * y + C(R(4, 3)));

  auto b2 = build_phi_basis(kernel(L(1), QPoly(1)));
  CHECK(b2.case_id == 2);
  CHECK(b2.complement_exponents == std::set<int>{0});
  for (int d = 0; d <= 5; ++d) {
    auto r = polynomial_reduction(QPoly::monomial(Rat(1), d), b2);
    CHECK(r.q.is_constant());
  }

  auto b1 = build_phi_basis(kernel(QPoly(1), y));
  CHECK(b1.case_id == 1);
  CHECK(b1.complement_exponents == std::set<int>{0});
  for (int d = 0; d <= 5; ++d) CHECK(polynomial_reduction(QPoly::monomial(Rat(1), d), b1).q.is_constant());

  auto b3 = build_phi_basis(kernel(pow(y, 3) + QPoly(2), pow(y, 3) + QPoly(5)));
  CHECK(b3.case_id == 3);
  CHECK(b3.complement_exponents == std::set<int>{1, 2});

  auto b4 = build_phi_basis(kernel(y * y + QPoly(2), y * y + C(R(1, 2)) * y + QPoly(7)));
  CHECK(b4.case_id == 4);
  CHECK(b4.complement_exponents == std::set<int>{0});

  CHECK_THROWS_AS(build_phi_basis(Kernel<Rat>{}), MathError);
}

TEST_CASE("polynomial reduction") {
  auto b2 = build_phi_basis(kernel(L(1), QPoly(1)));
  auto z = polynomial_reduction(QPoly(), b2);
  CHECK(z.f.is_zero());
  CHECK(z.q.is_zero());
  auto r = polynomial_reduction(y, b2);
  CHECK(r.f == QPoly(1));
  CHECK(r.q.is_zero());

  std::mt19937_64 rng(4);
  std::vector<Kernel<Rat>> ks = {kernel(pow(y, 4) + QPoly(1), pow(L(1), 4)), kernel(L(1), QPoly(1)),
                                 kernel(QPoly(1), y), kernel(pow(y, 3) + QPoly(2), pow(y, 3) + QPoly(5)),
                                 kernel(y * y + QPoly(2), y * y + C(R(1, 2)) * y + QPoly(7))};
  for (const auto& K : ks) {
    auto basis = build_phi_basis(K);
    for (int it = 0; it < 30; ++it) {
      QPoly p = testutil::rand_qpoly(rng, static_cast<int>(rng() % 13));
      auto pr = polynomial_reduction(p, basis);
      CHECK(phi_K(pr.f, K) + pr.q == p);
      for (int i = 0; i <= pr.q.degree(); ++i)
        if (!pr.q.coeff(i).is_zero()) CHECK(basis.complement_exponents.count(i) == 1);
      // uniqueness: p + phi(h) reduces to the same q
      QPoly h = testutil::rand_qpoly(rng, 4);
      auto pr2 = polynomial_reduction(p + phi_K(h, K), basis);
      CHECK(pr2.q == pr.q);
      CHECK(pr2.f == pr.f + h);
    }
  }
}

TEST_CASE("dimension of W_K over random kernels") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-5, 5);
  int seen[6] = {0, 0, 0, 0, 0, 0};
  int tested = 0;
  for (int it = 0; tested < 120 && it < 5000; ++it) {
    int kind = it % 5;
    QPoly u, v;
    switch (kind) {
      case 0:  // deg v > deg u
        u = testutil::rand_qpoly(rng, 1);
        v = testutil::rand_qpoly(rng, 3).monic();
        break;
      case 1:  // same degree, different leading coefficients
        u = testutil::rand_qpoly(rng, 2) * Rat(2);
        v = testutil::rand_qpoly(rng, 2).monic();
        break;
      case 2: {  // low-order difference
        u = pow(y, 3) + QPoly(c(rng)) * y + QPoly(c(rng));
        v = u + QPoly(c(rng) == 0 ? 1 : c(rng));
        break;
      }
      case 3: {  // beta = alpha1 - 1, generic tau
        u = y * y + QPoly(c(rng));
        v = u + C(testutil::rand_rat(rng, 5, 3)) * y + QPoly(c(rng));
        break;
      }
      case 4: {  // beta = alpha1 - 1, tau a positive integer
        int t = 1 + static_cast<int>(rng() % 6);
        u = pow(y, 3) + QPoly(c(rng)) * y + QPoly(c(rng) * 7 + 1);
        v = u + QPoly(t) * y * y + QPoly(c(rng)) * y + QPoly(c(rng));
        break;
      }
    }
    if (u.is_zero() || v.is_zero() || v - u == QPoly()) continue;
    if (!is_shift_reduced_kernel(u, v)) continue;
    Kernel<Rat> K = kernel(u, v);
    if (K.is_one()) continue;
    auto basis = build_phi_basis(K);
    ++seen[basis.case_id];
    ++tested;
    const int a1 = basis.alpha1, a2 = basis.alpha2;
    int expected = basis.case_id == 1 ? a2 : basis.case_id == 2 ? a1 : a1 - 1;
    CHECK(static_cast<int>(basis.complement_exponents.size()) == expected);
    int bound = std::max(a1, a2) - (basis.beta <= a1 - 1 ? 1 : 0);
    CHECK(static_cast<int>(basis.complement_exponents.size()) <= bound);
    int M = 14 + (basis.complement_exponents.empty() ? 0 : *basis.complement_exponents.rbegin());
    CHECK(complement_dimension(K, M, M + 8) == expected);
  }
  CHECK(tested >= 100);
  for (int k = 1; k <= 5; ++k) CHECK(seen[k] > 0);
}

TEST_CASE("shell reduction") {
  Kernel<Rat> K = kernel(L(1), QPoly(1));
  QFunc S(y * y, L(1));
  auto sr = shell_reduction(S, K);
  CHECK(sr.a == QPoly(-1));
  CHECK(sr.b == L(2));
  CHECK(sr.p == y);
  CHECK(check_congruence(S, K, sr.S1, QFunc(sr.a, sr.b) + QFunc(sr.p, K.v)));

  auto s2 = shell_reduction(QFunc(y), K);
  CHECK(s2.a.is_zero());
  CHECK(s2.p == y);

  std::mt19937_64 rng(12);
  for (int it = 0; it < 30; ++it) {
    QFunc w(testutil::rand_qpoly(rng, 2), L(static_cast<int>(rng() % 9) - 4) * testutil::rand_qpoly(rng, 1));
    QFunc T = K.value() * w.shift(1) - w;
    if (T.is_zero()) continue;
    auto r = shell_reduction(T, K);
    CHECK(r.a.is_zero());
    auto q = polynomial_reduction(r.p, build_phi_basis(K));
    CHECK(q.q.is_zero());
  }
  CHECK_THROWS_AS(shell_reduction(S, Kernel<Rat>{}), MathError);
}

TEST_CASE("shell reduction output is shift-free and strongly prime") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<Kernel<Rat>> ks = {kernel(L(1), QPoly(1)), kernel(QPoly(1), y), kernel((QPoly(2) * y + QPoly(1)) * (QPoly(3) * y + QPoly(1)), L(1) * y),
                                 kernel(pow(y, 4) + QPoly(1), pow(L(1), 4)), kernel(QPoly(2), QPoly(1))};
  for (const auto& K : ks) {
    for (int it = 0; it < 25; ++it) {
      QPoly den = L(c(rng)) * L(c(rng)) * L(c(rng));
      if (it % 2) den *= L(c(rng)) * (y * y + QPoly(1)).shift(c(rng));
      QFunc S(testutil::rand_qpoly(rng, 4), den);
      if (S.is_zero()) continue;
      auto sr = shell_reduction(S, K);
      CHECK(check_congruence(S, K, sr.S1, QFunc(sr.a, sr.b) + QFunc(sr.p, K.v)));
      CHECK(is_shift_free(sr.b));
      CHECK(is_strongly_prime(sr.b, K));
      CHECK(sr.a.degree() < sr.b.degree());
      CHECK(gcd(sr.a, sr.b).is_one());
    }
  }
}

TEST_CASE("modified reduction: golden examples") {
  // y^2 y!/(y + 1)
  QFunc g(pow(L(1), 4), y * y * L(2));
  auto rr = modified_ap_reduction(g);
  CHECK(rr.kernel.u == L(1));
  CHECK(rr.kernel.v == QPoly(1));
  CHECK(rr.shell == QFunc(y * y, L(1)));
  CHECK(rr.cofactor == QFunc(y, L(1)));
  CHECK(rr.residual.a == QPoly(-1));
  CHECK(rr.residual.b == L(2));
  CHECK(rr.residual.q.is_zero());
  CHECK(check_congruence(rr.shell, rr.kernel, rr.cofactor, rr.residual.value()));
  CHECK_FALSE(is_summable(g).summable);

  // y y!
  auto s = is_summable(QFunc(L(1) * L(1), y));
  CHECK(s.summable);
  // certificate G = (cofactor/shell) T = y!
  CHECK(s.witness_ratio() == QFunc(QPoly(1), y));
}

TEST_CASE("rational reduction") {
  CHECK(rational_reduction(QFunc(QPoly(1), y * L(1))).is_zero());
  auto h = rational_reduction(QFunc(QPoly(1), y));
  CHECK(h.a == QPoly(1));
  CHECK(h.b == y);
  CHECK(rational_reduction(QFunc(pow(y, 5) + QPoly(3))).is_zero());
  auto full = rational_reduction_full(QFunc(pow(y, 5) + QPoly(3)));
  CHECK(check_congruence(full.shell, full.kernel, full.cofactor, full.residual.value()));
  // K = 1 routes through rational reduction
  auto rr = modified_ap_reduction(QFunc(L(1) * L(1), L(2) * y));
  CHECK(rr.kernel.is_one());
}

TEST_CASE("constructed summable and non-summable terms") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> c(-5, 5);
  int summable_ok = 0, planted_ok = 0;
  for (int it = 0; it < 60; ++it) {
    // H with kernel K; T = Delta(r H) has shell K sigma(r) - r
    QPoly u = L(c(rng)), v = (it % 2) ? QPoly(1) : L(c(rng)) * QPoly(1);
    if (!is_shift_reduced_kernel(u, v)) continue;
    Kernel<Rat> K = kernel(u, v);
    QFunc r(testutil::rand_qpoly(rng, 2), L(c(rng)) * L(c(rng)));
    QFunc S = K.value() * r.shift(1) - r;
    if (S.is_zero()) continue;
    auto basis = build_phi_basis(K);
    auto rr = reduce_shell(S, basis);
    CHECK(check_congruence(S, K, rr.cofactor, rr.residual.value()));
    if (rr.residual.is_zero()) ++summable_ok;
    // plant a residual a/b with b shift-free and strongly prime
    QPoly b;
    for (int k = 0; k < 50; ++k) {
      b = L(c(rng) * 3 + 40 + k) * (y * y + QPoly(2));
      if (is_strongly_prime(b, K)) break;
    }
    QFunc planted(testutil::rand_qpoly(rng, 1), b);
    if (planted.is_zero()) continue;
    auto pr = reduce_shell(S + planted, basis);
    CHECK(check_congruence(S + planted, K, pr.cofactor, pr.residual.value()));
    if (!pr.residual.is_zero()) ++planted_ok;
  }
  CHECK(summable_ok > 0);
  CHECK(planted_ok > 0);
}
