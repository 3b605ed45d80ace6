#pragma once

// Minimal telescopers L = sum_i l_i S_x^i for bivariate hypergeometric terms,
// built from reductions w.r.t. y over F = Q(x).

#include <optional>
#include <vector>

#include "hypersum/residual.hpp"

namespace hypersum {

using XYPoly = Poly<QFunc>;
using XYFunc = RatFunc<QFunc>;

/// T given by its shift quotients f = sigma_x(T)/T, g = sigma_y(T)/T.
struct BivariateTerm {
  XYFunc f{1};
  XYFunc g{1};
};

XYPoly sigma_x(const XYPoly& p, long k = 1);
XYFunc sigma_x(const XYFunc& r, long k = 1);

/// sigma_x(g)/g == sigma_y(f)/f
bool is_compatible(const BivariateTerm& t);

/// Every irreducible factor is a polynomial in m x + n y for some integers m, n.
/// Coefficient denominators (functions of x alone) are ignored. Throws on zero.
bool is_integer_linear(const XYPoly& p);

struct ExistenceTest {
  bool exists = false;
  ReductionResult<QFunc> reduction;  // step 2 of the loop
};

ExistenceTest existence_test(const BivariateTerm& t);

struct Telescoper {
  std::vector<QPoly> coeffs;  // l_0 .. l_rho over Q[x]
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

enum class TelescopeStatus { Found, NoTelescoper, OrderCapExceeded };

struct TelescopeStep {
  ResidualForm<QFunc> reduced;  // residual of sigma_x(r_{i-1}) N
  ResidualForm<QFunc> aligned;  // congruent, shares shift classes with earlier steps
  int rank = 0;                 // rank of the system for l_0 .. l_i
};

struct TelescopeResult {
  TelescopeStatus status = TelescopeStatus::NoTelescoper;
  KernelShell<QFunc> kernel_shell;
  Telescoper telescoper;
  std::vector<TelescopeStep> steps;
  /// u_j with sigma_x^j(T) = Delta_y(u_j H) + r_j H; filled when a certificate is requested.
  std::vector<XYFunc> certificate_parts;
  /// sum_j l_j u_j, on request; the certificate is combined / shell * T.
  std::optional<XYFunc> combined;
};

struct TelescopeOptions {
  bool want_certificate = false;
  bool combine_certificate = false;
  int max_order = 20;
};

TelescopeResult reduction_ct(const BivariateTerm& t, const TelescopeOptions& opts = {});

/// L(T) = Delta_y(G). With parts, G = (sum l_j u_j)/shell * T is checked directly;
/// otherwise L(T) is tested for summability.
bool verify_telescoper(const BivariateTerm& t, const Telescoper& L,
                       const std::vector<XYFunc>* parts = nullptr);

/// prod_{k<j} sigma_x^k(f) = sigma_x^j(T)/T
XYFunc x_shift_ratio(const XYFunc& f, int j);

/// Rational roots of a polynomial over Q, ascending.
std::vector<Rat> rational_roots(const QPoly& p);

}  // namespace hypersum
