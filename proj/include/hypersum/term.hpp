#pragma once

// Evaluated hypergeometric terms: a rational function of x, y times a product
// of Gamma powers at integer-linear arguments.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "hypersum/expr.hpp"
#include "hypersum/telescoping.hpp"

namespace hypersum {

/// Gamma(m x + n y + c) with 0 <= c < 1.
using GammaKey = std::tuple<long, long, Rat>;

struct HyperForm {
  XYFunc rat{1};
  std::map<GammaKey, long> gammas;  // nonzero exponents only

  bool uses_x() const;
  bool uses_y() const;
};

/// Semantic errors (non integer-linear argument, sum of dissimilar terms, zero
/// term, Gamma pole) are ParseErrors located at the offending node.
HyperForm evaluate(const Expr& e);

/// Shift quotients; compatibility is re-verified (Internal error otherwise).
BivariateTerm shift_quotients(const HyperForm& t);

/// sigma_y(T) - T
HyperForm summable_companion(const HyperForm& t);

/// Term rendered in the input grammar; linear factors next to a Gamma power
/// are absorbed into the factorial argument.
std::string to_string(const HyperForm& t);

/// Expanded bivariate rendering, x-denominators cleared, denominator with
/// leading coefficient 1.
std::string xy_to_string(const XYFunc& r);
std::string xy_to_string(const XYPoly& p);

/// Same with every denominator factor annotated: squarefree multiplicity and
/// shift class, e.g. "[y + 1]^2 {class 0, +0}".
std::string xy_factored(const XYFunc& r);

/// x-free conversions.
RatFunc<Rat> to_univariate(const XYFunc& r);
XYFunc from_univariate(const RatFunc<Rat>& r);

struct BenchParams {
  enum class Family { Univariate, Bivariate } family = Family::Univariate;
  int lambda = 0, mu = 0;
  int alpha = 1, beta = 3;   // univariate Gamma(y - alpha)/Gamma(y - beta); bivariate uses alpha only
  int deg_f = 20, deg_p = 10;  // univariate; bivariate: n = deg_f, m = deg_p
};

/// Deterministic for a given seed. Coefficients are uniform in [-10, 10];
/// p_i with an integer root are resampled.
ExprPtr bench_generate(const BenchParams& params, std::uint64_t seed);

}  // namespace hypersum
