#pragma once

// Shell reduction, the map phi_K with its echelon basis, residual forms and
// the modified Abramov-Petkovsek reduction.

#include <optional>
#include <set>
#include <vector>

#include "hypersum/shift.hpp"

namespace hypersum {

/// u * sigma(p) - v * p. Throws when K = 1.
template <class F>
Poly<F> phi_K(const Poly<F>& p, const Kernel<F>& K);

/// Echelon basis of im(phi_K) together with the exponents spanning W_K.
/// Rows are materialised up to max_degree(); extended_to() returns a larger copy.
template <class F>
class PhiBasis {
 public:
  struct Row {
    Poly<F> image;     // deg image == row degree
    Poly<F> preimage;  // phi_K(preimage) == image
  };

  Kernel<F> kernel;
  int case_id = 0;  // 1..5; 0 only for the internal K = 1 basis
  int alpha1 = 0, alpha2 = 0, beta = 0;
  std::optional<F> tau;
  std::set<int> complement_exponents;
  /// Case 5: the reduced image p' and its preimage.
  Poly<F> special_image, special_preimage;

  int max_degree() const { return static_cast<int>(rows_.size()) - 1; }
  /// Row with image degree d, or nullptr if d is a complement exponent.
  const Row* row(int d) const;
  PhiBasis extended_to(int degree) const;
  /// Preimages ordered by increasing image degree (materialised rows only).
  std::vector<Poly<F>> preimages() const;

  template <class G>
  friend PhiBasis<G> build_phi_basis(const Kernel<G>& K);
  template <class G>
  friend PhiBasis<G> build_phi_basis_any(const Kernel<G>& K);

 private:
  // preimage for an ordinary (non-special) row of image degree d, if any
  std::optional<Poly<F>> generic_preimage(int d) const;
  std::vector<std::optional<Row>> rows_;
};

/// Five-case construction. Throws when K = 1.
template <class F>
PhiBasis<F> build_phi_basis(const Kernel<F>& K);
/// Also accepts K = 1 (p -> sigma(p) - p, empty complement).
template <class F>
PhiBasis<F> build_phi_basis_any(const Kernel<F>& K);

template <class F>
struct PolyReduction {
  Poly<F> f;  // p = phi_K(f) + q
  Poly<F> q;  // supported on complement_exponents
};

template <class F>
PolyReduction<F> polynomial_reduction(const Poly<F>& p, const PhiBasis<F>& basis);

template <class F>
struct ResidualForm {
  Poly<F> a;
  Poly<F> b{1};
  Poly<F> q;
  Kernel<F> kernel;

  RatFunc<F> value() const;
  bool is_zero() const { return a.is_zero() && q.is_zero(); }
};

template <class F>
struct ShellReduction {
  RatFunc<F> S1;  // S = K sigma(S1) - S1 + a/b + p/v
  Poly<F> a;
  Poly<F> b{1};
  Poly<F> p;
};

/// Throws when K = 1.
template <class F>
ShellReduction<F> shell_reduction(const RatFunc<F>& S, const Kernel<F>& K);
/// Same contract, K = 1 allowed.
template <class F>
ShellReduction<F> shell_reduction_any(const RatFunc<F>& S, const Kernel<F>& K);

template <class F>
struct ReductionResult {
  Kernel<F> kernel;
  RatFunc<F> shell;
  RatFunc<F> cofactor;  // S = K sigma(cofactor) - cofactor + residual
  ResidualForm<F> residual;
};

/// Reduction of a shell S w.r.t. K (K = 1 allowed), given a basis for K.
template <class F>
ReductionResult<F> reduce_shell(const RatFunc<F>& S, const PhiBasis<F>& basis);

template <class F>
ReductionResult<F> modified_ap_reduction(const RatFunc<F>& g);

template <class F>
ReductionResult<F> rational_reduction_full(const RatFunc<F>& S);
template <class F>
ResidualForm<F> rational_reduction(const RatFunc<F>& S);

template <class F>
struct Summability {
  bool summable = false;
  ReductionResult<F> reduction;
  /// G / T for the certificate T = Delta_y(G); meaningful when summable.
  RatFunc<F> witness_ratio() const { return reduction.cofactor / reduction.shell; }
};

template <class F>
Summability<F> is_summable(const RatFunc<F>& g);

/// S - (K sigma(w) - w) - value == 0.
template <class F>
bool check_congruence(const RatFunc<F>& S, const Kernel<F>& K, const RatFunc<F>& w,
                      const RatFunc<F>& value);

}  // namespace hypersum
