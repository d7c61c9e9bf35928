#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "maclab/dahaop.hpp"
#include "maclab/laurent.hpp"
#include "maclab/rootsys.hpp"

namespace maclab {

/// Unitriangular expansion P = sum_mu c_mu m_mu over dominant mu <= lambda.
struct MacdonaldPoly {
  Exponent lambda;
  KParams k;
  /// Pairs (mu, c_mu) sorted by increasing height; the last entry is (lambda, 1).
  std::vector<std::pair<Exponent, Scalar>> coeffs;

  Scalar coeff(const Exponent& mu) const;
  LaurentPoly to_poly(const RootSystem& rs) const;
  MacdonaldPoly iota() const;
  friend bool operator==(const MacdonaldPoly& a, const MacdonaldPoly& b) {
    return a.lambda == b.lambda && a.coeffs == b.coeffs;
  }
};

/// m_lambda: each weight of the W-orbit once.
LaurentPoly orbit_sum(const RootSystem& rs, const Exponent& lambda);
/// Expansion of a W-invariant polynomial in orbit sums, sorted by height.
std::vector<std::pair<Exponent, Scalar>> orbit_expansion(const RootSystem& rs, const LaurentPoly& f);
/// chi_lambda as the alternating sum over the Weyl denominator.
LaurentPoly weyl_character(const RootSystem& rs, const Exponent& lambda);

/// d_k = q^{sum k} sum_w q^{-2 sum_{alpha in R_w} k_alpha}.
Scalar d_k_sum(const RootSystem& rs);
/// d_k as the product over positive roots.
Scalar d_k_product(const RootSystem& rs);
/// sum_w w(phi_k / delta), which is a constant.
Scalar d_k_symmetrized(const RootSystem& rs);

/// prod_{alpha > 0} prod_{i=1}^{k-1} (1 - q^{2(alpha^vee, lambda + rho_k) + 2i}) / (1 - q^{2(alpha^vee, lambda + rho_k) - 2i}).
Scalar norm_formula_rhs(const RootSystem& rs, const Exponent& lambda);
/// The same in bracket form q^{sum k(k-1)} prod [(alpha^vee, lambda + rho_k) + i] / [(alpha^vee, lambda + rho_k) - i].
Scalar norm_formula_brackets(const RootSystem& rs, const Exponent& lambda);
/// [n] = (q^n - q^{-n}) / (q - q^{-1}).
Scalar q_number(const RootSystem& rs, int n);
Scalar q_binomial(const RootSystem& rs, int a, int b);

struct CtIdentity {
  Scalar lhs;  // (1/|W|) [Delta_k]_0
  Scalar rhs;  // bracket product
  bool holds = false;
  /// Equal parameters only: the bracket of the one-sided product against prod qbinom(k d_i, k).
  bool has_binomial_form = false;
  Scalar binomial_lhs;
  Scalar binomial_rhs;
  /// binomial_lhs / binomial_rhs and whether it is c u^e.
  Scalar ratio;
  bool ratio_is_monomial = false;
};
CtIdentity ct_identity(const RootSystem& rs);

/// Inner products, Macdonald polynomials and difference operators for one
/// root system and parameter set. Thread-safe; weight functions and
/// computed polynomials are cached.
class MacdonaldContext {
 public:
  explicit MacdonaldContext(RootSystem rs);
  ~MacdonaldContext();
  MacdonaldContext(const MacdonaldContext&) = delete;
  MacdonaldContext& operator=(const MacdonaldContext&) = delete;

  const RootSystem& root_system() const { return daha_.root_system(); }
  const Daha& daha() const { return daha_; }
  const WeightFunctions& weights() const;

  /// (1/|W|) [f bar(g) Delta_k]_0.
  Scalar inner_k(const LaurentPoly& f, const LaurentPoly& g) const;
  /// [f bar(g)^iota mu_k]_0.
  Scalar inner_cherednik(const LaurentPoly& f, const LaurentPoly& g) const;

  /// Unitriangular and orthogonal to every m_nu with nu < lambda.
  MacdonaldPoly gram(const Exponent& lambda) const;
  /// Unitriangular common eigenvector of central Y-operators.
  MacdonaldPoly eigen(const Exponent& lambda) const;
  /// Central elements used by eigen, in search order.
  std::vector<YPolynomial> eigen_generators() const;
  /// Matrix of f(Y) on the orbit sums below lambda: column j is the image of m_{basis[j]}.
  std::vector<std::vector<Scalar>> fY_matrix(const YPolynomial& f, const std::vector<Exponent>& basis) const;

  /// Macdonald's operator for the minuscule coweight b_r (1-based r).
  LaurentPoly D_pi(int r, const LaurentPoly& f) const;

 private:
  Daha daha_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

/// f(Y) = sum over all of W of Y^{w pi_r}.
YPolynomial minuscule_y(const RootSystem& rs, int r);

}  // namespace maclab
