#pragma once

#include <utility>
#include <vector>

#include "maclab/macpoly.hpp"

namespace maclab {

/// Signed monomial expansion of a product of Y-binomials: sum c_mu Y^mu.
struct YExpansion {
  std::vector<std::pair<Coweight, Scalar>> terms;
  /// Value with every Y^mu replaced by q^{2(mu, nu)}.
  Scalar evaluate(const RootSystem& rs, const Exponent& nu) const;
};

/// prod_{alpha > 0} (q^{s k} Y^{alpha^vee/2} - q^{-s k} Y^{-alpha^vee/2}) over the 2^{|R+|} subsets.
YExpansion phi_vee_expansion(const RootSystem& rs, int s);

/// c_k(lambda) = prod_{alpha > 0} (q^{-k + (alpha^vee, lambda + (k+1) rho)} - q^{k - (alpha^vee, lambda + (k+1) rho)}).
Scalar c_k(const RootSystem& rs, const Exponent& lambda);
/// chat_k(lambda) = prod_{alpha > 0} (q^{k + (alpha^vee, lambda + (k+1) rho)} - q^{-k - (alpha^vee, lambda + (k+1) rho)}).
Scalar chat_k(const RootSystem& rs, const Exponent& lambda);
/// The factor of the norm recursion: M_{k+1}(lambda) = ratio * M_k(lambda + rho).
Scalar norm_step(const RootSystem& rs, const Exponent& lambda);
/// M_k(lambda) by iterating the recursion down to M_1 = 1; k from rs.
Scalar norm_by_ladder(const RootSystem& rs, const Exponent& lambda);

/// Shift operators between parameters k and k + 1 (equal parameters).
class ShiftContext {
 public:
  /// rs carries the lower parameter k >= 0.
  explicit ShiftContext(const RootSystem& rs);

  int k() const { return k_; }
  const MacdonaldContext& lower() const { return lower_; }
  const MacdonaldContext& upper() const { return upper_; }
  const LaurentPoly& X_cal() const { return x_cal_; }
  const YExpansion& Y_cal() const { return y_cal_; }
  const YExpansion& Y_hat() const { return y_hat_; }

  LaurentPoly apply(const YExpansion& e, const LaurentPoly& f) const;
  /// X^{-1} Y f; throws NotDivisible when the quotient is not exact.
  LaurentPoly G(const LaurentPoly& f) const;
  LaurentPoly G_hat(const LaurentPoly& f) const;

 private:
  int k_;
  MacdonaldContext lower_;
  MacdonaldContext upper_;
  LaurentPoly x_cal_;
  YExpansion y_cal_;
  YExpansion y_hat_;
};

struct NormRecursion {
  // Cherednik-norm recursion.
  Scalar mprime_lhs, mprime_rhs;
  // Macdonald-norm recursion.
  Scalar m_lhs, m_rhs;
  bool holds = false;
};
/// Both sides of the norm recursions at lambda from independently computed polynomials.
NormRecursion verify_norm_recursion(const ShiftContext& s, const Exponent& lambda);

struct BridgeCheck {
  LaurentPoly classical;  // P_-(Y - Yhat) f
  LaurentPoly quantum;    // P^q_-(Y - Yhat) f
  bool holds = false;
};
BridgeCheck verify_antisymmetrizer_bridge(const ShiftContext& s, const LaurentPoly& f);

}  // namespace maclab
