#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "maclab/afweyl.hpp"
#include "maclab/laurent.hpp"
#include "maclab/rootsys.hpp"

namespace maclab {

/// Finite combination sum c_lambda Y^lambda; central when closed under W.
struct YPolynomial {
  std::vector<std::pair<Coweight, Scalar>> terms;
};
/// sum over the W-orbit of lambda of Y^mu.
YPolynomial orbit_y(const RootSystem& rs, const Coweight& lambda);
bool is_w_closed(const RootSystem& rs, const YPolynomial& f);

/// Polynomial representation of the double affine Hecke algebra on Laurent
/// polynomials in X. Thread-safe; Y-images of monomials are cached.
class Daha {
 public:
  explicit Daha(RootSystem rs);
  ~Daha();
  Daha(const Daha&) = delete;
  Daha& operator=(const Daha&) = delete;

  const RootSystem& root_system() const { return rs_; }
  /// t_i for i = 0..n (t_0 = t_theta).
  const Scalar& t(int i) const { return t_[static_cast<std::size_t>(i)]; }

  LaurentPoly T(int i, const LaurentPoly& f) const;
  LaurentPoly T_inv(int i, const LaurentPoly& f) const;
  LaurentPoly pi(int r, const LaurentPoly& f) const;
  LaurentPoly pi_inv(int r, const LaurentPoly& f) const;
  /// pi_omega T_{word[0]}^{eps[0]} T_{word[1]}^{eps[1]} ... f.
  LaurentPoly apply_word(int omega, const std::vector<int>& word, const std::vector<int>& eps,
                         const LaurentPoly& f) const;
  /// T_w for w in the finite Weyl group, along the stored shortest word.
  LaurentPoly T_w(int w, const LaurentPoly& f) const;

  /// Y^lambda = Y^mu (Y^nu)^{-1} with mu, nu the positive and negative parts of lambda.
  LaurentPoly Y(const Coweight& lambda, const LaurentPoly& f) const;
  /// Y^lambda as the signed product along the reduced word of tau(lambda).
  LaurentPoly Y_signed(const Coweight& lambda, const LaurentPoly& f) const;
  /// Signed product along an arbitrary reduced word for tau(lambda).
  LaurentPoly Y_along(const ReducedWord& w, const LaurentPoly& f) const;
  /// Signs from associated roots: +1 when alpha^(j) has positive finite part.
  std::vector<int> y_signs(const std::vector<int>& word) const;

  /// f(Y) g; throws std::invalid_argument unless f is W-closed.
  LaurentPoly apply_fY(const YPolynomial& f, const LaurentPoly& g) const;
  /// f(q^{2(mu + rho_k)}).
  Scalar eigenvalue(const YPolynomial& f, const Exponent& mu) const;

  LaurentPoly symmetrize(const LaurentPoly& f) const;
  LaurentPoly antisymmetrize(const LaurentPoly& f) const;
  /// d^{-1} sum_w (-t)^{-l(w)} T_w f; requires equal parameters.
  LaurentPoly q_antisymmetrize(const LaurentPoly& f) const;

 private:
  RootSystem rs_;
  std::vector<Scalar> t_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
  LaurentPoly T_monomial(int i, const Exponent& e, const Scalar& c, bool inverse) const;
  LaurentPoly Y_dominant(const Coweight& lambda, const LaurentPoly& f) const;
  LaurentPoly Y_dominant_inv(const Coweight& lambda, const LaurentPoly& f) const;
  const ReducedWord& word_of(const Coweight& lambda) const;
};

}  // namespace maclab
