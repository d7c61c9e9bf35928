#pragma once

#include <map>
#include <string>
#include <vector>

#include "maclab/afweyl.hpp"
#include "maclab/dahaop.hpp"
#include "maclab/laurent.hpp"

namespace maclab {

/// Denominator factor X^e u^s - 1 with e lex-positive.
struct DenFactor {
  Exponent e;
  int s = 0;
  friend bool operator==(const DenFactor&, const DenFactor&) = default;
  friend auto operator<=>(const DenFactor&, const DenFactor&) = default;
};

/// num / prod(den); kept unreduced, compared by cross-multiplication.
class RatX {
 public:
  RatX() = default;
  explicit RatX(LaurentPoly num) : num_(std::move(num)) {}
  explicit RatX(const Scalar& c) : num_(c) {}
  /// 1 / (X^e u^s - 1) for nonzero e, rewritten over a canonical factor.
  static RatX inverse_factor(const Exponent& e, int s);

  const LaurentPoly& numerator() const { return num_; }
  const std::vector<DenFactor>& denominator() const { return den_; }
  LaurentPoly denominator_poly() const;
  bool is_zero() const { return num_.is_zero(); }

  RatX operator-() const;
  friend RatX operator+(const RatX& a, const RatX& b);
  friend RatX operator-(const RatX& a, const RatX& b) { return a + (-b); }
  friend RatX operator*(const RatX& a, const RatX& b);
  friend RatX operator*(RatX a, const Scalar& c) {
    a.num_ *= c;
    return a;
  }
  /// Cross-multiplication equality.
  friend bool operator==(const RatX& a, const RatX& b);

  /// Image under an element of the extended affine Weyl group.
  RatX act(const RootSystem& rs, const ExtAffineElt& g) const;
  /// Cancels denominator factors that divide the numerator.
  void cancel();
  /// Exact value as a Laurent polynomial; throws NotDivisible otherwise.
  LaurentPoly to_poly() const;
  std::string to_string(int rank) const;

 private:
  LaurentPoly num_;
  std::vector<DenFactor> den_;  // sorted multiset
  void push_factor(const Exponent& e, int s);
};

/// sum over (lambda, w) of g_{lambda,w}(X) tau(lambda) w.
class DiffOpForm {
 public:
  static constexpr int kMaxWordLength = 24;

  DiffOpForm() = default;
  static DiffOpForm identity();
  static DiffOpForm element(const ExtAffineElt& g, RatX coeff = RatX(Scalar(1)));
  static DiffOpForm multiplication(const LaurentPoly& f);
  static DiffOpForm T(const Daha& h, int i);
  static DiffOpForm T_inv(const Daha& h, int i);

  const std::map<ExtAffineElt, RatX>& terms() const { return terms_; }
  RatX coeff(const ExtAffineElt& g) const;
  void add(const ExtAffineElt& g, const RatX& c);

  friend DiffOpForm operator+(const DiffOpForm& a, const DiffOpForm& b);
  friend DiffOpForm operator*(const DiffOpForm& a, const Scalar& c);
  /// Composition a o b.
  static DiffOpForm compose(const RootSystem& rs, const DiffOpForm& a, const DiffOpForm& b);
  LaurentPoly apply(const RootSystem& rs, const LaurentPoly& f) const;
  bool equals(const DiffOpForm& o) const;

 private:
  std::map<ExtAffineElt, RatX> terms_;
};

/// T_g = pi_r T_{i_l} ... T_{i_1} along the reduced word of g.
DiffOpForm opform_T(const Daha& h, const ExtAffineElt& g);
/// Signed product for Y^lambda.
DiffOpForm opform_Y(const Daha& h, const Coweight& lambda);
DiffOpForm opform_fY(const Daha& h, const YPolynomial& f);
/// Drops the finite Weyl parts: sum g_{lambda,w} tau(lambda).
DiffOpForm res(const DiffOpForm& d);
/// (t X^a - t^{-1}) / (X^a - 1) for the affine root a, with X^delta = q^{-2}.
RatX leading_factor(const Daha& h, const AffineRoot& a);

}  // namespace maclab
