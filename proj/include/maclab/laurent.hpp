#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maclab/rootsys.hpp"
#include "maclab/scalar.hpp"

namespace maclab {

/// Finite sum of c_e X^e over exponents of P/2 (doubled fundamental-weight
/// coordinates) with Scalar coefficients. Terms are kept sorted by exponent.
class LaurentPoly {
 public:
  using Term = std::pair<Exponent, Scalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Scalar& c);
  static LaurentPoly monomial(const Exponent& e, Scalar c = Scalar(1));
  /// Merges duplicate exponents and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coeff(const Exponent& e) const;
  Scalar constant_term() const { return coeff(Exponent{}); }
  /// Largest and smallest exponents in lex order; the polynomial must be nonzero.
  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& c) { return a *= c; }
  friend LaurentPoly operator*(const Scalar& c, LaurentPoly a) { return a *= c; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// X^e * f.
  LaurentPoly shifted(const Exponent& e) const;
  /// Exponents negated.
  LaurentPoly bar() const;
  /// u -> 1/u on every coefficient.
  LaurentPoly iota() const;
  /// Largest |coordinate| over all exponents.
  int max_abs_coord() const;
  /// Terms "(c)*X[e_1,...,e_rank]" by decreasing exponent, joined by " + "; "0" when empty.
  std::string to_string(int rank) const;

 private:
  std::vector<Term> terms_;
};

/// Hash-map accumulator for building LaurentPolys term by term.
class PolyBuilder {
 public:
  void add(const Exponent& e, const Scalar& c);
  void add(const LaurentPoly& f, const Scalar& c = Scalar(1));
  /// Adds c X^shift f.
  void add_shifted(const LaurentPoly& f, const Exponent& shift, const Scalar& c);
  LaurentPoly build();

 private:
  std::unordered_map<Exponent, Scalar, ExponentHash> acc_;
};

/// h with g h = f; throws NotDivisible when no Laurent polynomial quotient exists.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);
/// The same, returning nullopt instead of throwing.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// q^r as a Scalar: u^{D r}; throws when D r is not an integer.
Scalar q_power(const RootSystem& rs, const Rational& r);
/// t_alpha = q^{k_alpha} for a root index.
Scalar t_of(const RootSystem& rs, int root);

/// Finite Weyl group action w(X^e) = X^{w e}.
LaurentPoly w_action(const RootSystem& rs, int w, const LaurentPoly& f);

/// Standard weight functions for the parameters of rs.
struct WeightFunctions {
  LaurentPoly Delta;    // prod over R of prod_{i<k} (1 - q^{2i} X^alpha)
  LaurentPoly mu;       // prod over R+ of prod_{i=1-k}^{k} (q^i X^{alpha/2} - q^{-i} X^{-alpha/2})
  LaurentPoly delta;    // prod over R+ of (X^{alpha/2} - X^{-alpha/2})
  LaurentPoly phi_k;    // prod over R+ of (q^k X^{alpha/2} - q^{-k} X^{-alpha/2})
  LaurentPoly phi_mk;   // the same with k -> -k
};
WeightFunctions weight_functions(const RootSystem& rs);
LaurentPoly Delta_k(const RootSystem& rs);
LaurentPoly mu_k(const RootSystem& rs);
LaurentPoly delta_poly(const RootSystem& rs);
/// prod over R+ of (q^{s k_alpha} X^{alpha/2} - q^{-s k_alpha} X^{-alpha/2}) for s = +1 or -1.
LaurentPoly phi(const RootSystem& rs, int s);

}  // namespace maclab
