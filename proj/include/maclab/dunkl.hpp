#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maclab/scalar.hpp"

namespace maclab {

/// Polynomial in the formal parameters k and h with rational coefficients.
class KH {
 public:
  KH() = default;
  KH(long c);  // NOLINT(google-explicit-constructor)
  explicit KH(const Rational& c);
  static KH k();
  static KH h();
  static KH monomial(int k_deg, int h_deg, const Rational& c = Rational(1));

  const std::map<std::pair<int, int>, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// The coefficient when this is a constant; nullopt otherwise.
  std::optional<Rational> as_constant() const;

  KH operator-() const;
  KH& operator+=(const KH& o);
  KH& operator-=(const KH& o);
  friend KH operator+(KH a, const KH& b) { return a += b; }
  friend KH operator-(KH a, const KH& b) { return a -= b; }
  friend KH operator*(const KH& a, const KH& b);
  friend bool operator==(const KH& a, const KH& b) { return a.terms_ == b.terms_; }

  /// Terms by increasing (k, h) degree, e.g. "1 + k" or "-2*k^2*h".
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

/// Polynomial in x_1..x_n with KH coefficients; no zero coefficients stored.
class RatPoly {
 public:
  using Monomial = std::vector<int>;

  RatPoly() = default;
  explicit RatPoly(int n) : n_(n) {}
  RatPoly(int n, const KH& c);
  static RatPoly monomial(const Monomial& m, const KH& c = KH(1));
  /// x_i with 1-based i.
  static RatPoly variable(int n, int i);

  int nvars() const noexcept { return n_; }
  const std::map<Monomial, KH>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  KH coeff(const Monomial& m) const;
  int degree() const;
  void add(const Monomial& m, const KH& c);

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const KH& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const KH& c) { return a *= c; }
  friend RatPoly operator*(const KH& c, RatPoly a) { return a *= c; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// "(c)*x1^a*x2^b + ..." in increasing monomial order; "0" when empty.
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Monomial, KH> terms_;
};

// All variable indices below are 1-based.

/// s_ij f: swaps x_i and x_j.
RatPoly swap_vars(int i, int j, const RatPoly& f);
/// Applies the permutation w (w[a-1] = w(a)) to the variables: (w f)(x) = f(x_{w(1)}, ...).
RatPoly permute(const std::vector<int>& w, const RatPoly& f);
RatPoly mul_x(int i, const RatPoly& f);
RatPoly partial(int i, const RatPoly& f);
RatPoly laplacian(const RatPoly& f);
/// f / (x_i - x_j) when the quotient is a polynomial.
std::optional<RatPoly> divide_by_difference(int i, int j, const RatPoly& f);

/// b_ij f = (s_ij f - f) / (x_i - x_j); closed-form divided differences per monomial.
RatPoly apply_b(int i, int j, const RatPoly& f);
/// D_i = d_i - k sum_{j != i} b_ij.
RatPoly apply_D(int i, const RatPoly& f);
/// shat_i = s_i + h b_{i,i+1}, 1 <= i <= n - 1.
RatPoly apply_shat(int i, const RatPoly& f);
/// sum_i D_i^r f.
RatPoly power_sum_D(int r, const RatPoly& f);
/// sum_i d_i^2 f + c k sum_{i<j} (d_i - d_j) f / (x_i - x_j); f must make every quotient exact.
RatPoly m2_rat(const RatPoly& f, const Rational& c);

/// Every monomial in n variables of total degree <= degree.
std::vector<RatPoly> monomials_upto(int n, int degree);
/// Monomial symmetric function of a partition padded to n parts.
RatPoly monomial_symmetric(int n, std::vector<int> partition);
/// Every monomial symmetric function in n variables of degree <= degree.
std::vector<RatPoly> symmetric_basis_upto(int n, int degree);
bool is_symmetric(const RatPoly& f);

/// The rational c with lhs = c * rhs, when such a c exists.
std::optional<Rational> proportionality(const RatPoly& lhs, const RatPoly& rhs);

/// Outcome of comparing sum D_i^2 with the second-order operator on symmetric inputs.
struct Normalization {
  /// c with sum D_i^2 = sum d_i^2 + c k sum_{i<j} (d_i - d_j)/(x_i - x_j), when one c fits every input.
  std::optional<Rational> coefficient;
  /// Whether the c = 2 display and the c = -1 display agree on every input.
  bool matches_plus_two = false;
  bool matches_minus_one = false;
  int inputs = 0;
  std::string description() const;
};
Normalization resolve_normalization(int n, int degree);

}  // namespace maclab
