#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace maclab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalised n/d.
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Raised when an exact division leaves a remainder.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in u with integer coefficients:
/// sum_i coeffs()[i] * u^(low() + i). Zero has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(Integer c, int exponent = 0);
  static UPoly from_coeffs(int low, std::vector<Integer> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& trailing() const { return coeffs_.front(); }
  Integer coeff(int e) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  UPoly& shift(int k) noexcept;
  void negate();
  void mul_integer(const Integer& c);
  /// p(u) -> p(1/u).
  UPoly reflected() const;
  /// Positive gcd of the coefficients; zero for the zero polynomial.
  Integer content() const;
  /// Divides every coefficient by c, which must divide them exactly.
  void divexact(const Integer& c);
  std::size_t hash() const noexcept;
  std::string to_string(std::string_view var = "u") const;

 private:
  int low_ = 0;
  std::vector<Integer> coeffs_;
  void trim();
};

/// Primitive gcd of the polynomial parts (u-power factors ignored),
/// normalised to low() == 0 and positive leading coefficient.
UPoly poly_gcd(const UPoly& a, const UPoly& b);
/// a / b in Z[u, 1/u]; throws NotDivisible unless exact.
UPoly exact_quotient(const UPoly& a, const UPoly& b);

/// Element of Q(u): canonical num/den with den(0) != 0, lc(den) > 0,
/// gcd(num, den) = 1 and coprime integer contents.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);               // NOLINT(google-explicit-constructor)
  Scalar(const Integer& v);     // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v);    // NOLINT(google-explicit-constructor)
  Scalar(UPoly num, UPoly den);
  explicit Scalar(UPoly num);
  static Scalar u_power(int e);
  static Scalar monomial(Integer c, int e);

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const noexcept { return den_.is_one(); }
  bool is_monomial() const noexcept { return den_.is_one() && num_.is_monomial(); }
  const UPoly& numerator() const noexcept { return num_; }
  const UPoly& denominator() const noexcept { return den_; }

  Scalar inverse() const;
  /// u -> 1/u.
  Scalar iota() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  Scalar pow(long e) const;

  /// If the value is c * u^e, returns true and fills c, e.
  bool as_monomial(Rational& c, int& e) const;
  std::size_t hash() const noexcept;
  /// Canonical text: "num" or "(num)/(den)", terms by decreasing exponent.
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  UPoly num_;
  UPoly den_{1};
  void normalize();
  void normalize_content();
};

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const noexcept { return s.hash(); }
};

}  // namespace maclab
