#include "maclab/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace maclab {

namespace {

using Dense = std::vector<Integer>;

void strip_top(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  if (p.empty()) return;
  Integer g = dense_content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Pseudo-remainder of a by b, scaled to keep coefficients small.
void pseudo_rem(Dense& a, const Dense& b) {
  const std::size_t nb = b.size();
  Integer la, lb, g;
  while (a.size() >= nb) {
    mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    mpz_divexact(la.get_mpz_t(), a.back().get_mpz_t(), g.get_mpz_t());
    mpz_divexact(lb.get_mpz_t(), b.back().get_mpz_t(), g.get_mpz_t());
    const std::size_t s = a.size() - nb;
    if (lb != 1) {
      for (auto& c : a) c *= lb;
    }
    for (std::size_t j = 0; j < nb; ++j) {
      mpz_submul(a[j + s].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    }
    strip_top(a);
  }
}

Dense dense_gcd(Dense a, Dense b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Dense{Integer(1)};
    pseudo_rem(a, b);
    make_primitive(a);
    std::swap(a, b);
  }
  return a;
}

// Exact quotient of dense polynomials with b(0) != 0; throws on remainder.
Dense dense_divexact(Dense r, const Dense& b) {
  if (r.size() < b.size()) throw NotDivisible("polynomial quotient is not exact");
  const std::size_t nb = b.size();
  const std::size_t nq = r.size() - nb + 1;
  Dense q(nq);
  for (std::size_t k = nq; k-- > 0;) {
    Integer& top = r[k + nb - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) {
      throw NotDivisible("polynomial quotient is not exact");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j < nb; ++j) {
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (const auto& c : r) {
    if (c != 0) throw NotDivisible("polynomial quotient is not exact");
  }
  strip_top(q);
  return q;
}

std::size_t exponent_stride(const Dense& p, std::size_t g) {
  for (std::size_t i = 1; i < p.size() && g != 1; ++i) {
    if (p[i] != 0) g = std::gcd(g, i);
  }
  return g;
}

Dense compress(const Dense& p, std::size_t g) {
  Dense out((p.size() - 1) / g + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i * g];
  return out;
}

Dense expand(const Dense& p, std::size_t g) {
  Dense out((p.size() - 1) * g + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * g] = p[i];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

UPoly::UPoly(Integer c, int exponent) : low_(exponent) {
  if (c != 0) {
    coeffs_.push_back(std::move(c));
  } else {
    low_ = 0;
  }
}

UPoly UPoly::from_coeffs(int low, std::vector<Integer> coeffs) {
  UPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void UPoly::trim() {
  strip_top(coeffs_);
  std::size_t z = 0;
  while (z < coeffs_.size() && coeffs_[z] == 0) ++z;
  if (z > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(z));
    low_ += static_cast<int>(z);
  }
  if (coeffs_.empty()) low_ = 0;
}

Integer UPoly::coeff(int e) const {
  if (coeffs_.empty() || e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  r.negate();
  return r;
}

void UPoly::negate() {
  for (auto& c : coeffs_) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
}

void UPoly::mul_integer(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  for (auto& x : coeffs_) x *= c;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  UPoly r;
  r.low_ = a.low_ + b.low_;
  if (a.coeffs_.size() == 1) {
    r.coeffs_ = b.coeffs_;
    if (a.coeffs_[0] != 1) r.mul_integer(a.coeffs_[0]);
    return r;
  }
  if (b.coeffs_.size() == 1) {
    r.coeffs_ = a.coeffs_;
    if (b.coeffs_[0] != 1) r.mul_integer(b.coeffs_[0]);
    return r;
  }
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::shift(int k) noexcept {
  if (!coeffs_.empty()) low_ += k;
  return *this;
}

UPoly UPoly::reflected() const {
  UPoly r;
  if (is_zero()) return r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.low_ = -high();
  return r;
}

Integer UPoly::content() const { return dense_content(coeffs_); }

void UPoly::divexact(const Integer& c) {
  for (auto& x : coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

std::size_t UPoly::hash() const noexcept {
  std::size_t h = std::hash<int>()(low_) ^ (coeffs_.size() * 0x9e3779b97f4a7c15ULL);
  for (const auto& c : coeffs_) {
    const std::size_t v = mpz_get_ui(c.get_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()) + 1) << 60);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(k);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Integer a = abs(c);
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

UPoly poly_gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) return UPoly(1);
  const UPoly& nz = a.is_zero() ? b : a;
  if (a.is_zero() || b.is_zero()) {
    Dense p = nz.coeffs();
    make_primitive(p);
    return UPoly::from_coeffs(0, std::move(p));
  }
  if (a.is_monomial() || b.is_monomial()) return UPoly(1);
  std::size_t g = exponent_stride(a.coeffs(), 0);
  g = exponent_stride(b.coeffs(), g);
  Dense r;
  if (g > 1) {
    r = expand(dense_gcd(compress(a.coeffs(), g), compress(b.coeffs(), g)), g);
  } else {
    r = dense_gcd(a.coeffs(), b.coeffs());
  }
  return UPoly::from_coeffs(0, std::move(r));
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return UPoly();
  if (b.is_monomial()) {
    UPoly r = a;
    for (const auto& c : r.coeffs()) {
      if (!mpz_divisible_p(c.get_mpz_t(), b.leading().get_mpz_t())) {
        throw NotDivisible("polynomial quotient is not exact");
      }
    }
    r.divexact(b.leading());
    return r.shift(-b.low());
  }
  if (b.is_one()) return a;
  Dense q = dense_divexact(a.coeffs(), b.coeffs());
  return UPoly::from_coeffs(a.low() - b.low(), std::move(q));
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long v) : num_(v) {}
Scalar::Scalar(const Integer& v) : num_(v) {}
Scalar::Scalar(const Rational& v) : num_(v.get_num()), den_(v.get_den()) {}
Scalar::Scalar(UPoly num) : num_(std::move(num)) {}

Scalar::Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Scalar with zero denominator");
  normalize();
}

Scalar Scalar::u_power(int e) { return Scalar(UPoly(Integer(1), e)); }

Scalar Scalar::monomial(Integer c, int e) { return Scalar(UPoly(std::move(c), e)); }

void Scalar::normalize_content() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  Integer g = den_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num_.content().get_mpz_t());
  if (den_.leading() < 0) g = -g;
  if (g != 1) {
    num_.divexact(g);
    den_.divexact(g);
  }
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den_.is_one()) return;
  const int l = den_.low();
  if (l != 0) {
    num_.shift(-l);
    den_.shift(-l);
  }
  if (!den_.is_monomial()) {
    UPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  normalize_content();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Scalar");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize_content();
  const int l = r.den_.low();
  if (l != 0) {
    r.num_.shift(-l);
    r.den_.shift(-l);
  }
  return r;
}

Scalar Scalar::iota() const {
  Scalar r;
  r.num_ = num_.reflected();
  r.den_ = den_.reflected();
  const int l = r.den_.low();
  if (l != 0) {
    r.num_.shift(-l);
    r.den_.shift(-l);
  }
  if (r.den_.leading() < 0) {
    r.num_.negate();
    r.den_.negate();
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_.negate();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  UPoly g = poly_gcd(den_, o.den_);
  UPoly b1 = g.is_one() ? den_ : exact_quotient(den_, g);
  UPoly d1 = g.is_one() ? o.den_ : exact_quotient(o.den_, g);
  UPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = Scalar();
  if (!g.is_one()) {
    UPoly h = poly_gcd(n, g);
    if (!h.is_one()) {
      n = exact_quotient(n, h);
      g = exact_quotient(g, h);
    }
  }
  num_ = std::move(n);
  den_ = b1 * d1 * g;
  normalize_content();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  UPoly a = num_;
  UPoly b = den_;
  UPoly c = o.num_;
  UPoly d = o.den_;
  if (!d.is_one() && !d.is_monomial()) {
    UPoly g = poly_gcd(a, d);
    if (!g.is_one()) {
      a = exact_quotient(a, g);
      d = exact_quotient(d, g);
    }
  }
  if (!b.is_one() && !b.is_monomial()) {
    UPoly g = poly_gcd(c, b);
    if (!g.is_one()) {
      c = exact_quotient(c, g);
      b = exact_quotient(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize_content();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool Scalar::as_monomial(Rational& c, int& e) const {
  if (!num_.is_monomial() || !den_.is_monomial()) return false;
  c = Rational(num_.leading(), den_.leading());
  c.canonicalize();
  e = num_.low() - den_.low();
  return true;
}

std::size_t Scalar::hash() const noexcept { return num_.hash() * 31 + den_.hash(); }

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Scalar parse_scalar() {
    skip();
    Scalar r;
    const bool paren = peek() == '(';
    if (paren) {
      ++pos_;
      UPoly n = parse_poly();
      expect(')');
      skip();
      if (peek() == '/') {
        ++pos_;
        expect('(');
        UPoly d = parse_poly();
        expect(')');
        r = Scalar(std::move(n), std::move(d));
      } else {
        r = Scalar(std::move(n));
      }
    } else {
      r = Scalar(parse_poly());
    }
    skip();
    if (pos_ != s_.size()) fail();
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail() const {
    throw std::invalid_argument("malformed scalar: " + std::string(s_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail();
    ++pos_;
  }
  std::string digits() {
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }
  UPoly parse_poly() {
    UPoly p;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        break;
      }
      first = false;
      Integer c = 1;
      int e = 0;
      std::string d = digits();
      if (!d.empty()) {
        c = Integer(d);
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
          if (peek() != 'u') fail();
        }
      }
      if (peek() == 'u') {
        ++pos_;
        e = 1;
        if (peek() == '^') {
          ++pos_;
          bool eneg = false;
          if (peek() == '-') {
            eneg = true;
            ++pos_;
          }
          std::string ed = digits();
          if (ed.empty()) fail();
          e = std::stoi(ed);
          if (eneg) e = -e;
        }
      } else if (d.empty()) {
        fail();
      }
      if (neg) c = -c;
      p += UPoly(c, e);
    }
    return p;
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return PolyParser(text).parse_scalar(); }

}  // namespace maclab
