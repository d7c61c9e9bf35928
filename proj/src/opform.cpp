#include "maclab/opform.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace maclab {

namespace {

bool lex_positive(const Exponent& e) {
  for (auto x : e.v) {
    if (x != 0) return x > 0;
  }
  return false;
}

LaurentPoly factor_poly(const DenFactor& f) {
  return LaurentPoly::monomial(f.e, Scalar::u_power(f.s)) - LaurentPoly(Scalar(1));
}

LaurentPoly product(const std::vector<DenFactor>& fs) {
  LaurentPoly p(Scalar(1));
  for (const auto& f : fs) p *= factor_poly(f);
  return p;
}

}  // namespace

void RatX::push_factor(const Exponent& e, int s) {
  const DenFactor f{e, s};
  den_.insert(std::upper_bound(den_.begin(), den_.end(), f), f);
}

RatX RatX::inverse_factor(const Exponent& e, int s) {
  if (e.is_zero()) throw std::invalid_argument("denominator factor without X");
  RatX r;
  if (lex_positive(e)) {
    r.num_ = LaurentPoly(Scalar(1));
    r.push_factor(e, s);
  } else {
    // 1/(X^e u^s - 1) = -X^{-e} u^{-s} / (X^{-e} u^{-s} - 1)
    r.num_ = LaurentPoly::monomial(-e, -Scalar::u_power(-s));
    r.push_factor(-e, -s);
  }
  return r;
}

LaurentPoly RatX::denominator_poly() const { return product(den_); }

RatX RatX::operator-() const {
  RatX r = *this;
  r.num_ = -r.num_;
  return r;
}

RatX operator+(const RatX& a, const RatX& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    RatX r = a;
    r.num_ += b.num_;
    return r;
  }
  std::vector<DenFactor> lcm, ea, eb;
  std::set_union(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(lcm));
  std::set_difference(lcm.begin(), lcm.end(), a.den_.begin(), a.den_.end(), std::back_inserter(ea));
  std::set_difference(lcm.begin(), lcm.end(), b.den_.begin(), b.den_.end(), std::back_inserter(eb));
  RatX r;
  r.num_ = a.num_ * product(ea) + b.num_ * product(eb);
  r.den_ = std::move(lcm);
  return r;
}

RatX operator*(const RatX& a, const RatX& b) {
  RatX r;
  r.num_ = a.num_ * b.num_;
  if (r.num_.is_zero()) return RatX();
  std::merge(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(r.den_));
  return r;
}

bool operator==(const RatX& a, const RatX& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.num_ * product(b.den_) == b.num_ * product(a.den_);
}

RatX RatX::act(const RootSystem& rs, const ExtAffineElt& g) const {
  const WeylGroup& W = rs.weyl();
  RatX r;
  r.num_ = maclab::act(rs, g, num_);
  for (const auto& f : den_) {
    const Exponent e = W.act(g.finite, f.e);
    const int s = f.s + (g.translation.is_zero() ? 0 : rs.u_pairing(g.translation, e));
    if (lex_positive(e)) {
      r.push_factor(e, s);
    } else {
      r.num_ = r.num_.shifted(-e) * (-Scalar::u_power(-s));
      r.push_factor(-e, -s);
    }
  }
  return r;
}

void RatX::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<DenFactor> kept;
  for (const auto& f : den_) {
    auto q = try_exact_div(num_, factor_poly(f));
    if (q) {
      num_ = std::move(*q);
    } else {
      kept.push_back(f);
    }
  }
  den_ = std::move(kept);
}

LaurentPoly RatX::to_poly() const {
  if (den_.empty()) return num_;
  return exact_div(num_, product(den_));
}

std::string RatX::to_string(int rank) const {
  std::string out = "(" + num_.to_string(rank) + ")";
  for (const auto& f : den_) {
    out += "/(" + LaurentPoly::monomial(f.e, Scalar::u_power(f.s)).to_string(rank) + " - 1)";
  }
  return out;
}

DiffOpForm DiffOpForm::identity() { return element(ExtAffineElt{}); }

DiffOpForm DiffOpForm::element(const ExtAffineElt& g, RatX coeff) {
  DiffOpForm d;
  d.add(g, coeff);
  return d;
}

DiffOpForm DiffOpForm::multiplication(const LaurentPoly& f) { return element(ExtAffineElt{}, RatX(f)); }

namespace {

// t s_i + (t - t^{-1}) (s_i - 1) / (Z - 1) with Z = X^{-alpha_i}.
DiffOpForm t_form(const Daha& h, int i, bool inverse) {
  const RootSystem& rs = h.root_system();
  if (i < 0 || i > rs.rank()) throw std::out_of_range("T index out of range");
  Exponent z;
  int zu = 0;
  if (i == 0) {
    z = rs.root_exponent(rs.highest_root());
    zu = 2 * rs.q_denominator();
  } else {
    z = -rs.root_exponent(rs.simple_root(i - 1));
  }
  const Scalar& t = h.t(i);
  const Scalar diff = t - t.inverse();
  const RatX frac = RatX::inverse_factor(z, zu) * diff;
  DiffOpForm d;
  d.add(simple_reflection(rs, i), RatX(t) + frac);
  d.add(ExtAffineElt{}, -frac);
  if (inverse) d.add(ExtAffineElt{}, RatX(-diff));
  return d;
}

}  // namespace

DiffOpForm DiffOpForm::T(const Daha& h, int i) { return t_form(h, i, false); }

DiffOpForm DiffOpForm::T_inv(const Daha& h, int i) { return t_form(h, i, true); }

RatX DiffOpForm::coeff(const ExtAffineElt& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? RatX() : it->second;
}

void DiffOpForm::add(const ExtAffineElt& g, const RatX& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c).first->second.cancel();
    return;
  }
  it->second = it->second + c;
  it->second.cancel();
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOpForm operator+(const DiffOpForm& a, const DiffOpForm& b) {
  DiffOpForm r = a;
  for (const auto& [g, c] : b.terms_) r.add(g, c);
  return r;
}

DiffOpForm operator*(const DiffOpForm& a, const Scalar& c) {
  DiffOpForm r;
  for (const auto& [g, x] : a.terms_) r.add(g, x * c);
  return r;
}

DiffOpForm DiffOpForm::compose(const RootSystem& rs, const DiffOpForm& a, const DiffOpForm& b) {
  DiffOpForm r;
  for (const auto& [ga, ca] : a.terms_) {
    for (const auto& [gb, cb] : b.terms_) r.add(multiply(rs, ga, gb), ca * cb.act(rs, ga));
  }
  return r;
}

LaurentPoly DiffOpForm::apply(const RootSystem& rs, const LaurentPoly& f) const {
  RatX total;
  for (const auto& [g, c] : terms_) total = total + c * RatX(act(rs, g, f));
  return total.to_poly();
}

bool DiffOpForm::equals(const DiffOpForm& o) const {
  for (const auto& [g, c] : terms_) {
    if (!(c == o.coeff(g))) return false;
  }
  for (const auto& [g, c] : o.terms_) {
    if (!(c == coeff(g))) return false;
  }
  return true;
}

DiffOpForm opform_T(const Daha& h, const ExtAffineElt& g) {
  const RootSystem& rs = h.root_system();
  const ReducedWord w = reduced_word(rs, g);
  if (static_cast<int>(w.word.size()) > DiffOpForm::kMaxWordLength) throw std::length_error("word length exceeds cap");
  DiffOpForm d = DiffOpForm::element(omega_elt(rs, w.omega));
  for (int i : w.word) d = DiffOpForm::compose(rs, d, DiffOpForm::T(h, i));
  return d;
}

DiffOpForm opform_Y(const Daha& h, const Coweight& lambda) {
  const RootSystem& rs = h.root_system();
  const ReducedWord w = reduced_word(rs, translation(lambda));
  if (static_cast<int>(w.word.size()) > DiffOpForm::kMaxWordLength) throw std::length_error("word length exceeds cap");
  const auto eps = h.y_signs(w.word);
  DiffOpForm d = DiffOpForm::element(omega_elt(rs, w.omega));
  for (std::size_t j = 0; j < w.word.size(); ++j) {
    d = DiffOpForm::compose(rs, d, eps[j] > 0 ? DiffOpForm::T(h, w.word[j]) : DiffOpForm::T_inv(h, w.word[j]));
  }
  return d;
}

DiffOpForm opform_fY(const Daha& h, const YPolynomial& f) {
  if (!is_w_closed(h.root_system(), f)) throw std::invalid_argument("f is not W-invariant");
  DiffOpForm d;
  for (const auto& [l, c] : f.terms) d = d + opform_Y(h, l) * c;
  return d;
}

DiffOpForm res(const DiffOpForm& d) {
  DiffOpForm r;
  for (const auto& [g, c] : d.terms()) r.add(translation(g.translation), c);
  return r;
}

RatX leading_factor(const Daha& h, const AffineRoot& a) {
  const RootSystem& rs = h.root_system();
  const Scalar t = t_of(rs, a.root);
  const Exponent& e = rs.root_exponent(a.root);
  const int s = -2 * rs.q_denominator() * a.level;
  const LaurentPoly num = LaurentPoly::monomial(e, t * Scalar::u_power(s)) - LaurentPoly(t.inverse());
  return RatX(num) * RatX::inverse_factor(e, s);
}

}  // namespace maclab
