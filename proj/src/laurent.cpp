#include "maclab/laurent.hpp"

#include <algorithm>
#include <map>

namespace maclab {

LaurentPoly::LaurentPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace_back(Exponent{}, c);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, Scalar c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Scalar LaurentPoly::coeff(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.first < x; });
  if (it == terms_.end() || it->first != e) return Scalar();
  return it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Scalar s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  if (a.size() == 1 && a.terms_[0].first.is_zero()) return b * a.terms_[0].second;
  if (b.size() == 1 && b.terms_[0].first.is_zero()) return a * b.terms_[0].second;
  PolyBuilder acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc.add(ea + eb, ca * cb);
  }
  return acc.build();
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += e;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentPoly LaurentPoly::iota() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = t.second.iota();
  return r;
}

int LaurentPoly::max_abs_coord() const {
  int m = 0;
  for (const auto& t : terms_) {
    for (auto x : t.first.v) m = std::max(m, x < 0 ? -x : x);
  }
  return m;
}

std::string LaurentPoly::to_string(int rank) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")*X[";
    for (int i = 0; i < rank; ++i) {
      if (i) out += ",";
      out += std::to_string(it->first[static_cast<std::size_t>(i)]);
    }
    out += "]";
  }
  return out;
}

void PolyBuilder::add(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(e, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::add(const LaurentPoly& f, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [e, x] : f.terms()) add(e, c.is_one() ? x : x * c);
}

void PolyBuilder::add_shifted(const LaurentPoly& f, const Exponent& shift, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [e, x] : f.terms()) add(e + shift, c.is_one() ? x : x * c);
}

LaurentPoly PolyBuilder::build() {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [e, c] : acc_) {
    if (!c.is_zero()) terms.emplace_back(e, std::move(c));
  }
  acc_.clear();
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  auto q = try_exact_div(f, g);
  if (!q) throw NotDivisible("Laurent polynomial quotient is not exact");
  return std::move(*q);
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("exact_div by zero");
  if (f.is_zero()) return LaurentPoly();
  if (g.size() == 1) {
    const Scalar inv = g.leading().second.inverse();
    return f.shifted(-g.leading().first) * inv;
  }
  // Newton polytopes add, so the quotient lies in the box min(f)-min(g) .. max(f)-max(g).
  Exponent fmin = f.leading().first, fmax = fmin, gmin = g.leading().first, gmax = gmin;
  for (const auto& t : f.terms()) {
    for (int i = 0; i < kMaxRank; ++i) {
      fmin.v[i] = std::min(fmin.v[i], t.first.v[i]);
      fmax.v[i] = std::max(fmax.v[i], t.first.v[i]);
    }
  }
  for (const auto& t : g.terms()) {
    for (int i = 0; i < kMaxRank; ++i) {
      gmin.v[i] = std::min(gmin.v[i], t.first.v[i]);
      gmax.v[i] = std::max(gmax.v[i], t.first.v[i]);
    }
  }
  const Exponent qmin = fmin - gmin;
  const Exponent qmax = fmax - gmax;
  for (int i = 0; i < kMaxRank; ++i) {
    if (qmin.v[i] > qmax.v[i]) return std::nullopt;
  }
  std::map<Exponent, Scalar> r;
  for (const auto& t : f.terms()) r.emplace(t.first, t.second);
  const Exponent lg = g.leading().first;
  const Scalar inv = g.leading().second.inverse();
  std::vector<LaurentPoly::Term> q;
  while (!r.empty()) {
    auto top = std::prev(r.end());
    const Exponent e = top->first - lg;
    for (int i = 0; i < kMaxRank; ++i) {
      if (e.v[i] < qmin.v[i] || e.v[i] > qmax.v[i]) return std::nullopt;
    }
    const Scalar c = top->second * inv;
    for (const auto& [ge, gc] : g.terms()) {
      const Exponent x = ge + e;
      const Scalar d = c * gc;
      auto it = r.find(x);
      if (it == r.end()) {
        r.emplace(x, -d);
      } else {
        it->second -= d;
        if (it->second.is_zero()) r.erase(it);
      }
    }
    q.emplace_back(e, c);
  }
  return LaurentPoly::from_terms(std::move(q));
}

Scalar q_power(const RootSystem& rs, const Rational& r) { return Scalar::u_power(rs.u_exponent(r)); }

Scalar t_of(const RootSystem& rs, int root) {
  return Scalar::u_power(rs.q_denominator() * rs.k_of(root));
}

LaurentPoly w_action(const RootSystem& rs, int w, const LaurentPoly& f) {
  if (w == 0) return f;
  const WeylGroup& W = rs.weyl();
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [e, c] : f.terms()) terms.emplace_back(W.act(w, e), c);
  return LaurentPoly::from_terms(std::move(terms));
}

namespace {

// a X^e + b X^{-e}
LaurentPoly binomial(const Exponent& e, const Scalar& a, const Scalar& b) {
  return LaurentPoly::monomial(e, a) + LaurentPoly::monomial(-e, b);
}

}  // namespace

LaurentPoly Delta_k(const RootSystem& rs) {
  const int D = rs.q_denominator();
  LaurentPoly p(Scalar(1));
  for (int a = 0; a < rs.num_roots(); ++a) {
    for (int i = 0; i < rs.k_of(a); ++i) {
      LaurentPoly f = LaurentPoly(Scalar(1)) + LaurentPoly::monomial(rs.root_exponent(a), -Scalar::u_power(2 * i * D));
      p *= f;
    }
  }
  return p;
}

LaurentPoly mu_k(const RootSystem& rs) {
  const int D = rs.q_denominator();
  LaurentPoly p(Scalar(1));
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    const int k = rs.k_of(a);
    for (int i = 1 - k; i <= k; ++i) {
      p *= binomial(rs.half_root_exponent(a), Scalar::u_power(i * D), -Scalar::u_power(-i * D));
    }
  }
  return p;
}

LaurentPoly delta_poly(const RootSystem& rs) {
  LaurentPoly p(Scalar(1));
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    p *= binomial(rs.half_root_exponent(a), Scalar(1), Scalar(-1));
  }
  return p;
}

LaurentPoly phi(const RootSystem& rs, int s) {
  const int D = rs.q_denominator();
  LaurentPoly p(Scalar(1));
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    const int k = s * rs.k_of(a);
    p *= binomial(rs.half_root_exponent(a), Scalar::u_power(k * D), -Scalar::u_power(-k * D));
  }
  return p;
}

WeightFunctions weight_functions(const RootSystem& rs) {
  return WeightFunctions{Delta_k(rs), mu_k(rs), delta_poly(rs), phi(rs, 1), phi(rs, -1)};
}

}  // namespace maclab
