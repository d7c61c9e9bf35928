#include "maclab/dunkl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace maclab {

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
}

void add_to(std::map<std::pair<int, int>, Rational>& acc, const std::pair<int, int>& key, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  } else if (c == 0) {
    acc.erase(it);
  }
}

std::string factor(const char* name, int d) {
  if (d == 0) return "";
  std::string s = name;
  if (d > 1) s += "^" + std::to_string(d);
  return s;
}

}  // namespace

KH::KH(long c) : KH(Rational(c)) {}

KH::KH(const Rational& c) {
  if (c != 0) terms_.emplace(std::make_pair(0, 0), c);
}

KH KH::k() { return monomial(1, 0); }
KH KH::h() { return monomial(0, 1); }

KH KH::monomial(int k_deg, int h_deg, const Rational& c) {
  KH r;
  if (c != 0) r.terms_.emplace(std::make_pair(k_deg, h_deg), c);
  return r;
}

std::optional<Rational> KH::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == std::make_pair(0, 0)) return terms_.begin()->second;
  return std::nullopt;
}

KH KH::operator-() const {
  KH r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

KH& KH::operator+=(const KH& o) {
  for (const auto& [key, c] : o.terms_) add_to(terms_, key, c);
  return *this;
}

KH& KH::operator-=(const KH& o) {
  for (const auto& [key, c] : o.terms_) add_to(terms_, key, -c);
  return *this;
}

KH operator*(const KH& a, const KH& b) {
  KH r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      add_to(r.terms_, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return r;
}

std::string KH::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string vars = factor("k", key.first);
    const std::string hv = factor("h", key.second);
    if (!hv.empty()) vars += (vars.empty() ? "" : "*") + hv;
    Rational a = c;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    a = abs(a);
    if (vars.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << vars;
    }
    first = false;
  }
  return os.str();
}

RatPoly::RatPoly(int n, const KH& c) : n_(n) {
  if (!c.is_zero()) terms_.emplace(Monomial(static_cast<std::size_t>(n), 0), c);
}

RatPoly RatPoly::monomial(const Monomial& m, const KH& c) {
  RatPoly r(static_cast<int>(m.size()));
  r.add(m, c);
  return r;
}

RatPoly RatPoly::variable(int n, int i) {
  check_index(n, i);
  Monomial m(static_cast<std::size_t>(n), 0);
  m[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(m);
}

KH RatPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? KH() : it->second;
}

int RatPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

void RatPoly::add(const Monomial& m, const KH& c) {
  if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("monomial length differs from nvars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

RatPoly& RatPoly::operator*=(const KH& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("variable counts differ");
  RatPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      RatPoly::Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add(m, ca * cb);
    }
  }
  return r;
}

std::string RatPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "*x" << i + 1;
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

RatPoly swap_vars(int i, int j, const RatPoly& f) {
  check_index(f.nvars(), i);
  check_index(f.nvars(), j);
  RatPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    RatPoly::Monomial s = m;
    std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(j - 1)]);
    r.add(s, c);
  }
  return r;
}

RatPoly permute(const std::vector<int>& w, const RatPoly& f) {
  if (static_cast<int>(w.size()) != f.nvars()) throw std::invalid_argument("permutation length differs from nvars");
  RatPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    // x^m(x_{w(1)}, ..., x_{w(n)}) moves exponent m_a onto variable w(a).
    RatPoly::Monomial s(m.size(), 0);
    for (std::size_t a = 0; a < m.size(); ++a) s[static_cast<std::size_t>(w[a] - 1)] = m[a];
    r.add(s, c);
  }
  return r;
}

RatPoly mul_x(int i, const RatPoly& f) {
  check_index(f.nvars(), i);
  RatPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    RatPoly::Monomial s = m;
    ++s[static_cast<std::size_t>(i - 1)];
    r.add(s, c);
  }
  return r;
}

RatPoly partial(int i, const RatPoly& f) {
  check_index(f.nvars(), i);
  RatPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const int e = m[static_cast<std::size_t>(i - 1)];
    if (e == 0) continue;
    RatPoly::Monomial s = m;
    --s[static_cast<std::size_t>(i - 1)];
    r.add(s, c * KH(e));
  }
  return r;
}

RatPoly laplacian(const RatPoly& f) {
  RatPoly r(f.nvars());
  for (int i = 1; i <= f.nvars(); ++i) r += partial(i, partial(i, f));
  return r;
}

std::optional<RatPoly> divide_by_difference(int i, int j, const RatPoly& f) {
  check_index(f.nvars(), i);
  check_index(f.nvars(), j);
  if (i == j) throw std::invalid_argument("divide_by_difference needs i != j");
  const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
  // Long division in x_i, highest x_i-degree first.
  auto key_less = [ii](const RatPoly::Monomial& a, const RatPoly::Monomial& b) {
    if (a[ii] != b[ii]) return a[ii] > b[ii];
    return a < b;
  };
  std::map<RatPoly::Monomial, KH, decltype(key_less)> rem(key_less);
  for (const auto& [m, c] : f.terms()) rem.emplace(m, c);
  RatPoly q(f.nvars());
  while (!rem.empty()) {
    auto it = rem.begin();
    const RatPoly::Monomial m = it->first;
    const KH c = it->second;
    rem.erase(it);
    if (m[ii] == 0) return std::nullopt;
    RatPoly::Monomial t = m;
    --t[ii];
    q.add(t, c);
    // Remainder gains + c x^t x_j.
    RatPoly::Monomial u = t;
    ++u[jj];
    auto [pos, inserted] = rem.try_emplace(u, c);
    if (!inserted) {
      pos->second += c;
      if (pos->second.is_zero()) rem.erase(pos);
    }
  }
  return q;
}

RatPoly apply_b(int i, int j, const RatPoly& f) {
  check_index(f.nvars(), i);
  check_index(f.nvars(), j);
  if (i == j) throw std::invalid_argument("b_ij needs i != j");
  const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
  RatPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const int p = m[ii], s = m[jj];
    if (p == s) continue;
    // (x_i^s x_j^p - x_i^p x_j^s)/(x_i - x_j) = sign x_i^lo x_j^lo sum_{a+b=d-1} x_i^a x_j^b.
    const int lo = std::min(p, s), d = std::abs(p - s);
    const KH coef = p > s ? -c : c;
    RatPoly::Monomial t = m;
    for (int a = 0; a < d; ++a) {
      t[ii] = lo + a;
      t[jj] = lo + d - 1 - a;
      r.add(t, coef);
    }
  }
  return r;
}

RatPoly apply_D(int i, const RatPoly& f) {
  RatPoly r = partial(i, f);
  RatPoly b(f.nvars());
  for (int j = 1; j <= f.nvars(); ++j) {
    if (j != i) b += apply_b(i, j, f);
  }
  return r - KH::k() * b;
}

RatPoly apply_shat(int i, const RatPoly& f) {
  if (i < 1 || i >= f.nvars()) throw std::out_of_range("shat index out of range");
  return swap_vars(i, i + 1, f) + KH::h() * apply_b(i, i + 1, f);
}

RatPoly power_sum_D(int r, const RatPoly& f) {
  if (r < 0) throw std::invalid_argument("negative power");
  RatPoly total(f.nvars());
  for (int i = 1; i <= f.nvars(); ++i) {
    RatPoly g = f;
    for (int s = 0; s < r; ++s) g = apply_D(i, g);
    total += g;
  }
  return total;
}

RatPoly m2_rat(const RatPoly& f, const Rational& c) {
  RatPoly first(f.nvars());
  for (int i = 1; i <= f.nvars(); ++i) {
    for (int j = i + 1; j <= f.nvars(); ++j) {
      auto q = divide_by_difference(i, j, partial(i, f) - partial(j, f));
      if (!q) throw NotDivisible("first-order term is not a polynomial");
      first += *q;
    }
  }
  return laplacian(f) + KH::monomial(1, 0, c) * first;
}

std::vector<RatPoly> monomials_upto(int n, int degree) {
  std::vector<RatPoly::Monomial> ms{RatPoly::Monomial{}};
  for (int v = 0; v < n; ++v) {
    std::vector<RatPoly::Monomial> next;
    for (const auto& m : ms) {
      int used = 0;
      for (int e : m) used += e;
      for (int e = 0; used + e <= degree; ++e) {
        auto t = m;
        t.push_back(e);
        next.push_back(std::move(t));
      }
    }
    ms = std::move(next);
  }
  std::vector<RatPoly> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(RatPoly::monomial(m));
  return out;
}

RatPoly monomial_symmetric(int n, std::vector<int> partition) {
  if (static_cast<int>(partition.size()) > n) throw std::invalid_argument("partition longer than nvars");
  partition.resize(static_cast<std::size_t>(n), 0);
  std::sort(partition.begin(), partition.end());
  RatPoly r(n);
  do {
    r.add(partition, KH(1));
  } while (std::next_permutation(partition.begin(), partition.end()));
  return r;
}

std::vector<RatPoly> symmetric_basis_upto(int n, int degree) {
  std::vector<RatPoly> out;
  // Weakly decreasing sequences of length n with sum <= degree.
  std::vector<std::vector<int>> parts{{}};
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<int>> next;
    for (const auto& p : parts) {
      int used = 0;
      for (int e : p) used += e;
      const int cap = p.empty() ? degree : p.back();
      for (int e = 0; e <= cap && used + e <= degree; ++e) {
        auto t = p;
        t.push_back(e);
        next.push_back(std::move(t));
      }
    }
    parts = std::move(next);
  }
  for (const auto& p : parts) out.push_back(monomial_symmetric(n, p));
  return out;
}

bool is_symmetric(const RatPoly& f) {
  for (int i = 1; i < f.nvars(); ++i) {
    if (!(swap_vars(i, i + 1, f) == f)) return false;
  }
  return true;
}

std::optional<Rational> proportionality(const RatPoly& lhs, const RatPoly& rhs) {
  if (rhs.is_zero()) return lhs.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  const auto& [m0, c0] = *rhs.terms().begin();
  // c0 is a KH polynomial; compare leading terms to get the candidate ratio.
  const KH l0 = lhs.coeff(m0);
  if (l0.is_zero()) return std::nullopt;
  const auto& [key, rc] = *c0.terms().rbegin();
  auto lit = l0.terms().find(key);
  if (lit == l0.terms().end()) return std::nullopt;
  const Rational ratio = lit->second / rc;
  if (!(lhs == rhs * KH(ratio))) return std::nullopt;
  return ratio;
}

std::string Normalization::description() const {
  std::ostringstream os;
  os << "sum D_i^2 = sum d_i^2 + ";
  if (coefficient) {
    os << coefficient->get_str() << "*k";
  } else {
    os << "(no single coefficient)";
  }
  os << " * sum_{i<j} (d_i - d_j)/(x_i - x_j) on " << inputs << " symmetric inputs; +2k display "
     << (matches_plus_two ? "matches" : "differs") << ", -k display " << (matches_minus_one ? "matches" : "differs");
  return os.str();
}

Normalization resolve_normalization(int n, int degree) {
  if (n < 2) throw std::invalid_argument("resolve_normalization needs n >= 2");
  Normalization out;
  out.matches_plus_two = true;
  out.matches_minus_one = true;
  bool consistent = true;
  std::optional<Rational> c;
  for (const RatPoly& f : symmetric_basis_upto(n, degree)) {
    ++out.inputs;
    const RatPoly lhs = power_sum_D(2, f);
    const RatPoly first = m2_rat(f, Rational(1)) - laplacian(f);
    const RatPoly extra = lhs - laplacian(f);
    out.matches_plus_two = out.matches_plus_two && lhs == m2_rat(f, Rational(2));
    out.matches_minus_one = out.matches_minus_one && lhs == m2_rat(f, Rational(-1));
    if (first.is_zero()) {
      consistent = consistent && extra.is_zero();
      continue;
    }
    const auto r = proportionality(extra, first);
    if (!r || (c && *c != *r)) {
      consistent = false;
      continue;
    }
    c = r;
  }
  if (consistent && c) out.coefficient = c;
  return out;
}

}  // namespace maclab
