#include "maclab/dahaop.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace maclab {

YPolynomial orbit_y(const RootSystem& rs, const Coweight& lambda) {
  YPolynomial f;
  for (const Coweight& mu : rs.orbit(lambda)) f.terms.emplace_back(mu, Scalar(1));
  return f;
}

bool is_w_closed(const RootSystem& rs, const YPolynomial& f) {
  std::map<Coweight, Scalar> m;
  for (const auto& [l, c] : f.terms) {
    auto [it, fresh] = m.emplace(l, c);
    if (!fresh) it->second += c;
  }
  const WeylGroup& W = rs.weyl();
  for (const auto& [l, c] : m) {
    if (c.is_zero()) continue;
    for (int i = 0; i < rs.rank(); ++i) {
      auto it = m.find(W.act(W.simple(i), l));
      if (it == m.end() || !(it->second == c)) return false;
    }
  }
  return true;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Coweight, Exponent>& p) const noexcept {
    return CoweightHash{}(p.first) * 1000003u ^ ExponentHash{}(p.second);
  }
};

}  // namespace

struct Daha::Cache {
  std::mutex mu;
  std::map<Coweight, ReducedWord> words;
  std::unordered_map<std::pair<Coweight, Exponent>, LaurentPoly, PairHash> y_mono;
};

Daha::Daha(RootSystem rs) : rs_(std::move(rs)), cache_(std::make_unique<Cache>()) {
  t_.push_back(t_of(rs_, rs_.highest_root()));
  for (int i = 0; i < rs_.rank(); ++i) t_.push_back(t_of(rs_, rs_.simple_root(i)));
}

Daha::~Daha() = default;

LaurentPoly Daha::T_monomial(int i, const Exponent& e, const Scalar& c, bool inverse) const {
  // s_i X^mu = X^mu Z^r with Z = X^{-alpha_i} (times q^2 for i = 0).
  int twice_r = 0;
  Exponent z;
  int zu = 0;
  if (i == 0) {
    const auto& cc = rs_.coroot_simple(rs_.highest_root());
    for (int j = 0; j < rs_.rank(); ++j) twice_r -= cc[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(j)];
    z = rs_.root_exponent(rs_.highest_root());
    zu = 2 * rs_.q_denominator();
  } else {
    twice_r = e[static_cast<std::size_t>(i - 1)];
    z = -rs_.root_exponent(rs_.simple_root(i - 1));
  }
  if (twice_r % 2 != 0) throw std::invalid_argument("T_i applied outside the weight lattice");
  const int r = twice_r / 2;
  const Scalar& ti = t(i);
  const Scalar tinv = ti.inverse();
  const Scalar diff = ti - tinv;
  std::vector<LaurentPoly::Term> out;
  auto term = [&](int j, const Scalar& coef) {
    if (coef.is_zero()) return;
    Scalar s = c * coef;
    if (zu != 0 && j != 0) s *= Scalar::u_power(zu * j);
    out.emplace_back(e + j * z, s);
  };
  if (r > 0) {
    for (int j = 0; j < r; ++j) term(j, diff);
    term(r, ti);
  } else if (r == 0) {
    term(0, ti);
  } else {
    for (int j = r + 1; j <= -1; ++j) term(j, -diff);
    term(r, tinv);
  }
  if (inverse) term(0, tinv - ti);
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly Daha::T(int i, const LaurentPoly& f) const {
  if (i < 0 || i > rs_.rank()) throw std::out_of_range("T index out of range");
  PolyBuilder b;
  for (const auto& [e, c] : f.terms()) b.add(T_monomial(i, e, c, false));
  return b.build();
}

LaurentPoly Daha::T_inv(int i, const LaurentPoly& f) const {
  if (i < 0 || i > rs_.rank()) throw std::out_of_range("T index out of range");
  PolyBuilder b;
  for (const auto& [e, c] : f.terms()) b.add(T_monomial(i, e, c, true));
  return b.build();
}

LaurentPoly Daha::pi(int r, const LaurentPoly& f) const {
  if (r == 0) return f;
  return act(rs_, omega_elt(rs_, r), f);
}

LaurentPoly Daha::pi_inv(int r, const LaurentPoly& f) const {
  if (r == 0) return f;
  return act(rs_, inverse(rs_, omega_elt(rs_, r)), f);
}

LaurentPoly Daha::apply_word(int omega, const std::vector<int>& word, const std::vector<int>& eps,
                             const LaurentPoly& f) const {
  if (eps.size() != word.size()) throw std::invalid_argument("sign list length mismatch");
  LaurentPoly g = f;
  for (std::size_t j = word.size(); j-- > 0;) g = eps[j] > 0 ? T(word[j], g) : T_inv(word[j], g);
  return pi(omega, g);
}

LaurentPoly Daha::T_w(int w, const LaurentPoly& f) const {
  const auto& word = rs_.weyl().word(w);
  LaurentPoly g = f;
  for (std::size_t j = word.size(); j-- > 0;) g = T(word[j] + 1, g);
  return g;
}

const ReducedWord& Daha::word_of(const Coweight& lambda) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->words.find(lambda);
    if (it != cache_->words.end()) return it->second;
  }
  ReducedWord w = reduced_word(rs_, translation(lambda));
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->words.emplace(lambda, std::move(w)).first->second;
}

std::vector<int> Daha::y_signs(const std::vector<int>& word) const {
  const auto roots = associated_roots(rs_, word);
  // roots[j] is alpha^(j+1), which belongs to the letter word[l-1-j].
  std::vector<int> eps(word.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    eps[word.size() - 1 - j] = rs_.is_positive_root(roots[j].root) ? 1 : -1;
  }
  return eps;
}

LaurentPoly Daha::Y_dominant(const Coweight& lambda, const LaurentPoly& f) const {
  if (lambda.is_zero()) return f;
  const ReducedWord& w = word_of(lambda);
  const std::vector<int> plus(w.word.size(), 1);
  PolyBuilder b;
  for (const auto& [e, c] : f.terms()) {
    const auto key = std::make_pair(lambda, e);
    LaurentPoly img;
    bool hit = false;
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->y_mono.find(key);
      if (it != cache_->y_mono.end()) {
        img = it->second;
        hit = true;
      }
    }
    if (!hit) {
      img = apply_word(w.omega, w.word, plus, LaurentPoly::monomial(e));
      std::lock_guard<std::mutex> lock(cache_->mu);
      cache_->y_mono.emplace(key, img);
    }
    b.add(img, c);
  }
  return b.build();
}

LaurentPoly Daha::Y_dominant_inv(const Coweight& lambda, const LaurentPoly& f) const {
  if (lambda.is_zero()) return f;
  const ReducedWord& w = word_of(lambda);
  LaurentPoly g = pi_inv(w.omega, f);
  for (int i : w.word) g = T_inv(i, g);
  return g;
}

LaurentPoly Daha::Y(const Coweight& lambda, const LaurentPoly& f) const {
  Coweight mu, nu;
  for (int i = 0; i < rs_.rank(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    (lambda[k] > 0 ? mu : nu)[k] = lambda[k] > 0 ? lambda[k] : -lambda[k];
  }
  return Y_dominant(mu, Y_dominant_inv(nu, f));
}

LaurentPoly Daha::Y_along(const ReducedWord& w, const LaurentPoly& f) const {
  return apply_word(w.omega, w.word, y_signs(w.word), f);
}

LaurentPoly Daha::Y_signed(const Coweight& lambda, const LaurentPoly& f) const {
  return Y_along(word_of(lambda), f);
}

LaurentPoly Daha::apply_fY(const YPolynomial& f, const LaurentPoly& g) const {
  if (!is_w_closed(rs_, f)) throw std::invalid_argument("f is not W-invariant");
  PolyBuilder b;
  for (const auto& [l, c] : f.terms) b.add(Y(l, g), c);
  return b.build();
}

Scalar Daha::eigenvalue(const YPolynomial& f, const Exponent& mu) const {
  if (!is_w_closed(rs_, f)) throw std::invalid_argument("f is not W-invariant");
  const Exponent shifted = mu + rs_.rho_k_exponent();
  Scalar s;
  for (const auto& [l, c] : f.terms) s += c * Scalar::u_power(rs_.u_pairing(l, shifted));
  return s;
}

LaurentPoly Daha::symmetrize(const LaurentPoly& f) const {
  const WeylGroup& W = rs_.weyl();
  PolyBuilder b;
  for (std::size_t w = 0; w < W.order(); ++w) b.add(w_action(rs_, static_cast<int>(w), f));
  return b.build() * Scalar(Rational(1, static_cast<long>(W.order())));
}

LaurentPoly Daha::antisymmetrize(const LaurentPoly& f) const {
  const WeylGroup& W = rs_.weyl();
  PolyBuilder b;
  for (std::size_t w = 0; w < W.order(); ++w) {
    const int wi = static_cast<int>(w);
    b.add(w_action(rs_, wi, f), Scalar(W.sign(wi)));
  }
  return b.build() * Scalar(Rational(1, static_cast<long>(W.order())));
}

LaurentPoly Daha::q_antisymmetrize(const LaurentPoly& f) const {
  if (!rs_.simply_laced() && !rs_.k().is_equal()) {
    throw std::invalid_argument("q-antisymmetrizer needs equal parameters");
  }
  const WeylGroup& W = rs_.weyl();
  const Scalar tt = t(1);
  const Scalar m = -tt.inverse();
  std::vector<int> by_len(W.order());
  for (std::size_t w = 0; w < W.order(); ++w) by_len[w] = static_cast<int>(w);
  std::stable_sort(by_len.begin(), by_len.end(), [&](int a, int b) { return W.length(a) < W.length(b); });
  std::vector<LaurentPoly> img(W.order());
  PolyBuilder b;
  Scalar d;
  for (int w : by_len) {
    const auto wi = static_cast<std::size_t>(w);
    if (w == 0) {
      img[wi] = f;
    } else {
      const int a = W.word(w)[0];
      img[wi] = T(a + 1, img[static_cast<std::size_t>(W.left(a, w))]);
    }
    const Scalar weight = m.pow(W.length(w));
    b.add(img[wi], weight);
    d += weight * weight;
  }
  return b.build() * d.inverse();
}

}  // namespace maclab
