#include "maclab/macpoly.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "maclab/afweyl.hpp"
#include "maclab/linalg.hpp"

namespace maclab {

namespace {

using WeightTable = std::unordered_map<Exponent, Scalar, ExponentHash>;

WeightTable table_of(const LaurentPoly& f) {
  WeightTable t;
  t.reserve(f.size());
  for (const auto& [e, c] : f.terms()) t.emplace(e, c);
  return t;
}

// [f bar(g) w]_0 = sum_{a, b} f_a g_b w_{b - a}.
Scalar ct_pairing(const LaurentPoly& f, const LaurentPoly& g, const WeightTable& w, bool iota_g) {
  Scalar s;
  for (const auto& [b, gb] : g.terms()) {
    const Scalar gc = iota_g ? gb.iota() : gb;
    for (const auto& [a, fa] : f.terms()) {
      auto it = w.find(b - a);
      if (it != w.end()) s += fa * gc * it->second;
    }
  }
  return s;
}

Scalar q_int(const RootSystem& rs, long n) { return Scalar::u_power(static_cast<int>(rs.q_denominator() * n)); }

// (alpha^vee, mu) for a weight given by doubled coordinates.
int coroot_pairing(const RootSystem& rs, const Exponent& e, int a) {
  const int twice = rs.doubled_coroot_pairing(e, a);
  if (twice % 2 != 0) throw std::invalid_argument("weight outside P");
  return twice / 2;
}

// Height in simple-root coordinates, which increases along the dominance order.
Rational root_height(const RootSystem& rs, const Exponent& e) {
  Rational h = 0;
  for (const auto& x : rs.simple_coords(e)) h += x;
  return h;
}

bool height_less(const RootSystem& rs, const Exponent& a, const Exponent& b) {
  const Rational ha = root_height(rs, a), hb = root_height(rs, b);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

Scalar MacdonaldPoly::coeff(const Exponent& mu) const {
  for (const auto& [e, c] : coeffs) {
    if (e == mu) return c;
  }
  return Scalar();
}

LaurentPoly MacdonaldPoly::to_poly(const RootSystem& rs) const {
  PolyBuilder b;
  for (const auto& [e, c] : coeffs) b.add(orbit_sum(rs, e), c);
  return b.build();
}

MacdonaldPoly MacdonaldPoly::iota() const {
  MacdonaldPoly p = *this;
  for (auto& [e, c] : p.coeffs) c = c.iota();
  return p;
}

LaurentPoly orbit_sum(const RootSystem& rs, const Exponent& lambda) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("orbit_sum needs a dominant weight");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& e : rs.orbit(lambda)) terms.emplace_back(e, Scalar(1));
  return LaurentPoly::from_terms(std::move(terms));
}

std::vector<std::pair<Exponent, Scalar>> orbit_expansion(const RootSystem& rs, const LaurentPoly& f) {
  std::vector<std::pair<Exponent, Scalar>> out;
  PolyBuilder check;
  for (const auto& [e, c] : f.terms()) {
    if (!rs.is_dominant(e)) continue;
    out.emplace_back(e, c);
    check.add(orbit_sum(rs, e), c);
  }
  if (!(check.build() == f)) throw std::invalid_argument("polynomial is not W-invariant");
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return height_less(rs, x.first, y.first); });
  return out;
}

LaurentPoly weyl_character(const RootSystem& rs, const Exponent& lambda) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("weyl_character needs a dominant weight");
  const WeylGroup& W = rs.weyl();
  const Exponent top = lambda + rs.rho_exponent();
  PolyBuilder alt;
  for (std::size_t w = 0; w < W.order(); ++w) {
    const int wi = static_cast<int>(w);
    alt.add(W.act(wi, top), Scalar(W.sign(wi)));
  }
  return exact_div(alt.build(), delta_poly(rs));
}

Scalar d_k_sum(const RootSystem& rs) {
  const WeylGroup& W = rs.weyl();
  Scalar s;
  for (std::size_t w = 0; w < W.order(); ++w) {
    long kw = 0;
    for (int a = 0; a < rs.num_positive_roots(); ++a) {
      if (!rs.is_positive_root(W.act_root(static_cast<int>(w), a))) kw += rs.k_of(a);
    }
    s += q_int(rs, -2 * kw);
  }
  return s * q_int(rs, rs.sum_k());
}

Scalar d_k_product(const RootSystem& rs) {
  const Exponent rk = rs.rho_k_exponent();
  Scalar p(1);
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    const int c = coroot_pairing(rs, rk, a);
    if (c == 0) throw std::domain_error("product form of d_k is 0/0 at this parameter");
    const int top = c + rs.k_of(a);
    p *= (q_int(rs, top) - q_int(rs, -top)) / (q_int(rs, c) - q_int(rs, -c));
  }
  return p;
}

Scalar d_k_symmetrized(const RootSystem& rs) {
  const WeylGroup& W = rs.weyl();
  const LaurentPoly ph = phi(rs, 1);
  PolyBuilder alt;
  for (std::size_t w = 0; w < W.order(); ++w) {
    const int wi = static_cast<int>(w);
    alt.add(w_action(rs, wi, ph), Scalar(W.sign(wi)));
  }
  const LaurentPoly q = exact_div(alt.build(), delta_poly(rs));
  if (q.size() > 1 || (q.size() == 1 && !q.terms()[0].first.is_zero())) {
    throw std::logic_error("symmetrized phi_k / delta is not constant");
  }
  return q.constant_term();
}

Scalar norm_formula_rhs(const RootSystem& rs, const Exponent& lambda) {
  const Exponent shifted = lambda + rs.rho_k_exponent();
  Scalar p(1);
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    const int c = coroot_pairing(rs, shifted, a);
    for (int i = 1; i < rs.k_of(a); ++i) {
      if (c == i) throw std::domain_error("vanishing denominator in the norm formula");
      p *= (Scalar(1) - q_int(rs, 2L * c + 2L * i)) / (Scalar(1) - q_int(rs, 2L * c - 2L * i));
    }
  }
  return p;
}

Scalar q_number(const RootSystem& rs, int n) { return (q_int(rs, n) - q_int(rs, -n)) / (q_int(rs, 1) - q_int(rs, -1)); }

Scalar q_binomial(const RootSystem& rs, int a, int b) {
  if (b < 0 || b > a) return Scalar();
  Scalar r(1);
  for (int i = 1; i <= b; ++i) r *= q_number(rs, a - b + i) / q_number(rs, i);
  return r;
}

Scalar norm_formula_brackets(const RootSystem& rs, const Exponent& lambda) {
  const Exponent shifted = lambda + rs.rho_k_exponent();
  long power = 0;
  Scalar p(1);
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    const int k = rs.k_of(a);
    if (k > 0) power += static_cast<long>(k) * (k - 1);
    const int c = coroot_pairing(rs, shifted, a);
    for (int i = 1; i < k; ++i) {
      if (c == i) throw std::domain_error("vanishing denominator in the norm formula");
      p *= q_number(rs, c + i) / q_number(rs, c - i);
    }
  }
  return p * q_int(rs, power);
}

CtIdentity ct_identity(const RootSystem& rs) {
  CtIdentity r;
  r.lhs = Delta_k(rs).constant_term() * Scalar(frac(1, static_cast<long>(rs.weyl_order())));
  r.rhs = norm_formula_brackets(rs, Exponent{});
  r.holds = r.lhs == r.rhs && r.rhs == norm_formula_rhs(rs, Exponent{});
  if (rs.k().is_equal() || rs.simply_laced()) {
    const int k = rs.k().k_long;
    r.has_binomial_form = true;
    LaurentPoly prod(Scalar(1));
    for (int a = 0; a < rs.num_positive_roots(); ++a) {
      const Exponent& e = rs.root_exponent(a);
      for (int i = 0; i < k; ++i) {
        prod *= LaurentPoly(Scalar(1)) - LaurentPoly::monomial(e, q_int(rs, 2L * i));
        prod *= LaurentPoly(Scalar(1)) - LaurentPoly::monomial(-e, q_int(rs, 2L * i + 2));
      }
    }
    r.binomial_lhs = prod.constant_term();
    r.binomial_rhs = Scalar(1);
    for (int d : rs.degrees()) r.binomial_rhs *= q_binomial(rs, k * d, k);
    r.ratio = r.binomial_lhs / r.binomial_rhs;
    Rational c;
    int e = 0;
    r.ratio_is_monomial = r.ratio.as_monomial(c, e);
  }
  return r;
}

YPolynomial minuscule_y(const RootSystem& rs, int r) {
  const Coweight pi = rs.fundamental_coweight_vec(r - 1);
  YPolynomial f = orbit_y(rs, pi);
  const Scalar stab(static_cast<long>(rs.weyl_order() / static_cast<long long>(f.terms.size())));
  for (auto& [l, c] : f.terms) c = stab;
  return f;
}

struct MacdonaldContext::Cache {
  std::once_flag weights_once;
  WeightFunctions weights;
  WeightTable delta_table;
  WeightTable mu_table;
  std::mutex mu;
  std::map<Exponent, MacdonaldPoly> gram;
  std::map<Exponent, MacdonaldPoly> eigen;
};

MacdonaldContext::MacdonaldContext(RootSystem rs) : daha_(std::move(rs)), cache_(std::make_unique<Cache>()) {}

MacdonaldContext::~MacdonaldContext() = default;

const WeightFunctions& MacdonaldContext::weights() const {
  std::call_once(cache_->weights_once, [this] {
    cache_->weights = weight_functions(root_system());
    cache_->delta_table = table_of(cache_->weights.Delta);
    cache_->mu_table = table_of(cache_->weights.mu);
  });
  return cache_->weights;
}

Scalar MacdonaldContext::inner_k(const LaurentPoly& f, const LaurentPoly& g) const {
  weights();
  return ct_pairing(f, g, cache_->delta_table, false) * Scalar(frac(1, static_cast<long>(root_system().weyl_order())));
}

Scalar MacdonaldContext::inner_cherednik(const LaurentPoly& f, const LaurentPoly& g) const {
  weights();
  return ct_pairing(f, g, cache_->mu_table, true);
}

MacdonaldPoly MacdonaldContext::gram(const Exponent& lambda) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->gram.find(lambda);
    if (it != cache_->gram.end()) return it->second;
  }
  const RootSystem& rs = root_system();
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("lambda must be dominant");
  const std::vector<Exponent> basis = rs.dominant_weights_below(lambda);
  const std::size_t n = basis.size() - 1;
  std::vector<LaurentPoly> m;
  for (const auto& e : basis) m.push_back(orbit_sum(rs, e));
  MacdonaldPoly p{lambda, rs.k(), {}};
  if (n > 0) {
    Matrix a(n, std::vector<Scalar>(n));
    std::vector<Scalar> b(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) a[v][u] = inner_k(m[u], m[v]);
      b[v] = -inner_k(m[n], m[v]);
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) throw std::runtime_error("singular Gram system");
    for (std::size_t u = 0; u < n; ++u) {
      if (!(*x)[u].is_zero()) p.coeffs.emplace_back(basis[u], (*x)[u]);
    }
  }
  p.coeffs.emplace_back(lambda, Scalar(1));
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->gram.emplace(lambda, std::move(p)).first->second;
}

std::vector<YPolynomial> MacdonaldContext::eigen_generators() const {
  const RootSystem& rs = root_system();
  std::vector<YPolynomial> out;
  for (int i = 0; i < rs.rank(); ++i) out.push_back(orbit_y(rs, rs.fundamental_coweight_vec(i)));
  out.push_back(orbit_y(rs, rs.rho_coweight()));
  return out;
}

std::vector<std::vector<Scalar>> MacdonaldContext::fY_matrix(const YPolynomial& f,
                                                             const std::vector<Exponent>& basis) const {
  const RootSystem& rs = root_system();
  const std::size_t n = basis.size();
  std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const LaurentPoly img = daha_.apply_fY(f, orbit_sum(rs, basis[j]));
    for (const auto& [e, c] : orbit_expansion(rs, img)) {
      auto it = std::find(basis.begin(), basis.end(), e);
      if (it == basis.end()) throw std::logic_error("f(Y) image leaves the span of lower orbit sums");
      mat[static_cast<std::size_t>(it - basis.begin())][j] = c;
    }
  }
  return mat;
}

MacdonaldPoly MacdonaldContext::eigen(const Exponent& lambda) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->eigen.find(lambda);
    if (it != cache_->eigen.end()) return it->second;
  }
  const RootSystem& rs = root_system();
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("lambda must be dominant");
  const std::vector<Exponent> basis = rs.dominant_weights_below(lambda);
  const std::size_t n = basis.size();
  MacdonaldPoly p{lambda, rs.k(), {}};
  if (n == 1) {
    p.coeffs.emplace_back(lambda, Scalar(1));
  } else {
    Matrix stacked;
    std::vector<std::vector<Scalar>> kernel;
    for (const auto& f : eigen_generators()) {
      auto mat = fY_matrix(f, basis);
      const Scalar c = daha_.eigenvalue(f, lambda);
      for (std::size_t i = 0; i < n; ++i) mat[i][i] -= c;
      for (auto& row : mat) stacked.push_back(std::move(row));
      kernel = nullspace(stacked, n);
      if (kernel.size() <= 1) break;
    }
    if (kernel.size() != 1) throw std::runtime_error("no separating central element found");
    const auto& v = kernel[0];
    if (v[n - 1].is_zero()) throw std::logic_error("eigenvector without leading term");
    const Scalar inv = v[n - 1].inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[i].is_zero()) p.coeffs.emplace_back(basis[i], v[i] * inv);
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->eigen.emplace(lambda, std::move(p)).first->second;
}

LaurentPoly MacdonaldContext::D_pi(int r, const LaurentPoly& f) const {
  const RootSystem& rs = root_system();
  const auto& mins = rs.minuscule();
  if (std::find(mins.begin(), mins.end(), r) == mins.end()) throw std::invalid_argument("b_r is not minuscule");
  const WeylGroup& W = rs.weyl();
  const Coweight pi = rs.fundamental_coweight_vec(r - 1);
  const LaurentPoly one(Scalar(1));
  // Numerator over the common denominator A = prod_{alpha > 0} (1 - X^alpha).
  LaurentPoly num = act(rs, translation(pi), f);
  LaurentPoly den(Scalar(1));
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    const Exponent& e = rs.root_exponent(a);
    den *= one - LaurentPoly::monomial(e);
    if (rs.coweight_root_pairing(pi, a) == 1) {
      const Scalar t = t_of(rs, a);
      num *= one - LaurentPoly::monomial(e, t * t);
    } else {
      num *= one - LaurentPoly::monomial(e);
    }
  }
  // w(A) = A prod_{alpha > 0, w alpha < 0} (-X^{w alpha}).
  PolyBuilder total;
  for (std::size_t w = 0; w < W.order(); ++w) {
    const int wi = static_cast<int>(w);
    LaurentPoly term = w_action(rs, wi, num);
    for (int a = 0; a < rs.num_positive_roots(); ++a) {
      const int b = W.act_root(wi, a);
      if (!rs.is_positive_root(b)) term = term.shifted(rs.root_exponent(rs.negate_root(b))) * Scalar(-1);
    }
    total.add(term);
  }
  return exact_div(total.build(), den);
}

}  // namespace maclab
