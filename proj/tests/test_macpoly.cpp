#include <random>

#include "doctest.h"
#include "maclab/macpoly.hpp"

using namespace maclab;

namespace {

Exponent ex(std::initializer_list<int> c) {
  Exponent v;
  std::size_t i = 0;
  for (int x : c) v[i++] = x;
  return v;
}

LaurentPoly mono(const Exponent& e, const Scalar& c = Scalar(1)) { return LaurentPoly::monomial(e, c); }

// q^n for the system's q = u^D.
Scalar qp(const RootSystem& rs, int n) { return Scalar::u_power(rs.q_denominator() * n); }

// Dominant weights with fundamental-weight coordinates summing to at most h.
std::vector<Exponent> dominant_upto(const RootSystem& rs, int h) {
  std::vector<std::vector<int>> coords{{}};
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& c : coords) {
      int used = 0;
      for (int x : c) used += x;
      for (int x = 0; used + x <= h; ++x) {
        auto d = c;
        d.push_back(x);
        next.push_back(d);
      }
    }
    coords = std::move(next);
  }
  std::vector<Exponent> out;
  for (const auto& c : coords) out.push_back(rs.exponent_from_omega(c));
  return out;
}

// (a; p)_n
Scalar pochhammer(const Scalar& a, const Scalar& p, int n) {
  Scalar r(1), pw(1);
  for (int i = 0; i < n; ++i) {
    r *= Scalar(1) - a * pw;
    pw *= p;
  }
  return r;
}

// Monic Rogers polynomial in x = X^omega with base p = q^2 and beta = p^k.
LaurentPoly rogers(const RootSystem& a1, int n, int k) {
  const Scalar p = qp(a1, 2), beta = qp(a1, 2 * k);
  auto c = [&](int j) {
    return pochhammer(beta, p, j) * pochhammer(beta, p, n - j) / (pochhammer(p, p, j) * pochhammer(p, p, n - j));
  };
  const Scalar lead = c(0);
  LaurentPoly out;
  for (int j = 0; j <= n; ++j) out += mono(ex({2 * (n - 2 * j)}), c(j) / lead);
  return out;
}

// Small deterministic polynomial with weights in the box [-b, b].
LaurentPoly random_poly(const RootSystem& rs, std::mt19937& gen, int terms, int b) {
  std::uniform_int_distribution<int> coord(-b, b), coef(-3, 3), pw(-2, 2);
  LaurentPoly f;
  for (int j = 0; j < terms; ++j) {
    Exponent e;
    for (int i = 0; i < rs.rank(); ++i) e[static_cast<std::size_t>(i)] = 2 * coord(gen);
    f += mono(e, Scalar(coef(gen)) * Scalar::u_power(pw(gen)));
  }
  return f;
}

Rational weyl_dimension(const RootSystem& rs, const Exponent& lambda) {
  Rational d(1);
  const Exponent top = lambda + rs.rho_exponent(), r = rs.rho_exponent();
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    d *= Rational(rs.doubled_coroot_pairing(top, a), rs.doubled_coroot_pairing(r, a));
  }
  d.canonicalize();
  return d;
}

Rational coefficient_sum(const LaurentPoly& f) {
  Rational s;
  for (const auto& [e, c] : f.terms()) {
    Rational v;
    int pw = 0;
    REQUIRE(c.as_monomial(v, pw));
    REQUIRE(pw == 0);
    s += v;
  }
  return s;
}

}  // namespace

TEST_CASE("orbit sums and characters") {
  RootSystem a1 = RootSystem::build("A1");
  RootSystem a2 = RootSystem::build("A2");
  CHECK(orbit_sum(a1, Exponent{}) == LaurentPoly(Scalar(1)));
  CHECK(orbit_sum(a1, ex({1})) == mono(ex({1})) + mono(ex({-1})));
  CHECK(orbit_sum(a2, a2.root_exponent(a2.highest_root())).size() == 6);
  CHECK_THROWS_AS(orbit_sum(a1, ex({-2})), std::invalid_argument);
  CHECK(weyl_character(a1, Exponent{}) == LaurentPoly(Scalar(1)));
  CHECK(weyl_character(a1, ex({4})) == mono(ex({4})) + LaurentPoly(Scalar(1)) + mono(ex({-4})));
  CHECK(weyl_character(a2, ex({2, 0})) == orbit_sum(a2, ex({2, 0})));
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& lam : dominant_upto(rs, 2)) {
      const LaurentPoly chi = weyl_character(rs, lam);
      CHECK(coefficient_sum(chi) == weyl_dimension(rs, lam));
      const auto exp = orbit_expansion(rs, chi);
      CHECK(exp.back().first == lam);
      CHECK(exp.back().second == Scalar(1));
    }
  }
  CHECK_THROWS_AS(orbit_expansion(a2, mono(ex({2, 0}))), std::invalid_argument);
}

TEST_CASE("Macdonald inner product examples") {
  MacdonaldContext c1(RootSystem::build("A1", KParams::equal(1)));
  CHECK(c1.inner_k(LaurentPoly(Scalar(1)), LaurentPoly(Scalar(1))) == Scalar(1));
  MacdonaldContext c2(RootSystem::build("A1", KParams::equal(2)));
  const RootSystem& rs = c2.root_system();
  const Scalar one(1);
  CHECK(c2.inner_k(LaurentPoly(one), LaurentPoly(one)) == one + qp(rs, 2) + qp(rs, 4));
  const LaurentPoly m = orbit_sum(rs, ex({2}));
  CHECK(c2.inner_k(m, m) == one + qp(rs, 4));
  CHECK(c2.inner_k(m, m) == (one - qp(rs, 8)) / (one - qp(rs, 4)));
  CHECK(c2.inner_cherednik(LaurentPoly(one), LaurentPoly(one)) == c2.weights().mu.constant_term());
}

TEST_CASE("Cherednik inner product") {
  std::mt19937 gen(17);
  for (const char* label : {"A1", "A2", "B2"}) {
    for (int k = 1; k <= 2; ++k) {
      MacdonaldContext ctx(RootSystem::build(label, KParams::equal(k)));
      const RootSystem& rs = ctx.root_system();
      const Daha& h = ctx.daha();
      const Scalar pre(rs.sum_k() % 2 ? -1L : 1L);
      long kk = 0;
      for (int a = 0; a < rs.num_positive_roots(); ++a) kk += static_cast<long>(rs.k_of(a)) * (rs.k_of(a) - 1);
      const Scalar factor = pre * qp(rs, static_cast<int>(-kk)) * d_k_sum(rs);
      // Symmetric pairs.
      const auto basis = dominant_upto(rs, 2);
      for (const auto& a : basis) {
        for (const auto& b : basis) {
          const LaurentPoly f = orbit_sum(rs, a), g = orbit_sum(rs, b) * qp(rs, 1);
          CHECK(ctx.inner_cherednik(f, g) == factor * ctx.inner_k(f, g.iota()));
        }
      }
      for (int trial = 0; trial < 4; ++trial) {
        const LaurentPoly f = random_poly(rs, gen, 3, 1), g = random_poly(rs, gen, 3, 1);
        CHECK(ctx.inner_cherednik(f, g) == ctx.inner_cherednik(g, f).iota());
        for (int i = 1; i <= rs.rank(); ++i) {
          CHECK(ctx.inner_cherednik(h.T(i, f), g) == ctx.inner_cherednik(f, h.T_inv(i, g)));
        }
        for (int i = 0; i < rs.rank(); ++i) {
          const Coweight b = rs.fundamental_coweight_vec(i);
          CHECK(ctx.inner_cherednik(h.Y(b, f), g) == ctx.inner_cherednik(f, h.Y(-b, g)));
        }
      }
    }
  }
}

TEST_CASE("d_k routes") {
  RootSystem a1 = RootSystem::build("A1", KParams::equal(1));
  const Scalar q = qp(a1, 1);
  CHECK(d_k_sum(a1) == q + q.inverse());
  CHECK(d_k_product(a1) == q + q.inverse());
  CHECK(d_k_symmetrized(a1) == q + q.inverse());
  for (const char* label : {"A1", "A2", "B2", "G2", "A3"}) {
    RootSystem zero = RootSystem::build(label, KParams::equal(0));
    CHECK(d_k_sum(zero) == Scalar(static_cast<long>(zero.weyl_order())));
    CHECK(d_k_symmetrized(zero) == Scalar(static_cast<long>(zero.weyl_order())));
    CHECK_THROWS_AS(d_k_product(zero), std::domain_error);
    for (KParams k : {KParams{1, 1}, KParams{2, 2}, KParams{3, 3}, KParams{1, 2}, KParams{2, 1}}) {
      RootSystem rs = RootSystem::build(label, k);
      CHECK(d_k_sum(rs) == d_k_product(rs));
      CHECK(d_k_sum(rs) == d_k_symmetrized(rs));
    }
  }
}

TEST_CASE("norm formula values") {
  RootSystem a1 = RootSystem::build("A1", KParams::equal(2));
  const Scalar one(1);
  CHECK(norm_formula_rhs(a1, Exponent{}) == one + qp(a1, 2) + qp(a1, 4));
  CHECK(norm_formula_rhs(a1, ex({2})) == one + qp(a1, 4));
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    RootSystem ones = RootSystem::build(label, KParams::equal(1));
    for (const auto& lam : dominant_upto(ones, 2)) CHECK(norm_formula_rhs(ones, lam) == one);
    for (KParams k : {KParams{2, 2}, KParams{3, 3}, KParams{1, 2}, KParams{2, 1}}) {
      RootSystem rs = RootSystem::build(label, k);
      for (const auto& lam : dominant_upto(rs, 2)) CHECK(norm_formula_rhs(rs, lam) == norm_formula_brackets(rs, lam));
    }
  }
  CHECK(q_binomial(a1, 4, 2) == q_number(a1, 4) * q_number(a1, 3) / (q_number(a1, 2) * q_number(a1, 1)));
  CHECK(q_number(a1, 2) == qp(a1, 1) + qp(a1, -1));
}

TEST_CASE("constant term identities") {
  RootSystem a1 = RootSystem::build("A1", KParams::equal(1));
  const CtIdentity r = ct_identity(a1);
  CHECK(r.lhs == Scalar(1));
  CHECK(r.holds);
  CHECK(r.binomial_lhs == Scalar(1) + qp(a1, 2));
  CHECK(r.ratio == qp(a1, 1));
  CHECK(ct_identity(a1.with_k(KParams::equal(2))).lhs == Scalar(1) + qp(a1, 2) + qp(a1, 4));
  struct Case {
    const char* label;
    int kmax;
  };
  for (const Case& c : {Case{"A1", 4}, Case{"A2", 3}, Case{"B2", 3}, Case{"G2", 2}}) {
    for (int k = 1; k <= c.kmax; ++k) {
      const CtIdentity x = ct_identity(RootSystem::build(c.label, KParams::equal(k)));
      CHECK(x.holds);
      CHECK(x.has_binomial_form);
      CHECK(x.ratio_is_monomial);
    }
  }
  const CtIdentity b = ct_identity(RootSystem::build("B2", KParams{1, 2}));
  CHECK(b.holds);
  CHECK_FALSE(b.has_binomial_form);
}

TEST_CASE("Macdonald polynomials: special cases") {
  for (const char* label : {"A1", "A2", "B2", "C3", "A3"}) {
    MacdonaldContext ctx(RootSystem::build(label, KParams::equal(2)));
    const RootSystem& rs = ctx.root_system();
    for (int r : rs.minuscule()) {
      const Exponent e = rs.fundamental_weight_exp(r - 1);
      // Minuscule coweights are minuscule weights in these types only when simply laced.
      if (rs.dominant_weights_below(e).size() != 1) continue;
      CHECK(ctx.gram(e).to_poly(rs) == orbit_sum(rs, e));
      CHECK(ctx.eigen(e).to_poly(rs) == orbit_sum(rs, e));
    }
  }
  MacdonaldContext a1(RootSystem::build("A1", KParams::equal(1)));
  CHECK(a1.gram(ex({4})).to_poly(a1.root_system()) == orbit_sum(a1.root_system(), ex({4})) + LaurentPoly(Scalar(1)));
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    MacdonaldContext zero(RootSystem::build(label, KParams::equal(0)));
    const RootSystem& rs = zero.root_system();
    for (const auto& lam : dominant_upto(rs, 2)) {
      CHECK(zero.gram(lam).to_poly(rs) == orbit_sum(rs, lam));
      CHECK(zero.gram(lam).coeffs.size() == 1);
    }
    MacdonaldContext ones(RootSystem::build(label, KParams::equal(1)));
    for (const auto& lam : dominant_upto(rs, 2)) {
      const LaurentPoly p = ones.gram(lam).to_poly(rs);
      CHECK(p == weyl_character(rs, lam));
      CHECK(ones.inner_k(p, p) == Scalar(1));
    }
  }
}

TEST_CASE("A1 Macdonald polynomials are Rogers polynomials") {
  for (int k = 1; k <= 3; ++k) {
    MacdonaldContext ctx(RootSystem::build("A1", KParams::equal(k)));
    const RootSystem& rs = ctx.root_system();
    for (int n = 0; n <= 5; ++n) {
      const LaurentPoly p = ctx.gram(ex({2 * n})).to_poly(rs);
      CHECK(p == rogers(rs, n, k));
      CHECK(ctx.inner_k(p, p) == norm_formula_rhs(rs, ex({2 * n})));
    }
  }
}

TEST_CASE("Gram and eigen constructions agree") {
  struct Case {
    const char* label;
    KParams k;
    int height;
  };
  for (const Case& c : {Case{"A1", {3, 3}, 4}, Case{"A2", {1, 1}, 3}, Case{"A2", {2, 2}, 3}, Case{"A2", {3, 3}, 2},
                        Case{"B2", {1, 1}, 2}, Case{"B2", {2, 2}, 2}, Case{"B2", {1, 2}, 2}, Case{"B2", {2, 1}, 2},
                        Case{"G2", {1, 1}, 1}, Case{"G2", {1, 2}, 1}}) {
    MacdonaldContext ctx(RootSystem::build(c.label, c.k));
    const RootSystem& rs = ctx.root_system();
    for (const auto& lam : dominant_upto(rs, c.height)) {
      if (rs.dominant_weights_below(lam).size() > 6) continue;
      const MacdonaldPoly g = ctx.gram(lam);
      CHECK(g == ctx.eigen(lam));
      CHECK(g.iota() == g);
      CHECK(g.coeffs.back().first == lam);
      CHECK(g.coeffs.back().second == Scalar(1));
    }
  }
}

TEST_CASE("norm formula for the computed polynomials") {
  struct Case {
    const char* label;
    KParams k;
    int height;
  };
  for (const Case& c : {Case{"A1", {2, 2}, 3}, Case{"A1", {4, 4}, 3}, Case{"A2", {2, 2}, 2}, Case{"B2", {2, 2}, 2},
                        Case{"B2", {1, 2}, 2}, Case{"B2", {2, 1}, 2}, Case{"G2", {1, 2}, 1}, Case{"G2", {2, 1}, 1}}) {
    MacdonaldContext ctx(RootSystem::build(c.label, c.k));
    const RootSystem& rs = ctx.root_system();
    const auto weights = dominant_upto(rs, c.height);
    std::vector<LaurentPoly> ps;
    for (const auto& lam : weights) {
      ps.push_back(ctx.gram(lam).to_poly(rs));
      CHECK(ctx.inner_k(ps.back(), ps.back()) == norm_formula_rhs(rs, lam));
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (i == j) continue;
        CHECK(ctx.inner_k(ps[i], ps[j]).is_zero());
        CHECK(ctx.inner_cherednik(ps[i], ps[j]).is_zero());
      }
    }
  }
}

TEST_CASE("central operators on symmetric polynomials") {
  for (const char* label : {"A1", "A2", "B2"}) {
    MacdonaldContext ctx(RootSystem::build(label, KParams::equal(2)));
    const RootSystem& rs = ctx.root_system();
    const Daha& h = ctx.daha();
    const auto weights = dominant_upto(rs, 2);
    for (const auto& f : ctx.eigen_generators()) {
      for (const auto& lam : weights) {
        const LaurentPoly p = ctx.gram(lam).to_poly(rs);
        CHECK(h.apply_fY(f, p) == p * h.eigenvalue(f, lam));
        // Triangular on orbit sums with the same diagonal entry.
        const auto exp = orbit_expansion(rs, h.apply_fY(f, orbit_sum(rs, lam)));
        for (const auto& [mu, c] : exp) {
          CHECK(rs.dominance_leq(mu, lam));
          if (mu == lam) CHECK(c == h.eigenvalue(f, lam));
        }
      }
      for (const auto& a : weights) {
        for (const auto& b : weights) {
          const LaurentPoly ma = orbit_sum(rs, a), mb = orbit_sum(rs, b);
          CHECK(ctx.inner_k(h.apply_fY(f, ma), mb) == ctx.inner_k(ma, h.apply_fY(f, mb)));
        }
      }
    }
  }
}

TEST_CASE("Macdonald difference operators") {
  MacdonaldContext a1(RootSystem::build("A1", KParams::equal(2)));
  {
    const RootSystem& rs = a1.root_system();
    const Scalar t = qp(rs, 2);
    const YPolynomial f = minuscule_y(rs, 1);
    for (int n = 0; n <= 3; ++n) {
      const LaurentPoly m = orbit_sum(rs, ex({2 * n}));
      CHECK(a1.D_pi(1, m) == a1.daha().apply_fY(f, m) * t);
    }
  }
  for (const char* label : {"A1", "A2", "B2", "C3", "A3"}) {
    for (int k = 1; k <= 2; ++k) {
      MacdonaldContext ctx(RootSystem::build(label, KParams::equal(k)));
      const RootSystem& rs = ctx.root_system();
      const WeylGroup& W = rs.weyl();
      const Daha& h = ctx.daha();
      const int height = rs.rank() == 3 ? 1 : 2;
      for (int r : rs.minuscule()) {
        const Coweight pi = rs.fundamental_coweight_vec(r - 1);
        const YPolynomial f = minuscule_y(rs, r);
        Scalar ratio = Scalar(1);
        for (int a = 0; a < rs.num_positive_roots(); ++a) {
          if (rs.coweight_root_pairing(pi, a) == 1) ratio *= t_of(rs, a).inverse();
        }
        for (const auto& lam : dominant_upto(rs, height)) {
          const LaurentPoly m = orbit_sum(rs, lam);
          const LaurentPoly d = ctx.D_pi(r, m);
          // Diagonal entry q^{2(pi, rho_k)} sum_w q^{2(pi, w(lam + rho_k))}.
          Scalar diag;
          const Exponent shifted = lam + rs.rho_k_exponent();
          for (std::size_t w = 0; w < W.order(); ++w) diag += Scalar::u_power(rs.u_pairing(pi, W.act(static_cast<int>(w), shifted)));
          diag *= Scalar::u_power(rs.u_pairing(pi, rs.rho_k_exponent()));
          for (const auto& [mu, c] : orbit_expansion(rs, d)) {
            CHECK(rs.dominance_leq(mu, lam));
            if (mu == lam) CHECK(c == diag);
          }
          CHECK(h.apply_fY(f, m) == d * ratio);
          const LaurentPoly p = ctx.gram(lam).to_poly(rs);
          CHECK(ctx.D_pi(r, p) == p * diag);
        }
      }
      if (rs.minuscule().size() >= 2) {
        const int r1 = rs.minuscule()[0], r2 = rs.minuscule()[1];
        for (const auto& lam : dominant_upto(rs, height)) {
          const LaurentPoly m = orbit_sum(rs, lam);
          CHECK(ctx.D_pi(r1, ctx.D_pi(r2, m)) == ctx.D_pi(r2, ctx.D_pi(r1, m)));
        }
      }
    }
  }
  MacdonaldContext g2(RootSystem::build("G2"));
  CHECK_THROWS_AS(g2.D_pi(1, LaurentPoly(Scalar(1))), std::invalid_argument);
}
