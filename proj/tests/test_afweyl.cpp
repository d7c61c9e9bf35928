#include <algorithm>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "maclab/afweyl.hpp"

using namespace maclab;

namespace {

Coweight cw(std::initializer_list<int> c) {
  Coweight v;
  std::size_t i = 0;
  for (int x : c) v[i++] = x;
  return v;
}

// Inversion set by direct search over a level window wide enough for g.
std::set<AffineRoot> inversion_set(const RootSystem& rs, const ExtAffineElt& g) {
  int bound = 1;
  for (int a = 0; a < rs.num_roots(); ++a) bound = std::max(bound, std::abs(rs.coweight_root_pairing(g.translation, a)) + 1);
  std::set<AffineRoot> out;
  for (int a = 0; a < rs.num_roots(); ++a) {
    for (int k = 0; k <= bound; ++k) {
      AffineRoot x{a, k};
      if (is_positive(rs, x) && !is_positive(rs, act(rs, g, x))) out.insert(x);
    }
  }
  return out;
}

std::vector<ExtAffineElt> ball(const RootSystem& rs, int max_len) {
  std::vector<ExtAffineElt> out;
  std::unordered_set<ExtAffineElt, ExtAffineEltHash> seen;
  std::vector<ExtAffineElt> frontier;
  frontier.push_back(ExtAffineElt{});
  for (int r : rs.minuscule()) frontier.push_back(omega_elt(rs, r));
  for (const auto& g : frontier) seen.insert(g);
  for (int len = 0; len <= max_len; ++len) {
    std::vector<ExtAffineElt> next;
    for (const auto& g : frontier) {
      out.push_back(g);
      for (int i = 0; i <= rs.rank(); ++i) {
        ExtAffineElt h = multiply(rs, g, simple_reflection(rs, i));
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Reduced word peeling the largest descent instead of the smallest.
std::vector<int> word_largest_descent(const RootSystem& rs, ExtAffineElt g) {
  std::vector<int> peeled;
  for (;;) {
    int found = -1;
    for (int i = rs.rank(); i >= 0 && found < 0; --i) {
      if (!is_positive(rs, act(rs, g, simple_affine_root(rs, i)))) found = i;
    }
    if (found < 0) break;
    peeled.push_back(found);
    g = multiply(rs, g, simple_reflection(rs, found));
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

}  // namespace

TEST_CASE("length examples") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(length(a1, translation(a1.theta_coroot())) == 2);
  CHECK(length(a1, ExtAffineElt{}) == 0);
  for (const char* label : {"A1", "A2", "A3", "B2", "C3", "D4"}) {
    RootSystem rs = RootSystem::build(label);
    for (int r : rs.minuscule()) CHECK(length(rs, omega_elt(rs, r)) == 0);
  }
  RootSystem a2 = RootSystem::build("A2");
  CHECK(length(a2, translation(a2.theta_coroot())) == 4);
  CHECK(length(a1, simple_reflection(a1, 0)) == 1);
}

TEST_CASE("affine root action examples") {
  RootSystem a1 = RootSystem::build("A1");
  const AffineRoot a0 = simple_affine_root(a1, 0);
  CHECK(act(a1, simple_reflection(a1, 0), a0) == negate(a1, a0));
  CHECK(act(a1, translation(a1.theta_coroot()), AffineRoot{0, 0}) == AffineRoot{0, -2});
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4"}) {
    RootSystem rs = RootSystem::build(label);
    for (int r : rs.minuscule()) {
      CHECK(act(rs, omega_elt(rs, r), simple_affine_root(rs, 0)) == simple_affine_root(rs, r));
      auto perm = omega_permutation(rs, r);
      CHECK(perm[0] == r);
      std::vector<int> sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i <= rs.rank(); ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
      // pi_r s_i pi_r^{-1} = s_j
      const ExtAffineElt p = omega_elt(rs, r);
      for (int i = 0; i <= rs.rank(); ++i) {
        CHECK(multiply(rs, multiply(rs, p, simple_reflection(rs, i)), inverse(rs, p)) ==
              simple_reflection(rs, perm[static_cast<std::size_t>(i)]));
      }
    }
  }
}

TEST_CASE("reduced word examples") {
  RootSystem a1 = RootSystem::build("A1");
  const ExtAffineElt t = translation(a1.theta_coroot());
  ReducedWord w = reduced_word(a1, t);
  CHECK(w.omega == 0);
  CHECK(w.word.size() == 2);
  CHECK(from_word(a1, w) == t);
  ReducedWord half = reduced_word(a1, translation(cw({1})));
  CHECK(half.omega == 1);
  CHECK(half.word == std::vector<int>{1});
  CHECK(associated_roots(a1, half.word) == std::vector<AffineRoot>{{0, 0}});
  const auto ar = associated_roots(a1, w.word);
  CHECK(std::set<AffineRoot>(ar.begin(), ar.end()) == inversion_set(a1, t));
  CHECK(std::set<AffineRoot>(ar.begin(), ar.end()) == std::set<AffineRoot>{{0, 0}, {0, 1}});
  CHECK(associated_roots(a1, {}).empty());
  CHECK_THROWS_AS(associated_roots(a1, {1, 1}), std::invalid_argument);
  for (const char* label : {"A2", "B2", "C3"}) {
    RootSystem rs = RootSystem::build(label);
    for (int r : rs.minuscule()) {
      ReducedWord p = reduced_word(rs, omega_elt(rs, r));
      CHECK(p.omega == r);
      CHECK(p.word.empty());
    }
  }
}

TEST_CASE("group laws") {
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    auto elts = ball(rs, 3);
    for (std::size_t i = 0; i < elts.size(); i += 3) {
      for (std::size_t j = 0; j < elts.size(); j += 5) {
        const auto& a = elts[i];
        const auto& b = elts[j];
        CHECK(multiply(rs, a, inverse(rs, a)) == ExtAffineElt{});
        const auto& c = elts[(i + j) % elts.size()];
        CHECK(multiply(rs, multiply(rs, a, b), c) == multiply(rs, a, multiply(rs, b, c)));
        for (int x = 0; x < rs.num_roots(); x += 2) {
          AffineRoot r{x, 1};
          CHECK(act(rs, multiply(rs, a, b), r) == act(rs, a, act(rs, b, r)));
        }
      }
    }
  }
}

TEST_CASE("polynomial action") {
  RootSystem a1 = RootSystem::build("A1");
  Exponent x;
  x[0] = 4;  // X = X^alpha
  const LaurentPoly X = LaurentPoly::monomial(x);
  const Scalar q = q_power(a1, 1);
  CHECK(act(a1, translation(cw({1})), X) == X * q.pow(2));
  CHECK(act(a1, omega_elt(a1, 1), X) == LaurentPoly::monomial(-x, q.pow(-2)));
  // s_0 X^mu = X^mu (X^theta q^2)^{-(mu, theta^vee)}
  for (int m = -3; m <= 3; ++m) {
    Exponent e;
    e[0] = m;
    Exponent shifted;
    shifted[0] = e[0] - 2 * m;
    CHECK(act(a1, simple_reflection(a1, 0), LaurentPoly::monomial(e)) ==
          LaurentPoly::monomial(shifted, q.pow(-m)));
  }
  for (const char* label : {"A2", "B2"}) {
    RootSystem rs = RootSystem::build(label);
    auto elts = ball(rs, 2);
    LaurentPoly f;
    for (int i = -2; i <= 2; ++i) {
      Exponent e;
      e[0] = i;
      e[1] = 1 - i;
      f += LaurentPoly::monomial(e, Scalar(i + 3));
    }
    for (const auto& a : elts) {
      for (const auto& b : elts) CHECK(act(rs, multiply(rs, a, b), f) == act(rs, a, act(rs, b, f)));
    }
  }
}

TEST_CASE("length properties on a ball") {
  for (const char* label : {"A1", "A2", "B2", "C2", "G2"}) {
    CAPTURE(label);
    RootSystem rs = RootSystem::build(label);
    for (const auto& g : ball(rs, 6)) {
      const int l = length(rs, g);
      const auto inv = inversion_set(rs, g);
      CHECK(static_cast<int>(inv.size()) == l);
      for (int i = 0; i <= rs.rank(); ++i) {
        const bool descent = !is_positive(rs, act(rs, g, simple_affine_root(rs, i)));
        CHECK(length(rs, multiply(rs, g, simple_reflection(rs, i))) == l + (descent ? -1 : 1));
      }
      const ReducedWord w = reduced_word(rs, g);
      CHECK(static_cast<int>(w.word.size()) == l);
      CHECK(from_word(rs, w) == g);
      const auto ar = associated_roots(rs, w.word);
      const std::set<AffineRoot> s(ar.begin(), ar.end());
      CHECK(s.size() == ar.size());
      CHECK(s == inv);
      const auto alt = word_largest_descent(rs, g);
      const auto ar2 = associated_roots(rs, alt);
      CHECK(std::set<AffineRoot>(ar2.begin(), ar2.end()) == s);
    }
  }
}

TEST_CASE("translation lengths") {
  for (const char* label : {"A1", "A2", "B2", "C2", "G2"}) {
    CAPTURE(label);
    RootSystem rs = RootSystem::build(label);
    const WeylGroup& W = rs.weyl();
    for (int c0 = 0; c0 <= 6; ++c0) {
      for (int c1 = 0; c1 <= (rs.rank() > 1 ? 6 : 0); ++c1) {
        const Coweight lam = cw({c0, c1});
        int two_rho = 0;
        for (int a = 0; a < rs.num_positive_roots(); ++a) two_rho += rs.coweight_root_pairing(lam, a);
        if (two_rho > 6) continue;
        const int lt = length(rs, translation(lam));
        CHECK(lt == two_rho);
        for (std::size_t w = 0; w < W.order(); ++w) {
          const int wi = static_cast<int>(w);
          CHECK(length(rs, translation(W.act(wi, lam))) == two_rho);
          // w tau(lambda) = tau(w lambda) w
          CHECK(length(rs, ExtAffineElt{W.act(wi, lam), wi}) == W.length(wi) + lt);
        }
      }
    }
  }
}
