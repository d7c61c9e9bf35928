#include "doctest.h"
#include "maclab/dunkl.hpp"

#include <algorithm>

using namespace maclab;

namespace {

RatPoly x(int n, int i) { return RatPoly::variable(n, i); }

RatPoly one(int n) { return RatPoly(n, KH(1)); }

// Commutator [A, B] f for operators given as callables.
template <class A, class B>
RatPoly commutator(A a, B b, const RatPoly& f) {
  return a(b(f)) - b(a(f));
}

// Independent oracle: (s_ij f - f) evaluated, then multiplied back by (x_i - x_j).
bool b_times_difference(int i, int j, const RatPoly& f) {
  const int n = f.nvars();
  return (x(n, i) - x(n, j)) * apply_b(i, j, f) == swap_vars(i, j, f) - f;
}

}  // namespace

TEST_CASE("scalar parameters") {
  const KH k = KH::k(), h = KH::h();
  CHECK((k + 1) * (k - 1) == k * k - 1);
  CHECK((k * h).to_string() == "k*h");
  CHECK((KH(1) + k).to_string() == "1 + k");
  CHECK((KH(0) - k * k * h * 2).to_string() == "-2*k^2*h");
  CHECK(KH(3).as_constant() == Rational(3));
  CHECK_FALSE(k.as_constant().has_value());
  CHECK((k - k).is_zero());
}

TEST_CASE("divided differences") {
  const int n = 2;
  CHECK(apply_b(1, 2, x(n, 1)) == -one(n));
  CHECK(apply_b(1, 2, x(n, 1) * x(n, 2)).is_zero());
  CHECK(apply_b(1, 2, x(n, 1) * x(n, 1)) == -(x(n, 1) + x(n, 2)));
  CHECK(apply_b(1, 2, one(n)).is_zero());
  for (int m = 3; m <= 4; ++m) {
    for (const RatPoly& f : monomials_upto(m, 5)) {
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
          if (i == j) continue;
          CHECK(b_times_difference(i, j, f));
          CHECK(apply_b(i, j, f) == -apply_b(j, i, f));
        }
      }
    }
  }
  // Exact division agrees with the closed form on antisymmetrized inputs.
  for (const RatPoly& f : monomials_upto(3, 4)) {
    const RatPoly g = swap_vars(1, 3, f) - f;
    auto q = divide_by_difference(1, 3, g);
    REQUIRE(q.has_value());
    CHECK(*q == apply_b(1, 3, f));
  }
  CHECK_FALSE(divide_by_difference(1, 2, x(2, 1)).has_value());
}

TEST_CASE("b_ij conjugation and symmetric kernel") {
  const int n = 4;
  for (const RatPoly& f : monomials_upto(n, 4)) {
    // w b_ij w^{-1} = b_{w(i) w(j)} for w = s_ab.
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        auto w = [a, b](int i) { return i == a ? b : i == b ? a : i; };
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            CHECK(swap_vars(a, b, apply_b(i, j, swap_vars(a, b, f))) == apply_b(w(i), w(j), f));
          }
        }
      }
    }
  }
  for (const RatPoly& f : symmetric_basis_upto(n, 6)) {
    REQUIRE(is_symmetric(f));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) CHECK(apply_b(i, j, f).is_zero());
    }
  }
}

TEST_CASE("Dunkl operators") {
  const int n = 2;
  CHECK(apply_D(1, x(n, 1)) == RatPoly(n, KH(1) + KH::k()));
  CHECK(apply_D(2, x(n, 1)) == RatPoly(n, -KH::k()));
  for (int m = 2; m <= 4; ++m) {
    for (int i = 1; i <= m; ++i) CHECK(apply_D(i, one(m)).is_zero());
  }
  // Degree drops by one and the k-free part is the derivative.
  for (const RatPoly& f : monomials_upto(3, 4)) {
    for (int i = 1; i <= 3; ++i) {
      const RatPoly d = apply_D(i, f);
      CHECK(d.degree() <= f.degree() - 1);
      RatPoly k_free(3);
      for (const auto& [mono, c] : d.terms()) {
        auto it = c.terms().find({0, 0});
        if (it != c.terms().end()) k_free.add(mono, KH(it->second));
      }
      CHECK(k_free == partial(i, f));
    }
  }
}

TEST_CASE("Dunkl operators commute") {
  for (int n = 2; n <= 4; ++n) {
    for (const RatPoly& f : monomials_upto(n, 6)) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const RatPoly c = commutator([i](const RatPoly& g) { return apply_D(i, g); },
                                       [j](const RatPoly& g) { return apply_D(j, g); }, f);
          CHECK(c.is_zero());
        }
      }
    }
  }
}

TEST_CASE("Dunkl conjugation by transpositions") {
  const int n = 4;
  for (const RatPoly& f : monomials_upto(n, 6)) {
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        for (int i = 1; i <= n; ++i) {
          const int wi = i == a ? b : i == b ? a : i;
          CHECK(swap_vars(a, b, apply_D(i, swap_vars(a, b, f))) == apply_D(wi, f));
        }
      }
    }
  }
  // General permutations through permute: w D_i w^{-1} = D_{w(i)}.
  std::vector<int> w{1, 2, 3};
  std::vector<int> inv(3);
  do {
    for (int a = 0; a < 3; ++a) inv[static_cast<std::size_t>(w[static_cast<std::size_t>(a)] - 1)] = a + 1;
    for (const RatPoly& f : monomials_upto(3, 3)) {
      for (int i = 1; i <= 3; ++i) {
        CHECK(permute(inv, permute(w, f)) == f);
        CHECK(permute(w, apply_D(i, permute(inv, f))) == apply_D(w[static_cast<std::size_t>(i - 1)], f));
      }
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("classical Yang-Baxter equation") {
  auto b = [](int i, int j) { return [i, j](const RatPoly& g) { return apply_b(i, j, g); }; };
  for (const RatPoly& f : monomials_upto(3, 4)) {
    const RatPoly s = commutator(b(1, 2), b(1, 3), f) + commutator(b(1, 2), b(2, 3), f) + commutator(b(1, 3), b(2, 3), f);
    CHECK(s.is_zero());
  }
  // A single commutator is not zero in general.
  bool nonzero = false;
  for (const RatPoly& f : monomials_upto(3, 4)) nonzero = nonzero || !commutator(b(1, 2), b(1, 3), f).is_zero();
  CHECK(nonzero);
  // Quantum version for R_ij = 1 + h b_ij and R_13 = s_1 R_23 s_1 = s_2 R_12 s_2.
  auto R = [](int i, int j) {
    return [i, j](const RatPoly& g) { return g + KH::h() * apply_b(i, j, g); };
  };
  for (const RatPoly& f : monomials_upto(3, 4)) {
    CHECK(R(1, 2)(R(1, 3)(R(2, 3)(f))) == R(2, 3)(R(1, 3)(R(1, 2)(f))));
    CHECK(swap_vars(1, 2, R(2, 3)(swap_vars(1, 2, f))) == R(1, 3)(f));
    CHECK(swap_vars(2, 3, R(1, 2)(swap_vars(2, 3, f))) == R(1, 3)(f));
    CHECK(swap_vars(1, 2, apply_shat(1, f)) == R(1, 2)(f));
  }
}

TEST_CASE("degenerate affine Hecke action") {
  const KH h = KH::h();
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) CHECK(apply_shat(i, one(n)) == one(n));
    for (const RatPoly& f : monomials_upto(n, 6)) {
      for (int i = 1; i < n; ++i) {
        const RatPoly s = apply_shat(i, f);
        CHECK(mul_x(i + 1, s) - apply_shat(i, mul_x(i, f)) == h * f);
        CHECK(apply_shat(i, mul_x(i + 1, f)) - mul_x(i, s) == h * f);
        CHECK(apply_shat(i, s) == f);
        for (int j = 1; j <= n; ++j) {
          if (j == i || j == i + 1) continue;
          CHECK(mul_x(j, s) == apply_shat(i, mul_x(j, f)));
        }
        for (int j = i + 2; j < n; ++j) CHECK(apply_shat(i, apply_shat(j, f)) == apply_shat(j, apply_shat(i, f)));
      }
    }
  }
  for (const RatPoly& f : monomials_upto(3, 4)) {
    CHECK(apply_shat(1, apply_shat(2, apply_shat(1, f))) == apply_shat(2, apply_shat(1, apply_shat(2, f))));
  }
  for (const RatPoly& f : monomials_upto(4, 3)) {
    CHECK(apply_shat(2, apply_shat(3, apply_shat(2, f))) == apply_shat(3, apply_shat(2, apply_shat(3, f))));
  }
  // The induced action is the unique one fixing 1: build shat_1 on monomials from the relations alone.
  const int n = 2;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      // shat(x_1^a x_2^b) by x_2 shat(g) = shat(x_1 g) + h g and shat(x_2 g) = x_1 shat(g) + h g.
      RatPoly g = one(n);
      RatPoly sg = one(n);
      for (int s = 0; s < a; ++s) {
        sg = mul_x(2, sg) - h * g;
        g = mul_x(1, g);
      }
      for (int s = 0; s < b; ++s) {
        sg = mul_x(1, sg) + h * g;
        g = mul_x(2, g);
      }
      CHECK(sg == apply_shat(1, g));
    }
  }
}

TEST_CASE("second-order operator from sum of squares") {
  const int n2 = 2;
  const RatPoly e2 = x(n2, 1) * x(n2, 2);
  CHECK(power_sum_D(2, e2) == m2_rat(e2, Rational(2)));
  CHECK(power_sum_D(2, one(3)).is_zero());
  // x1^2 + x2^2: D_1^2 = 2 + 2k on it, so the k-part of the sum is 4k against first-order part 2.
  const RatPoly p2 = x(n2, 1) * x(n2, 1) + x(n2, 2) * x(n2, 2);
  CHECK(power_sum_D(2, p2) == RatPoly(n2, KH(4) + KH::k() * 4));
  CHECK(m2_rat(p2, Rational(1)) == RatPoly(n2, KH(4) + KH::k() * 2));
  for (int n = 2; n <= 4; ++n) {
    const Normalization r = resolve_normalization(n, 6);
    REQUIRE(r.coefficient.has_value());
    CHECK(*r.coefficient == 2);
    CHECK(r.matches_plus_two);
    CHECK_FALSE(r.matches_minus_one);
    CHECK(r.inputs == static_cast<int>(symmetric_basis_upto(n, 6).size()));
  }
  for (int n = 2; n <= 4; ++n) {
    for (const RatPoly& f : symmetric_basis_upto(n, 6)) {
      const RatPoly g = power_sum_D(2, f);
      CHECK(is_symmetric(g));
      CHECK(is_symmetric(power_sum_D(3, f)));
    }
  }
  // The sum of squares commutes with every permutation on all inputs.
  for (const RatPoly& f : monomials_upto(3, 4)) {
    for (int i = 1; i < 3; ++i) CHECK(swap_vars(i, i + 1, power_sum_D(2, swap_vars(i, i + 1, f))) == power_sum_D(2, f));
  }
  // Higher members of the family commute on symmetric inputs.
  for (const RatPoly& f : symmetric_basis_upto(3, 5)) {
    CHECK(power_sum_D(2, power_sum_D(3, f)) == power_sum_D(3, power_sum_D(2, f)));
  }
}

TEST_CASE("symmetric basis") {
  CHECK(monomial_symmetric(3, {1}) == x(3, 1) + x(3, 2) + x(3, 3));
  CHECK(monomial_symmetric(2, {1, 1}) == x(2, 1) * x(2, 2));
  // Partitions of d into at most n parts, summed over d <= 6: n = 3 gives 1+1+2+3+4+5+7.
  CHECK(symmetric_basis_upto(3, 6).size() == 23);
  CHECK(monomials_upto(4, 6).size() == 210);
  CHECK_THROWS_AS(apply_shat(2, one(2)), std::out_of_range);
  CHECK_THROWS_AS(apply_b(1, 1, one(2)), std::invalid_argument);
}
