#pragma once

#include <cstddef>
#include <vector>

#include "maclab/laurent.hpp"
#include "maclab/rootsys.hpp"

namespace maclab {

/// alpha + level * delta; root is an index into the roots of a RootSystem.
struct AffineRoot {
  int root = 0;
  int level = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

bool is_positive(const RootSystem& rs, const AffineRoot& a);
/// alpha_0 = -theta + delta for i = 0, alpha_i otherwise.
AffineRoot simple_affine_root(const RootSystem& rs, int i);
AffineRoot negate(const RootSystem& rs, const AffineRoot& a);

/// tau(translation) * w with w an index into the finite Weyl group.
struct ExtAffineElt {
  Coweight translation;
  int finite = 0;
  friend bool operator==(const ExtAffineElt&, const ExtAffineElt&) = default;
  friend auto operator<=>(const ExtAffineElt&, const ExtAffineElt&) = default;
};

struct ExtAffineEltHash {
  std::size_t operator()(const ExtAffineElt& e) const noexcept {
    return CoweightHash{}(e.translation) * 31u + static_cast<std::size_t>(e.finite);
  }
};

ExtAffineElt translation(const Coweight& lambda);
ExtAffineElt finite_elt(int w);
/// s_i for i = 1..n (finite simple reflection i-1) and s_0 = tau(theta^vee) s_theta.
ExtAffineElt simple_reflection(const RootSystem& rs, int i);
/// pi_r for r = 0 (identity) or a minuscule index from rs.minuscule().
ExtAffineElt omega_elt(const RootSystem& rs, int r);
ExtAffineElt multiply(const RootSystem& rs, const ExtAffineElt& a, const ExtAffineElt& b);
ExtAffineElt inverse(const RootSystem& rs, const ExtAffineElt& a);

AffineRoot act(const RootSystem& rs, const ExtAffineElt& g, const AffineRoot& a);
/// Sum over R+ of |(lambda, w beta) + chi(w beta)| for g = tau(lambda) w.
int length(const RootSystem& rs, const ExtAffineElt& g);

/// g = pi_omega * s_{word[0]} s_{word[1]} ... with indices in 0..n.
struct ReducedWord {
  int omega = 0;
  std::vector<int> word;
};
/// Peels the smallest descent at each step.
ReducedWord reduced_word(const RootSystem& rs, const ExtAffineElt& g);
ExtAffineElt from_word(const RootSystem& rs, const ReducedWord& w);
/// alpha^(1) = alpha_{i_1}, alpha^(j) = s_{i_1} ... s_{i_{j-1}} alpha_{i_j}, where
/// i_1 is the rightmost letter; throws std::invalid_argument if the word is not reduced.
std::vector<AffineRoot> associated_roots(const RootSystem& rs, const std::vector<int>& word);
/// j with pi_r(alpha_i) = alpha_j, for i = 0..n.
std::vector<int> omega_permutation(const RootSystem& rs, int r);

/// tau(lambda) w X^e = q^{2(lambda, we)} X^{we}.
LaurentPoly act(const RootSystem& rs, const ExtAffineElt& g, const LaurentPoly& f);

}  // namespace maclab
