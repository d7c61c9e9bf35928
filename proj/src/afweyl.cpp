#include "maclab/afweyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace maclab {

bool is_positive(const RootSystem& rs, const AffineRoot& a) {
  return a.level > 0 || (a.level == 0 && rs.is_positive_root(a.root));
}

AffineRoot simple_affine_root(const RootSystem& rs, int i) {
  if (i == 0) return {rs.negate_root(rs.highest_root()), 1};
  return {rs.simple_root(i - 1), 0};
}

AffineRoot negate(const RootSystem& rs, const AffineRoot& a) { return {rs.negate_root(a.root), -a.level}; }

ExtAffineElt translation(const Coweight& lambda) { return {lambda, 0}; }

ExtAffineElt finite_elt(int w) { return {Coweight{}, w}; }

ExtAffineElt simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) throw std::out_of_range("affine simple index out of range");
  const WeylGroup& W = rs.weyl();
  if (i == 0) return {rs.theta_coroot(), W.reflection(rs.highest_root())};
  return finite_elt(W.simple(i - 1));
}

ExtAffineElt multiply(const RootSystem& rs, const ExtAffineElt& a, const ExtAffineElt& b) {
  const WeylGroup& W = rs.weyl();
  return {a.translation + W.act(a.finite, b.translation), W.multiply(a.finite, b.finite)};
}

ExtAffineElt inverse(const RootSystem& rs, const ExtAffineElt& a) {
  const WeylGroup& W = rs.weyl();
  const int wi = W.inverse(a.finite);
  return {-W.act(wi, a.translation), wi};
}

AffineRoot act(const RootSystem& rs, const ExtAffineElt& g, const AffineRoot& a) {
  const int r = rs.weyl().act_root(g.finite, a.root);
  return {r, a.level - rs.coweight_root_pairing(g.translation, r)};
}

int length(const RootSystem& rs, const ExtAffineElt& g) {
  const WeylGroup& W = rs.weyl();
  int total = 0;
  for (int b = 0; b < rs.num_positive_roots(); ++b) {
    const int wb = W.act_root(g.finite, b);
    const int v = rs.coweight_root_pairing(g.translation, wb) + (rs.is_positive_root(wb) ? 0 : 1);
    total += v < 0 ? -v : v;
  }
  return total;
}

namespace {

int omega_index(const RootSystem& rs, const ExtAffineElt& g) {
  if (g.translation.is_zero()) {
    if (g.finite != 0) throw std::logic_error("length-zero element with nontrivial finite part");
    return 0;
  }
  for (int r : rs.minuscule()) {
    if (rs.fundamental_coweight_vec(r - 1) == g.translation) return r;
  }
  throw std::logic_error("length-zero element is not in Omega");
}

// Peels descents; returns the remainder and the peeled indices in peel order.
ExtAffineElt peel(const RootSystem& rs, ExtAffineElt g, std::vector<int>& peeled) {
  for (;;) {
    int found = -1;
    for (int i = 0; i <= rs.rank() && found < 0; ++i) {
      if (!is_positive(rs, act(rs, g, simple_affine_root(rs, i)))) found = i;
    }
    if (found < 0) return g;
    peeled.push_back(found);
    g = multiply(rs, g, simple_reflection(rs, found));
  }
}

}  // namespace

ReducedWord reduced_word(const RootSystem& rs, const ExtAffineElt& g) {
  std::vector<int> peeled;
  const ExtAffineElt rest = peel(rs, g, peeled);
  if (length(rs, rest) != 0) throw std::logic_error("no descent for an element of positive length");
  std::reverse(peeled.begin(), peeled.end());
  return {omega_index(rs, rest), std::move(peeled)};
}

ExtAffineElt omega_elt(const RootSystem& rs, int r) {
  if (r == 0) return ExtAffineElt{};
  const auto& mins = rs.minuscule();
  if (std::find(mins.begin(), mins.end(), r) == mins.end()) throw std::invalid_argument("not a minuscule index");
  std::vector<int> peeled;
  return peel(rs, translation(rs.fundamental_coweight_vec(r - 1)), peeled);
}

ExtAffineElt from_word(const RootSystem& rs, const ReducedWord& w) {
  ExtAffineElt g = omega_elt(rs, w.omega);
  for (int i : w.word) g = multiply(rs, g, simple_reflection(rs, i));
  return g;
}

std::vector<AffineRoot> associated_roots(const RootSystem& rs, const std::vector<int>& word) {
  std::vector<AffineRoot> out;
  out.reserve(word.size());
  ExtAffineElt prefix;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const AffineRoot a = act(rs, prefix, simple_affine_root(rs, *it));
    if (!is_positive(rs, a)) throw std::invalid_argument("word is not reduced");
    out.push_back(a);
    prefix = multiply(rs, prefix, simple_reflection(rs, *it));
  }
  return out;
}

std::vector<int> omega_permutation(const RootSystem& rs, int r) {
  const ExtAffineElt p = omega_elt(rs, r);
  std::vector<int> perm;
  for (int i = 0; i <= rs.rank(); ++i) {
    const AffineRoot img = act(rs, p, simple_affine_root(rs, i));
    int j = 0;
    while (j <= rs.rank() && !(simple_affine_root(rs, j) == img)) ++j;
    if (j > rs.rank()) throw std::logic_error("Omega element does not permute simple roots");
    perm.push_back(j);
  }
  return perm;
}

LaurentPoly act(const RootSystem& rs, const ExtAffineElt& g, const LaurentPoly& f) {
  const WeylGroup& W = rs.weyl();
  std::vector<LaurentPoly::Term> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    const Exponent we = W.act(g.finite, e);
    const int s = g.translation.is_zero() ? 0 : rs.u_pairing(g.translation, we);
    out.emplace_back(we, s == 0 ? c : c * Scalar::u_power(s));
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace maclab
