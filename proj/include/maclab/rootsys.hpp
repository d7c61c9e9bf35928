#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "maclab/scalar.hpp"

namespace maclab {

inline constexpr int kMaxRank = 8;

/// Integer vector of fixed capacity; unused trailing slots stay zero.
template <class Tag>
struct LatticeVector {
  std::array<std::int32_t, kMaxRank> v{};

  std::int32_t& operator[](std::size_t i) { return v[i]; }
  std::int32_t operator[](std::size_t i) const { return v[i]; }
  auto operator<=>(const LatticeVector&) const = default;
  bool is_zero() const {
    for (auto x : v) {
      if (x != 0) return false;
    }
    return true;
  }
  LatticeVector& operator+=(const LatticeVector& o) {
    for (int i = 0; i < kMaxRank; ++i) v[i] += o.v[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    for (int i = 0; i < kMaxRank; ++i) v[i] -= o.v[i];
    return *this;
  }
  LatticeVector& operator*=(std::int32_t c) {
    for (auto& x : v) x *= c;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int32_t c, LatticeVector a) { return a *= c; }
  LatticeVector operator-() const {
    LatticeVector r = *this;
    for (auto& x : r.v) x = -x;
    return r;
  }
};

template <class Tag>
struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector<Tag>& a) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : a.v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

struct ExponentTag {};
struct CoweightTag {};
/// A weight of P/2 as doubled fundamental-weight coordinates: e_j = 2 (mu, alpha_j^vee).
using Exponent = LatticeVector<ExponentTag>;
/// An element of P^vee in fundamental-coweight coordinates: c_j = (lambda, alpha_j).
using Coweight = LatticeVector<CoweightTag>;
using ExponentHash = LatticeVectorHash<ExponentTag>;
using CoweightHash = LatticeVectorHash<CoweightTag>;

enum class Lattice { P, Q, CoweightP, CorootQ, HalfP, Ambient };

/// Vector of V in the simple-root basis.
struct Weight {
  std::vector<Rational> coords;
  Lattice lattice = Lattice::Ambient;

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(const Rational& c, const Weight& a);
};

struct CartanType {
  char family = 'A';
  int rank = 1;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
  /// Parses labels such as "A2" or "g2".
  static CartanType parse(std::string_view label);
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Nonnegative integer parameters k_alpha by root length. Simply-laced types use k_long.
struct KParams {
  int k_long = 1;
  int k_short = 1;

  static KParams equal(int k) { return {k, k}; }
  bool is_equal() const { return k_long == k_short; }
  friend bool operator==(const KParams&, const KParams&) = default;
};

/// The two strict orders used for triangularity.
enum class Order {
  /// lambda^+ < mu^+, or lambda^+ = mu^+ and lambda < mu (used on P).
  Weight,
  /// lambda^+ < mu^+, or lambda^+ = mu^+ and lambda > mu (used on P^vee).
  Coweight,
};

class RootSystem;

/// Finite Weyl group enumerated by breadth-first closure; elements are indices.
class WeylGroup {
 public:
  static constexpr std::size_t kMaxOrder = 100000;

  std::size_t order() const { return length_.size(); }
  int identity() const { return 0; }
  int simple(int i) const { return left_[static_cast<std::size_t>(i)][0]; }
  int length(int w) const { return length_[static_cast<std::size_t>(w)]; }
  int sign(int w) const { return (length(w) & 1) ? -1 : 1; }
  /// Shortest word: w = s_{word[0]} s_{word[1]} ... (0-based simple indices).
  const std::vector<int>& word(int w) const { return word_[static_cast<std::size_t>(w)]; }
  int left(int i, int w) const { return left_[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)]; }
  int right(int w, int i) const { return right_[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)]; }
  int multiply(int a, int b) const;
  int inverse(int w) const { return inverse_[static_cast<std::size_t>(w)]; }
  int longest() const { return longest_; }
  int from_word(const std::vector<int>& word) const;
  /// Index of the reflection s_alpha for a root index.
  int reflection(int root) const { return reflection_[static_cast<std::size_t>(root)]; }

  Exponent act(int w, const Exponent& e) const;
  Coweight act(int w, const Coweight& c) const;
  int act_root(int w, int root) const {
    return root_perm_[static_cast<std::size_t>(w) * num_roots_ + static_cast<std::size_t>(root)];
  }
  /// Integer matrix of w on fundamental-weight coordinates (row-major n x n).
  const std::vector<int>& omega_matrix(int w) const { return omega_[static_cast<std::size_t>(w)]; }
  /// Rational matrix of w on simple-root coordinates (row-major n x n, columns are images).
  std::vector<Rational> root_matrix(int w) const;

 private:
  friend class RootSystem;
  int n_ = 0;
  std::size_t num_roots_ = 0;
  std::vector<std::vector<int>> omega_;
  std::vector<std::vector<int>> coweight_;
  std::vector<std::vector<int>> word_;
  std::vector<int> length_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> left_;
  std::vector<std::vector<int>> right_;
  std::vector<int> root_perm_;
  std::vector<int> reflection_;
  int longest_ = 0;
  std::vector<std::vector<int>> simple_images_;
};

/// Immutable tables of a reduced irreducible root system plus parameters k.
class RootSystem {
 public:
  RootSystem(CartanType type, KParams k = {}, int rank_cap = 4);
  static RootSystem build(std::string_view label, KParams k = {}, int rank_cap = 4);
  RootSystem with_k(KParams k) const;

  const CartanType& type() const { return t_->type; }
  std::string label() const { return t_->type.label(); }
  int rank() const { return t_->n; }
  const KParams& k() const { return k_; }
  bool simply_laced() const { return t_->simply_laced; }

  int cartan(int i, int j) const { return t_->cartan[idx(i, j)]; }
  const Rational& form(int i, int j) const { return t_->form[idx(i, j)]; }
  long long cartan_determinant() const { return t_->det; }
  /// Smallest D with (P^vee, P) in (1/D)Z; q = u^D.
  int q_denominator() const { return t_->D; }

  // Roots are indices: [0, N) positive sorted by height, N + a is -(root a).
  int num_positive_roots() const { return t_->N; }
  int num_roots() const { return 2 * t_->N; }
  int negate_root(int a) const { return a < t_->N ? a + t_->N : a - t_->N; }
  bool is_positive_root(int a) const { return a < t_->N; }
  const std::vector<int>& root_simple(int a) const { return t_->roots[static_cast<std::size_t>(a)]; }
  /// Doubled fundamental-weight coordinates of the root: 2 alpha.
  const Exponent& root_exponent(int a) const { return t_->root_exp[static_cast<std::size_t>(a)]; }
  /// Doubled coordinates of alpha/2, i.e. the fundamental-weight coordinates of alpha.
  const Exponent& half_root_exponent(int a) const { return t_->half_root_exp[static_cast<std::size_t>(a)]; }
  /// alpha^vee in fundamental-coweight coordinates.
  const Coweight& coroot(int a) const { return t_->coroot_cw[static_cast<std::size_t>(a)]; }
  /// alpha^vee in simple-coroot coordinates.
  const std::vector<int>& coroot_simple(int a) const { return t_->coroot_simple[static_cast<std::size_t>(a)]; }
  bool is_long(int a) const { return t_->is_long[static_cast<std::size_t>(a)]; }
  int k_of(int a) const { return is_long(a) || simply_laced() ? k_.k_long : k_.k_short; }
  int root_height(int a) const;
  int simple_root(int i) const { return i; }
  int highest_root() const { return t_->theta; }
  int find_root(const Exponent& doubled) const;
  int sum_k() const;  // sum over R^+ of k_alpha

  // Weights of V.
  Weight simple_root_weight(int i) const;
  Weight simple_coroot_weight(int i) const;
  Weight fundamental_weight(int i) const;
  Weight fundamental_coweight(int i) const;
  std::vector<Weight> positive_roots() const;
  Weight theta() const;
  Weight rho() const;
  Weight rho_k() const;
  Rational pair(const Weight& a, const Weight& b) const;
  std::vector<Rational> omega_coords(const Weight& w) const;
  std::vector<Rational> coweight_coords(const Weight& w) const;
  Exponent to_exponent(const Weight& w) const;
  Coweight to_coweight(const Weight& w) const;
  Weight weight_of(const Exponent& e) const;
  Weight weight_of(const Coweight& c) const;
  /// Simple-root coordinates of the weight with doubled coordinates e.
  std::vector<Rational> simple_coords(const Exponent& e) const;
  /// Simple-coroot coordinates of a coweight.
  std::vector<Rational> coroot_coords(const Coweight& c) const;

  // Distinguished exponents and coweights.
  Exponent rho_exponent() const;     // doubled coordinates of rho
  Exponent rho_k_exponent() const;   // doubled coordinates of rho_k
  Coweight rho_coweight() const;     // rho^vee
  Coweight theta_coroot() const;     // theta^vee
  Coweight fundamental_coweight_vec(int i) const;
  Exponent fundamental_weight_exp(int i) const;

  // Pairings.
  /// u-exponent of q^{2(lambda, mu)} where e holds doubled coordinates of mu.
  int u_pairing(const Coweight& lambda, const Exponent& e) const;
  Rational pairing(const Coweight& lambda, const Exponent& e) const;
  /// (lambda, alpha) for a coweight and a root index.
  int coweight_root_pairing(const Coweight& lambda, int a) const;
  /// 2 (mu, alpha^vee) for the weight with doubled coordinates e.
  int doubled_coroot_pairing(const Exponent& e, int a) const;
  /// (lambda, mu) for two coweights.
  Rational coweight_pairing(const Coweight& a, const Coweight& b) const;
  /// u-exponent of q^r; throws when D r is not an integer.
  int u_exponent(const Rational& r) const;

  // Weyl group.
  const WeylGroup& weyl() const;
  long long weyl_order() const;
  const std::vector<int>& degrees() const { return t_->degrees; }
  /// 1-based indices r of the nonzero minuscule fundamental coweights b_r.
  const std::vector<int>& minuscule() const { return t_->minuscule; }

  // Dominance.
  bool is_dominant(const Exponent& e) const;
  bool is_dominant(const Coweight& c) const;
  Exponent dominant(const Exponent& e, int* w = nullptr) const;
  Coweight dominant(const Coweight& c, int* w = nullptr) const;
  std::vector<Exponent> orbit(const Exponent& e) const;
  std::vector<Coweight> orbit(const Coweight& c) const;
  /// mu <= lambda: lambda - mu in Q_+.
  bool dominance_leq(const Exponent& mu, const Exponent& lambda) const;
  bool dominance_leq(const Coweight& mu, const Coweight& lambda) const;
  bool prec(const Exponent& a, const Exponent& b, Order order = Order::Weight) const;
  bool prec(const Coweight& a, const Coweight& b, Order order = Order::Coweight) const;
  /// Dominant mu <= lambda, sorted by increasing height (a linear extension of <=).
  std::vector<Exponent> dominant_weights_below(const Exponent& lambda) const;
  /// Sum of fundamental-weight coordinates of a dominant weight.
  Rational weight_height(const Exponent& e) const;
  /// Exponent from fundamental-weight coordinates (integers).
  Exponent exponent_from_omega(const std::vector<int>& omega) const;
  std::string format_exponent(const Exponent& e) const;
  std::string format_coweight(const Coweight& c) const;

 private:
  struct Tables {
    CartanType type;
    int n = 0;
    int N = 0;
    bool simply_laced = true;
    std::vector<int> cartan;
    std::vector<Rational> form;
    std::vector<Rational> cinv;  // inverse of the Cartan matrix
    std::vector<int> K;          // D * (b_i, omega_j)
    std::vector<int> sqlen;      // (alpha_i, alpha_i)
    long long det = 1;
    int D = 1;
    std::vector<std::vector<int>> roots;
    std::vector<Exponent> root_exp;
    std::vector<Exponent> half_root_exp;
    std::vector<Coweight> coroot_cw;
    std::vector<std::vector<int>> coroot_simple;
    std::vector<bool> is_long;
    int theta = 0;
    std::vector<std::pair<Exponent, int>> root_index;  // sorted by exponent
    std::vector<int> degrees;
    std::vector<int> minuscule;
    mutable std::once_flag weyl_once;
    mutable std::unique_ptr<WeylGroup> weyl;
  };

  std::shared_ptr<const Tables> t_;
  KParams k_;

  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * t_->n + j); }
  static std::shared_ptr<Tables> make_tables(CartanType type, int rank_cap);
  void build_weyl() const;
};

}  // namespace maclab
