#include "maclab/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace maclab {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::vector<Rational> invert(const std::vector<Rational>& m, int n, Rational* det) {
  std::vector<Rational> a = m;
  std::vector<Rational> inv(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i * n + i)] = 1;
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[static_cast<std::size_t>(p * n + c)] == 0) ++p;
    if (p == n) throw std::logic_error("singular matrix");
    if (p != c) {
      d = -d;
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<std::size_t>(p * n + j)], a[static_cast<std::size_t>(c * n + j)]);
        std::swap(inv[static_cast<std::size_t>(p * n + j)], inv[static_cast<std::size_t>(c * n + j)]);
      }
    }
    const Rational piv = a[static_cast<std::size_t>(c * n + c)];
    d *= piv;
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(c * n + j)] /= piv;
      inv[static_cast<std::size_t>(c * n + j)] /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const Rational f = a[static_cast<std::size_t>(r * n + c)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(r * n + j)] -= f * a[static_cast<std::size_t>(c * n + j)];
        inv[static_cast<std::size_t>(r * n + j)] -= f * inv[static_cast<std::size_t>(c * n + j)];
      }
    }
  }
  if (det) *det = d;
  return inv;
}

// Squared lengths of simple roots and the off-diagonal form entries, Bourbaki numbering.
void simple_data(const CartanType& t, std::vector<int>& sq, std::vector<std::vector<int>>& off) {
  const int n = t.rank;
  sq.assign(static_cast<std::size_t>(n), 2);
  off.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto link = [&](int i, int j, int v) {
    off[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    off[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) sq[static_cast<std::size_t>(i)] = 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      sq[static_cast<std::size_t>(n - 1)] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      sq = {4, 4, 2, 2};
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      sq = {2, 6};
      link(0, 1, -3);
      break;
    default:
      throw std::invalid_argument("unknown Cartan family");
  }
}

std::vector<int> degree_table(const CartanType& t) {
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
    default:
      break;
  }
  return d;
}

void validate(const CartanType& t, int rank_cap) {
  if (rank_cap < 1 || rank_cap > kMaxRank) throw std::invalid_argument("rank cap must lie in 1..8");
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) throw std::invalid_argument("unsupported root system type " + t.label());
  if (n > rank_cap) {
    throw std::invalid_argument("rank " + std::to_string(n) + " exceeds rank cap " +
                                std::to_string(rank_cap));
  }
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

// ---------------------------------------------------------------- Weight

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  r.lattice = a.lattice == b.lattice ? a.lattice : Lattice::Ambient;
  return r;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

Weight operator*(const Rational& c, const Weight& a) {
  Weight r = a;
  for (auto& x : r.coords) x *= c;
  r.lattice = Lattice::Ambient;
  return r;
}

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("bad type label");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  try {
    t.rank = std::stoi(std::string(label.substr(1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad type label " + std::string(label));
  }
  return t;
}

// ---------------------------------------------------------------- WeylGroup

int WeylGroup::multiply(int a, int b) const {
  const auto& w = word(a);
  for (std::size_t k = w.size(); k-- > 0;) b = left(w[k], b);
  return b;
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int x = identity();
  for (std::size_t k = word.size(); k-- > 0;) x = left(word[k], x);
  return x;
}

Exponent WeylGroup::act(int w, const Exponent& e) const {
  const auto& m = omega_[static_cast<std::size_t>(w)];
  Exponent r;
  for (int i = 0; i < n_; ++i) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += m[static_cast<std::size_t>(i * n_ + j)] * e[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

Coweight WeylGroup::act(int w, const Coweight& c) const {
  const auto& m = coweight_[static_cast<std::size_t>(w)];
  Coweight r;
  for (int i = 0; i < n_; ++i) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += m[static_cast<std::size_t>(i * n_ + j)] * c[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

std::vector<Rational> WeylGroup::root_matrix(int w) const {
  std::vector<Rational> out(static_cast<std::size_t>(n_ * n_));
  for (int j = 0; j < n_; ++j) {
    const auto& img = simple_images_[static_cast<std::size_t>(act_root(w, j))];
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i * n_ + j)] = img[static_cast<std::size_t>(i)];
  }
  return out;
}

// ---------------------------------------------------------------- RootSystem

std::shared_ptr<RootSystem::Tables> RootSystem::make_tables(CartanType type, int rank_cap) {
  validate(type, rank_cap);
  auto t = std::make_shared<Tables>();
  t->type = type;
  const int n = type.rank;
  t->n = n;
  std::vector<int> sq;
  std::vector<std::vector<int>> off;
  simple_data(type, sq, off);
  t->sqlen = sq;
  t->simply_laced = std::all_of(sq.begin(), sq.end(), [](int s) { return s == 2; });
  t->form.resize(static_cast<std::size_t>(n * n));
  t->cartan.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int f = i == j ? sq[static_cast<std::size_t>(i)] : off[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      t->form[static_cast<std::size_t>(i * n + j)] = f;
      t->cartan[static_cast<std::size_t>(i * n + j)] = 2 * f / sq[static_cast<std::size_t>(j)];
    }
  }
  std::vector<Rational> cr(t->cartan.begin(), t->cartan.end());
  Rational det;
  t->cinv = invert(cr, n, &det);
  t->det = det.get_num().get_si();
  Integer D = 1;
  for (const auto& x : t->cinv) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den_mpz_t());
  t->D = static_cast<int>(D.get_si());
  t->K.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational v = t->cinv[static_cast<std::size_t>(j * n + i)] * t->D;
      t->K[static_cast<std::size_t>(i * n + j)] = static_cast<int>(v.get_num().get_si());
    }
  }

  // Roots: closure of the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    todo.push(e);
  }
  while (!todo.empty()) {
    auto b = todo.front();
    todo.pop();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += b[static_cast<std::size_t>(j)] * t->cartan[static_cast<std::size_t>(j * n + i)];
      if (p == 0) continue;
      auto c = b;
      c[static_cast<std::size_t>(i)] -= p;
      if (seen.insert(c).second) todo.push(c);
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& r : seen) {
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) pos.push_back(r);
  }
  if (pos.size() * 2 != seen.size()) throw std::logic_error("root closure is not symmetric");
  std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  t->N = static_cast<int>(pos.size());
  t->roots = pos;
  for (const auto& r : pos) {
    auto m = r;
    for (auto& x : m) x = -x;
    t->roots.push_back(m);
  }
  for (const auto& r : t->roots) {
    Exponent half;
    Rational len = 0;
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int i = 0; i < n; ++i) s += r[static_cast<std::size_t>(i)] * t->cartan[static_cast<std::size_t>(i * n + j)];
      half[static_cast<std::size_t>(j)] = s;
      for (int i = 0; i < n; ++i) {
        len += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)] * t->form[static_cast<std::size_t>(i * n + j)];
      }
    }
    t->half_root_exp.push_back(half);
    t->root_exp.push_back(2 * half);
    std::vector<int> cc(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      Rational c = Rational(r[static_cast<std::size_t>(j)] * sq[static_cast<std::size_t>(j)]) / len;
      if (c.get_den() != 1) throw std::logic_error("non-integral coroot");
      cc[static_cast<std::size_t>(j)] = static_cast<int>(c.get_num().get_si());
    }
    Coweight cw;
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int i = 0; i < n; ++i) s += cc[static_cast<std::size_t>(i)] * t->cartan[static_cast<std::size_t>(j * n + i)];
      cw[static_cast<std::size_t>(j)] = s;
    }
    t->coroot_simple.push_back(cc);
    t->coroot_cw.push_back(cw);
    t->is_long.push_back(!t->simply_laced && len > 2);
  }
  t->theta = t->N - 1;
  for (int a = 0; a < 2 * t->N; ++a) t->root_index.emplace_back(t->root_exp[static_cast<std::size_t>(a)], a);
  std::sort(t->root_index.begin(), t->root_index.end());
  t->degrees = degree_table(type);
  for (int r = 0; r < n; ++r) {
    bool minus = true;
    for (int a = 0; a < t->N; ++a) {
      if (t->roots[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)] > 1) minus = false;
    }
    if (minus) t->minuscule.push_back(r + 1);
  }
  return t;
}

RootSystem::RootSystem(CartanType type, KParams k, int rank_cap) : t_(make_tables(type, rank_cap)), k_(k) {
  if (k.k_long < 0 || k.k_short < 0) throw std::invalid_argument("k must be nonnegative");
  if (simply_laced()) k_.k_short = k_.k_long;
}

RootSystem RootSystem::build(std::string_view label, KParams k, int rank_cap) {
  return RootSystem(CartanType::parse(label), k, rank_cap);
}

RootSystem RootSystem::with_k(KParams k) const {
  RootSystem r = *this;
  if (k.k_long < 0 || k.k_short < 0) throw std::invalid_argument("k must be nonnegative");
  r.k_ = k;
  if (simply_laced()) r.k_.k_short = r.k_.k_long;
  return r;
}

int RootSystem::root_height(int a) const {
  const auto& r = root_simple(a);
  return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystem::find_root(const Exponent& doubled) const {
  const auto& ix = t_->root_index;
  auto it = std::lower_bound(ix.begin(), ix.end(), std::make_pair(doubled, -1));
  if (it == ix.end() || it->first != doubled) return -1;
  return it->second;
}

int RootSystem::sum_k() const {
  int s = 0;
  for (int a = 0; a < num_positive_roots(); ++a) s += k_of(a);
  return s;
}

Weight RootSystem::simple_root_weight(int i) const {
  Weight w{std::vector<Rational>(static_cast<std::size_t>(rank())), Lattice::Q};
  w.coords[static_cast<std::size_t>(i)] = 1;
  return w;
}

Weight RootSystem::simple_coroot_weight(int i) const {
  Weight w{std::vector<Rational>(static_cast<std::size_t>(rank())), Lattice::CorootQ};
  w.coords[static_cast<std::size_t>(i)] = frac(2, t_->sqlen[static_cast<std::size_t>(i)]);
  w.coords[static_cast<std::size_t>(i)].canonicalize();
  return w;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w{std::vector<Rational>(static_cast<std::size_t>(rank())), Lattice::P};
  for (int kk = 0; kk < rank(); ++kk) w.coords[static_cast<std::size_t>(kk)] = t_->cinv[idx(i, kk)];
  return w;
}

Weight RootSystem::fundamental_coweight(int i) const {
  Weight w{std::vector<Rational>(static_cast<std::size_t>(rank())), Lattice::CoweightP};
  for (int kk = 0; kk < rank(); ++kk) {
    w.coords[static_cast<std::size_t>(kk)] = frac(2, t_->sqlen[static_cast<std::size_t>(i)]) * t_->cinv[idx(i, kk)];
  }
  return w;
}

std::vector<Weight> RootSystem::positive_roots() const {
  std::vector<Weight> out;
  for (int a = 0; a < num_positive_roots(); ++a) {
    Weight w{std::vector<Rational>(static_cast<std::size_t>(rank())), Lattice::Q};
    for (int i = 0; i < rank(); ++i) w.coords[static_cast<std::size_t>(i)] = root_simple(a)[static_cast<std::size_t>(i)];
    out.push_back(w);
  }
  return out;
}

Weight RootSystem::theta() const { return positive_roots()[static_cast<std::size_t>(highest_root())]; }

Weight RootSystem::rho() const {
  Weight r{std::vector<Rational>(static_cast<std::size_t>(rank())), Lattice::P};
  for (const auto& a : positive_roots()) r = r + a;
  r = frac(1, 2) * r;
  r.lattice = Lattice::P;
  return r;
}

Weight RootSystem::rho_k() const {
  Weight r{std::vector<Rational>(static_cast<std::size_t>(rank())), Lattice::P};
  const auto roots = positive_roots();
  for (int a = 0; a < num_positive_roots(); ++a) r = r + Rational(k_of(a)) * roots[static_cast<std::size_t>(a)];
  r = frac(1, 2) * r;
  r.lattice = Lattice::HalfP;
  return r;
}

Rational RootSystem::pair(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) s += a.coords[static_cast<std::size_t>(i)] * b.coords[static_cast<std::size_t>(j)] * form(i, j);
  }
  return s;
}

std::vector<Rational> RootSystem::omega_coords(const Weight& w) const {
  std::vector<Rational> out(static_cast<std::size_t>(rank()));
  for (int j = 0; j < rank(); ++j) {
    for (int i = 0; i < rank(); ++i) out[static_cast<std::size_t>(j)] += w.coords[static_cast<std::size_t>(i)] * cartan(i, j);
  }
  return out;
}

std::vector<Rational> RootSystem::coweight_coords(const Weight& w) const {
  std::vector<Rational> out(static_cast<std::size_t>(rank()));
  for (int j = 0; j < rank(); ++j) {
    for (int i = 0; i < rank(); ++i) out[static_cast<std::size_t>(j)] += w.coords[static_cast<std::size_t>(i)] * form(i, j);
  }
  return out;
}

Exponent RootSystem::to_exponent(const Weight& w) const {
  Exponent e;
  const auto om = omega_coords(w);
  for (int j = 0; j < rank(); ++j) {
    Rational d = 2 * om[static_cast<std::size_t>(j)];
    if (d.get_den() != 1) throw std::invalid_argument("weight is not in P/2");
    e[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(d.get_num().get_si());
  }
  return e;
}

Coweight RootSystem::to_coweight(const Weight& w) const {
  Coweight c;
  const auto cw = coweight_coords(w);
  for (int j = 0; j < rank(); ++j) {
    if (cw[static_cast<std::size_t>(j)].get_den() != 1) throw std::invalid_argument("vector is not in P^vee");
    c[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(cw[static_cast<std::size_t>(j)].get_num().get_si());
  }
  return c;
}

std::vector<Rational> RootSystem::simple_coords(const Exponent& e) const {
  std::vector<Rational> out(static_cast<std::size_t>(rank()));
  for (int kk = 0; kk < rank(); ++kk) {
    for (int j = 0; j < rank(); ++j) out[static_cast<std::size_t>(kk)] += frac(e[static_cast<std::size_t>(j)], 2) * t_->cinv[idx(j, kk)];
  }
  return out;
}

Weight RootSystem::weight_of(const Exponent& e) const {
  Weight w{simple_coords(e), Lattice::HalfP};
  return w;
}

Weight RootSystem::weight_of(const Coweight& c) const {
  Weight w{std::vector<Rational>(static_cast<std::size_t>(rank())), Lattice::CoweightP};
  for (int i = 0; i < rank(); ++i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    const Weight b = fundamental_coweight(i);
    w = w + Rational(c[static_cast<std::size_t>(i)]) * b;
  }
  w.lattice = Lattice::CoweightP;
  return w;
}

std::vector<Rational> RootSystem::coroot_coords(const Coweight& c) const {
  std::vector<Rational> out(static_cast<std::size_t>(rank()));
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) out[static_cast<std::size_t>(i)] += t_->cinv[idx(i, j)] * c[static_cast<std::size_t>(j)];
  }
  return out;
}

Exponent RootSystem::rho_exponent() const {
  Exponent e;
  for (int i = 0; i < rank(); ++i) e[static_cast<std::size_t>(i)] = 2;
  return e;
}

Exponent RootSystem::rho_k_exponent() const {
  Exponent e;
  for (int a = 0; a < num_positive_roots(); ++a) e += k_of(a) * half_root_exponent(a);
  return e;
}

Coweight RootSystem::rho_coweight() const {
  Coweight c;
  for (int i = 0; i < rank(); ++i) c[static_cast<std::size_t>(i)] = 1;
  return c;
}

Coweight RootSystem::theta_coroot() const { return coroot(highest_root()); }

Coweight RootSystem::fundamental_coweight_vec(int i) const {
  Coweight c;
  c[static_cast<std::size_t>(i)] = 1;
  return c;
}

Exponent RootSystem::fundamental_weight_exp(int i) const {
  Exponent e;
  e[static_cast<std::size_t>(i)] = 2;
  return e;
}

int RootSystem::u_pairing(const Coweight& lambda, const Exponent& e) const {
  const int n = rank();
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (lambda[static_cast<std::size_t>(i)] == 0) continue;
    int r = 0;
    for (int j = 0; j < n; ++j) r += t_->K[idx(i, j)] * e[static_cast<std::size_t>(j)];
    s += lambda[static_cast<std::size_t>(i)] * r;
  }
  return s;
}

Rational RootSystem::pairing(const Coweight& lambda, const Exponent& e) const {
  Rational r(u_pairing(lambda, e), 2 * q_denominator());
  r.canonicalize();
  return r;
}

int RootSystem::coweight_root_pairing(const Coweight& lambda, int a) const {
  const auto& r = root_simple(a);
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += lambda[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(j)];
  return s;
}

int RootSystem::doubled_coroot_pairing(const Exponent& e, int a) const {
  const auto& cc = coroot_simple(a);
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += cc[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(j)];
  return s;
}

Rational RootSystem::coweight_pairing(const Coweight& a, const Coweight& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      s += frac(2 * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)], t_->sqlen[static_cast<std::size_t>(i)]) * t_->cinv[idx(i, j)];
    }
  }
  return s;
}

int RootSystem::u_exponent(const Rational& r) const {
  Rational v = r * q_denominator();
  if (v.get_den() != 1) throw std::domain_error("q-exponent " + r.get_str() + " is not in (1/D)Z");
  return static_cast<int>(v.get_num().get_si());
}

void RootSystem::build_weyl() const {
  std::call_once(t_->weyl_once, [this] {
    const int n = rank();
    auto g = std::make_unique<WeylGroup>();
    g->n_ = n;
    g->num_roots_ = static_cast<std::size_t>(num_roots());
    g->simple_images_ = t_->roots;
    std::unordered_map<std::vector<int>, int, VecHash> index;
    std::vector<int> id(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i * n + i)] = 1;
    g->omega_.push_back(id);
    g->coweight_.push_back(id);
    g->word_.emplace_back();
    g->length_.push_back(0);
    index[id] = 0;
    g->left_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t head = 0; head < g->omega_.size(); ++head) {
      for (int i = 0; i < n; ++i) {
        // s_i * w on omega coordinates: row_j -= cartan[i][j] * row_i.
        std::vector<int> m = g->omega_[head];
        for (int j = 0; j < n; ++j) {
          const int c = cartan(i, j);
          if (j == i || c == 0) continue;
          for (int kk = 0; kk < n; ++kk) m[static_cast<std::size_t>(j * n + kk)] -= c * g->omega_[head][static_cast<std::size_t>(i * n + kk)];
        }
        for (int kk = 0; kk < n; ++kk) m[static_cast<std::size_t>(i * n + kk)] = -g->omega_[head][static_cast<std::size_t>(i * n + kk)];
        auto it = index.find(m);
        int target;
        if (it == index.end()) {
          target = static_cast<int>(g->omega_.size());
          if (g->omega_.size() >= WeylGroup::kMaxOrder) {
            throw std::length_error("Weyl group of " + label() + " is too large to enumerate");
          }
          index.emplace(m, target);
          std::vector<int> cm = g->coweight_[head];
          for (int j = 0; j < n; ++j) {
            const int c = cartan(j, i);
            if (j == i || c == 0) continue;
            for (int kk = 0; kk < n; ++kk) cm[static_cast<std::size_t>(j * n + kk)] -= c * g->coweight_[head][static_cast<std::size_t>(i * n + kk)];
          }
          for (int kk = 0; kk < n; ++kk) cm[static_cast<std::size_t>(i * n + kk)] = -g->coweight_[head][static_cast<std::size_t>(i * n + kk)];
          g->omega_.push_back(std::move(m));
          g->coweight_.push_back(std::move(cm));
          std::vector<int> w = {i};
          w.insert(w.end(), g->word_[head].begin(), g->word_[head].end());
          g->word_.push_back(std::move(w));
          g->length_.push_back(g->length_[head] + 1);
        } else {
          target = it->second;
        }
        auto& row = g->left_[static_cast<std::size_t>(i)];
        if (row.size() <= head) row.resize(head + 1, -1);
        row[head] = target;
      }
    }
    const std::size_t order = g->omega_.size();
    for (auto& row : g->left_) row.resize(order, -1);
    g->inverse_.resize(order);
    g->right_.assign(static_cast<std::size_t>(n), std::vector<int>(order));
    for (std::size_t w = 0; w < order; ++w) {
      std::vector<int> rev(g->word_[w].rbegin(), g->word_[w].rend());
      g->inverse_[w] = g->from_word(rev);
    }
    for (std::size_t w = 0; w < order; ++w) {
      for (int i = 0; i < n; ++i) {
        // w s_i = (s_i w^{-1})^{-1}
        g->right_[static_cast<std::size_t>(i)][w] = g->inverse_[static_cast<std::size_t>(g->left(i, g->inverse_[w]))];
      }
    }
    g->longest_ = static_cast<int>(std::max_element(g->length_.begin(), g->length_.end()) - g->length_.begin());
    const int nr = num_roots();
    g->root_perm_.resize(order * static_cast<std::size_t>(nr));
    for (std::size_t w = 0; w < order; ++w) {
      for (int a = 0; a < nr; ++a) {
        const int img = find_root(g->act(static_cast<int>(w), root_exponent(a)));
        if (img < 0) throw std::logic_error("Weyl element does not permute the roots");
        g->root_perm_[w * static_cast<std::size_t>(nr) + static_cast<std::size_t>(a)] = img;
      }
    }
    g->reflection_.resize(static_cast<std::size_t>(nr));
    for (int a = 0; a < nr; ++a) {
      std::vector<int> m(static_cast<std::size_t>(n * n));
      const auto& h = half_root_exponent(a);
      const auto& cc = coroot_simple(a);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          m[static_cast<std::size_t>(i * n + j)] = (i == j ? 1 : 0) - h[static_cast<std::size_t>(i)] * cc[static_cast<std::size_t>(j)];
        }
      }
      g->reflection_[static_cast<std::size_t>(a)] = index.at(m);
    }
    t_->weyl = std::move(g);
  });
}

const WeylGroup& RootSystem::weyl() const {
  build_weyl();
  return *t_->weyl;
}

long long RootSystem::weyl_order() const {
  long long p = 1;
  for (int d : degrees()) p *= d;
  return p;
}

bool RootSystem::is_dominant(const Exponent& e) const {
  for (int i = 0; i < rank(); ++i) {
    if (e[static_cast<std::size_t>(i)] < 0) return false;
  }
  return true;
}

bool RootSystem::is_dominant(const Coweight& c) const {
  for (int i = 0; i < rank(); ++i) {
    if (c[static_cast<std::size_t>(i)] < 0) return false;
  }
  return true;
}

Exponent RootSystem::dominant(const Exponent& e, int* w) const {
  Exponent x = e;
  int g = 0;
  const WeylGroup* W = w ? &weyl() : nullptr;
  for (;;) {
    int i = 0;
    while (i < rank() && x[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == rank()) break;
    const int xi = x[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank(); ++j) x[static_cast<std::size_t>(j)] -= xi * cartan(i, j);
    if (W) g = W->left(i, g);
  }
  if (w) *w = g;
  return x;
}

Coweight RootSystem::dominant(const Coweight& c, int* w) const {
  Coweight x = c;
  int g = 0;
  const WeylGroup* W = w ? &weyl() : nullptr;
  for (;;) {
    int i = 0;
    while (i < rank() && x[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == rank()) break;
    const int xi = x[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank(); ++j) x[static_cast<std::size_t>(j)] -= xi * cartan(j, i);
    if (W) g = W->left(i, g);
  }
  if (w) *w = g;
  return x;
}

std::vector<Exponent> RootSystem::orbit(const Exponent& e) const {
  std::vector<Exponent> out{e};
  std::set<Exponent> seen{e};
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (int i = 0; i < rank(); ++i) {
      const int xi = out[h][static_cast<std::size_t>(i)];
      if (xi == 0) continue;
      Exponent y = out[h];
      for (int j = 0; j < rank(); ++j) y[static_cast<std::size_t>(j)] -= xi * cartan(i, j);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coweight> RootSystem::orbit(const Coweight& c) const {
  std::vector<Coweight> out{c};
  std::set<Coweight> seen{c};
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (int i = 0; i < rank(); ++i) {
      const int xi = out[h][static_cast<std::size_t>(i)];
      if (xi == 0) continue;
      Coweight y = out[h];
      for (int j = 0; j < rank(); ++j) y[static_cast<std::size_t>(j)] -= xi * cartan(j, i);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RootSystem::dominance_leq(const Exponent& mu, const Exponent& lambda) const {
  for (const auto& c : simple_coords(lambda - mu)) {
    if (c < 0 || c.get_den() != 1) return false;
  }
  return true;
}

bool RootSystem::dominance_leq(const Coweight& mu, const Coweight& lambda) const {
  for (const auto& c : coroot_coords(lambda - mu)) {
    if (c < 0 || c.get_den() != 1) return false;
  }
  return true;
}

bool RootSystem::prec(const Exponent& a, const Exponent& b, Order order) const {
  const Exponent ap = dominant(a);
  const Exponent bp = dominant(b);
  if (ap != bp) return dominance_leq(ap, bp);
  if (a == b) return false;
  return order == Order::Weight ? dominance_leq(a, b) : dominance_leq(b, a);
}

bool RootSystem::prec(const Coweight& a, const Coweight& b, Order order) const {
  const Coweight ap = dominant(a);
  const Coweight bp = dominant(b);
  if (ap != bp) return dominance_leq(ap, bp);
  if (a == b) return false;
  return order == Order::Weight ? dominance_leq(a, b) : dominance_leq(b, a);
}

std::vector<Exponent> RootSystem::dominant_weights_below(const Exponent& lambda) const {
  if (!is_dominant(lambda)) throw std::invalid_argument("dominant_weights_below needs a dominant weight");
  const auto s = simple_coords(lambda);
  const int n = rank();
  std::vector<int> bound(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), s[static_cast<std::size_t>(i)].get_num_mpz_t(), s[static_cast<std::size_t>(i)].get_den_mpz_t());
    bound[static_cast<std::size_t>(i)] = static_cast<int>(f.get_si());
  }
  std::vector<std::pair<std::pair<Rational, Exponent>, Exponent>> found;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (;;) {
    Exponent mu = lambda;
    for (int i = 0; i < n; ++i) {
      if (c[static_cast<std::size_t>(i)] != 0) mu -= c[static_cast<std::size_t>(i)] * root_exponent(i);
    }
    if (is_dominant(mu)) {
      Rational h = 0;
      for (const auto& x : simple_coords(mu)) h += x;
      found.push_back({{h, mu}, mu});
    }
    int i = 0;
    while (i < n) {
      if (++c[static_cast<std::size_t>(i)] <= bound[static_cast<std::size_t>(i)]) break;
      c[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Exponent> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

Rational RootSystem::weight_height(const Exponent& e) const {
  Rational h = 0;
  for (int i = 0; i < rank(); ++i) h += frac(e[static_cast<std::size_t>(i)], 2);
  h.canonicalize();
  return h;
}

Exponent RootSystem::exponent_from_omega(const std::vector<int>& omega) const {
  if (static_cast<int>(omega.size()) != rank()) throw std::invalid_argument("weight has wrong number of coordinates");
  Exponent e;
  for (int i = 0; i < rank(); ++i) e[static_cast<std::size_t>(i)] = 2 * omega[static_cast<std::size_t>(i)];
  return e;
}

std::string RootSystem::format_exponent(const Exponent& e) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ',';
    Rational r = frac(e[static_cast<std::size_t>(i)], 2);
    os << rational_text(r);
  }
  os << ')';
  return os.str();
}

std::string RootSystem::format_coweight(const Coweight& c) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ',';
    os << c[static_cast<std::size_t>(i)];
  }
  os << ')';
  return os.str();
}

}  // namespace maclab
