#include "maclab/shiftop.hpp"

#include <map>
#include <stdexcept>

namespace maclab {

namespace {

int equal_k(const RootSystem& rs) {
  if (!rs.k().is_equal() && !rs.simply_laced()) throw std::invalid_argument("shift operators need equal parameters");
  return rs.k().k_long;
}

Scalar q_int(const RootSystem& rs, long n) { return Scalar::u_power(static_cast<int>(rs.q_denominator() * n)); }

// (alpha^vee, lambda + (k+1) rho) for each positive root.
std::vector<int> shifted_pairings(const RootSystem& rs, const Exponent& lambda, int k) {
  const Exponent e = lambda + (k + 1) * rs.rho_exponent();
  std::vector<int> out;
  for (int a = 0; a < rs.num_positive_roots(); ++a) out.push_back(rs.doubled_coroot_pairing(e, a) / 2);
  return out;
}

}  // namespace

Scalar YExpansion::evaluate(const RootSystem& rs, const Exponent& nu) const {
  Scalar s;
  for (const auto& [mu, c] : terms) s += c * Scalar::u_power(rs.u_pairing(mu, nu));
  return s;
}

YExpansion phi_vee_expansion(const RootSystem& rs, int s) {
  const int k = equal_k(rs);
  const int n = rs.num_positive_roots();
  if (n > 20) throw std::length_error("too many positive roots for the subset expansion");
  const Scalar first = q_int(rs, static_cast<long>(s) * k), second = -q_int(rs, -static_cast<long>(s) * k);
  std::map<Coweight, Scalar> acc;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Coweight twice;
    Scalar c(1);
    for (int a = 0; a < n; ++a) {
      if (mask & (1UL << a)) {
        twice += rs.coroot(a);
        c *= first;
      } else {
        twice -= rs.coroot(a);
        c *= second;
      }
    }
    Coweight mu;
    for (int i = 0; i < rs.rank(); ++i) {
      if (twice[static_cast<std::size_t>(i)] % 2 != 0) throw std::logic_error("subset exponent outside P^vee");
      mu[static_cast<std::size_t>(i)] = twice[static_cast<std::size_t>(i)] / 2;
    }
    acc[mu] += c;
  }
  YExpansion e;
  for (auto& [mu, c] : acc) {
    if (!c.is_zero()) e.terms.emplace_back(mu, std::move(c));
  }
  return e;
}

Scalar c_k(const RootSystem& rs, const Exponent& lambda) {
  const int k = equal_k(rs);
  Scalar p(1);
  for (int a : shifted_pairings(rs, lambda, k)) p *= q_int(rs, a - k) - q_int(rs, k - a);
  return p;
}

Scalar chat_k(const RootSystem& rs, const Exponent& lambda) {
  const int k = equal_k(rs);
  Scalar p(1);
  for (int a : shifted_pairings(rs, lambda, k)) p *= q_int(rs, a + k) - q_int(rs, -a - k);
  return p;
}

Scalar norm_step(const RootSystem& rs, const Exponent& lambda) {
  const int k = equal_k(rs);
  Scalar p(1);
  for (int a : shifted_pairings(rs, lambda, k)) {
    p *= (Scalar(1) - q_int(rs, 2L * a + 2L * k)) / (Scalar(1) - q_int(rs, 2L * a - 2L * k));
  }
  return p;
}

Scalar norm_by_ladder(const RootSystem& rs, const Exponent& lambda) {
  const int k = equal_k(rs);
  if (k < 1) throw std::invalid_argument("the ladder starts at k = 1");
  if (k == 1) return Scalar(1);
  const RootSystem lower = rs.with_k(KParams::equal(k - 1));
  return norm_step(lower, lambda) * norm_by_ladder(lower, lambda + rs.rho_exponent());
}

ShiftContext::ShiftContext(const RootSystem& rs)
    : k_(equal_k(rs)),
      lower_(rs),
      upper_(rs.with_k(KParams::equal(k_ + 1))),
      x_cal_(phi(rs, -1)),
      y_cal_(phi_vee_expansion(rs, -1)),
      y_hat_(phi_vee_expansion(rs, 1)) {}

LaurentPoly ShiftContext::apply(const YExpansion& e, const LaurentPoly& f) const {
  PolyBuilder b;
  for (const auto& [mu, c] : e.terms) b.add(lower_.daha().Y(mu, f), c);
  return b.build();
}

LaurentPoly ShiftContext::G(const LaurentPoly& f) const { return exact_div(apply(y_cal_, f), x_cal_); }

LaurentPoly ShiftContext::G_hat(const LaurentPoly& f) const { return apply(y_hat_, x_cal_ * f); }

NormRecursion verify_norm_recursion(const ShiftContext& s, const Exponent& lambda) {
  const RootSystem& rs = s.lower().root_system();
  const Exponent up = lambda + rs.rho_exponent();
  const LaurentPoly p_upper = s.upper().gram(lambda).to_poly(rs);
  const LaurentPoly p_lower = s.lower().gram(up).to_poly(rs);
  NormRecursion r;
  r.mprime_lhs = s.upper().inner_cherednik(p_upper, p_upper);
  const Scalar sign(rs.num_positive_roots() % 2 ? -1L : 1L);
  r.mprime_rhs = sign * d_k_sum(s.upper().root_system()) / d_k_sum(rs) * chat_k(rs, lambda) / c_k(rs, lambda) *
                 s.lower().inner_cherednik(p_lower, p_lower);
  r.m_lhs = s.upper().inner_k(p_upper, p_upper);
  r.m_rhs = norm_step(rs, lambda) * s.lower().inner_k(p_lower, p_lower);
  r.holds = r.mprime_lhs == r.mprime_rhs && r.m_lhs == r.m_rhs;
  return r;
}

BridgeCheck verify_antisymmetrizer_bridge(const ShiftContext& s, const LaurentPoly& f) {
  const LaurentPoly diff = s.apply(s.Y_cal(), f) - s.apply(s.Y_hat(), f);
  BridgeCheck r;
  r.classical = s.lower().daha().antisymmetrize(diff);
  r.quantum = s.lower().daha().q_antisymmetrize(diff);
  r.holds = r.classical.is_zero() && r.quantum.is_zero();
  return r;
}

}  // namespace maclab
