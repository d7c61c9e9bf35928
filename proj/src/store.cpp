#include "maclab/store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace maclab {

nlohmann::json exponent_json(const RootSystem& rs, const Exponent& e) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < rs.rank(); ++i) j.push_back(e[static_cast<std::size_t>(i)]);
  return j;
}

Exponent exponent_from_json(const RootSystem& rs, const nlohmann::json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != rs.rank()) throw std::invalid_argument("exponent has the wrong length");
  Exponent e;
  for (int i = 0; i < rs.rank(); ++i) e[static_cast<std::size_t>(i)] = j.at(static_cast<std::size_t>(i)).get<int>();
  return e;
}

nlohmann::json poly_json(const RootSystem& rs, const MacdonaldPoly& p) {
  nlohmann::json j;
  j["format_version"] = kTableFormatVersion;
  j["type"] = rs.label();
  j["rank"] = rs.rank();
  j["k"] = {{"long", p.k.k_long}, {"short", p.k.k_short}};
  j["q"] = "u^" + std::to_string(rs.q_denominator());
  j["lambda"] = exponent_json(rs, p.lambda);
  j["coefficients"] = nlohmann::json::array();
  for (const auto& [mu, c] : p.coeffs) j["coefficients"].push_back({{"mu", exponent_json(rs, mu)}, {"c", c.to_string()}});
  return j;
}

MacdonaldPoly poly_from_json(const RootSystem& rs, const nlohmann::json& j) {
  try {
    if (j.at("format_version").get<int>() != kTableFormatVersion) throw std::invalid_argument("format version mismatch");
    if (j.at("type").get<std::string>() != rs.label() || j.at("rank").get<int>() != rs.rank()) {
      throw std::invalid_argument("root system mismatch");
    }
    MacdonaldPoly p;
    p.k = KParams{j.at("k").at("long").get<int>(), j.at("k").at("short").get<int>()};
    if (!(p.k == rs.k())) throw std::invalid_argument("parameter mismatch");
    p.lambda = exponent_from_json(rs, j.at("lambda"));
    for (const auto& t : j.at("coefficients")) {
      p.coeffs.emplace_back(exponent_from_json(rs, t.at("mu")), Scalar::parse(t.at("c").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table record: ") + e.what());
  }
}

bool spot_check(const MacdonaldContext& ctx, const MacdonaldPoly& p) {
  const RootSystem& rs = ctx.root_system();
  if (!rs.is_dominant(p.lambda) || p.coeffs.empty()) return false;
  if (p.coeffs.back().first != p.lambda || !p.coeffs.back().second.is_one()) return false;
  for (const auto& [mu, c] : p.coeffs) {
    if (c.is_zero() || !rs.is_dominant(mu) || !rs.dominance_leq(mu, p.lambda)) return false;
  }
  const LaurentPoly f = p.to_poly(rs);
  for (const auto& nu : rs.dominant_weights_below(p.lambda)) {
    if (nu == p.lambda) continue;
    if (!ctx.inner_k(f, orbit_sum(rs, nu)).is_zero()) return false;
  }
  if (rs.k().k_long >= 1 && rs.k().k_short >= 1) return ctx.inner_k(f, f) == norm_formula_rhs(rs, p.lambda);
  return true;
}

PolyCache::PolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path PolyCache::path_for(const RootSystem& rs, const Exponent& lambda) const {
  std::ostringstream name;
  name << rs.label() << "_k" << rs.k().k_long << "-" << rs.k().k_short << "_l";
  for (int i = 0; i < rs.rank(); ++i) name << (i ? "," : "") << lambda[static_cast<std::size_t>(i)];
  name << ".json";
  return dir_ / name.str();
}

std::optional<MacdonaldPoly> PolyCache::load(const MacdonaldContext& ctx, const Exponent& lambda) const {
  const RootSystem& rs = ctx.root_system();
  std::ifstream in(path_for(rs, lambda));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    MacdonaldPoly p = poly_from_json(rs, j);
    if (p.lambda != lambda || !spot_check(ctx, p)) return std::nullopt;
    return p;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void PolyCache::store(const RootSystem& rs, const MacdonaldPoly& p) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(rs, p.lambda);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp" << std::hash<std::thread::id>{}(std::this_thread::get_id());
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << poly_json(rs, p).dump(1) << "\n";
  }
  std::filesystem::rename(tmp, target);
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("MACLAB_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace maclab
