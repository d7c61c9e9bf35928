#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "maclab/macpoly.hpp"

namespace maclab {

inline constexpr int kTableFormatVersion = 1;

/// Doubled coordinates as an integer array of length rank.
nlohmann::json exponent_json(const RootSystem& rs, const Exponent& e);
Exponent exponent_from_json(const RootSystem& rs, const nlohmann::json& j);

/// {format_version, type, rank, k: {long, short}, q, lambda, coefficients: [{mu, c}]}; scalars as text in u.
nlohmann::json poly_json(const RootSystem& rs, const MacdonaldPoly& p);
/// Throws std::invalid_argument when the record does not describe a polynomial for rs.
MacdonaldPoly poly_from_json(const RootSystem& rs, const nlohmann::json& j);

/// Unitriangular shape, orthogonality to every lower orbit sum and, when every k_alpha >= 1, the norm formula.
bool spot_check(const MacdonaldContext& ctx, const MacdonaldPoly& p);

/// Advisory on-disk table of computed polynomials keyed by (type, rank, k, lambda).
class PolyCache {
 public:
  explicit PolyCache(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const RootSystem& rs, const Exponent& lambda) const;
  /// The stored polynomial when the file exists, parses, has the current version and passes spot_check.
  std::optional<MacdonaldPoly> load(const MacdonaldContext& ctx, const Exponent& lambda) const;
  /// Writes through a temporary file and a rename.
  void store(const RootSystem& rs, const MacdonaldPoly& p) const;

 private:
  std::filesystem::path dir_;
};

/// Cache directory from the flag, else MACLAB_CACHE_DIR, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

}  // namespace maclab
