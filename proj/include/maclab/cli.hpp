#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maclab/rootsys.hpp"

namespace maclab {

/// Selection error in command-line input; the driver exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Limits on the selections a command accepts.
struct Caps {
  int max_rank = 4;
  int max_k = 6;
  int jobs = 1;
};

/// Flag value when given, else the environment variable, else the fallback.
int flag_or_env(std::optional<int> flag, const char* env, int fallback);

/// "1..3", "1,2,4" or "2".
std::vector<int> parse_int_list(const std::string& text);
/// "A1,A2" or the family letters "A,B" combined with rank.
std::vector<std::string> parse_types(const std::string& text, std::optional<int> rank);
/// Parameter sets from --k, or from --klong/--kshort (a missing side copies the other).
std::vector<KParams> parse_ks(const std::string& k, std::optional<int> klong, std::optional<int> kshort);
/// Fundamental-weight coordinates "2" or "1,0" as doubled coordinates; throws UsageError unless dominant.
Exponent parse_weight(const RootSystem& rs, const std::string& text);

/// Rejects selections beyond the caps.
void check_caps(const std::vector<std::string>& types, const std::vector<KParams>& ks, const Caps& caps);

/// Command-line driver; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maclab
