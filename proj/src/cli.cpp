#include "maclab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "maclab/suites.hpp"

namespace maclab {

namespace {

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Options shared by every verb.
struct Common {
  std::string type = "A1";
  std::string k = "1";
  std::string out = "text";
  std::string cache_dir;
  std::string method = "gram";
  int rank = 0, klong = 0, kshort = 0, jobs = 0, max_rank = 0, max_k = 0;
  CLI::Option* rank_opt = nullptr;
  CLI::Option* klong_opt = nullptr;
  CLI::Option* kshort_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
  CLI::Option* max_rank_opt = nullptr;
  CLI::Option* max_k_opt = nullptr;
  bool timing = false;

  void attach(CLI::App* app, bool with_k = true) {
    app->add_option("--type", type, "root systems, e.g. A1,A2,B2 or a family letter with --rank")->capture_default_str();
    rank_opt = app->add_option("--rank", rank, "rank for family letters in --type");
    if (with_k) {
      app->add_option("--k", k, "equal parameters as a list or range, e.g. 2 or 1..3")->capture_default_str();
      klong_opt = app->add_option("--klong", klong, "k on long roots");
      kshort_opt = app->add_option("--kshort", kshort, "k on short roots");
      app->add_option("--method", method, "construction of P_lambda")
          ->check(CLI::IsMember({"gram", "eigen", "both"}))
          ->capture_default_str();
      app->add_option("--cache-dir", cache_dir, "table cache directory (env MACLAB_CACHE_DIR)");
    }
    app->add_option("--out", out, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    jobs_opt = app->add_option("--jobs", jobs, "worker threads (env MACLAB_JOBS)")->check(CLI::PositiveNumber);
    max_rank_opt = app->add_option("--max-rank", max_rank, "largest accepted rank (env MACLAB_MAX_RANK)");
    max_k_opt = app->add_option("--max-k", max_k, "largest accepted k (env MACLAB_MAX_K)");
    app->add_flag("--timing", timing, "add wall times to the report");
  }

  static std::optional<int> maybe(const CLI::Option* o, int v) {
    return o && o->count() ? std::optional<int>(v) : std::nullopt;
  }

  Caps caps() const {
    Caps c;
    c.max_rank = flag_or_env(maybe(max_rank_opt, max_rank), "MACLAB_MAX_RANK", c.max_rank);
    c.max_k = flag_or_env(maybe(max_k_opt, max_k), "MACLAB_MAX_K", c.max_k);
    const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    c.jobs = flag_or_env(maybe(jobs_opt, jobs), "MACLAB_JOBS", hw);
    if (c.jobs < 1) throw UsageError("the job count must be positive");
    return c;
  }

  std::vector<std::string> types() const { return parse_types(type, maybe(rank_opt, rank)); }
  std::vector<KParams> ks() const {
    if (k_given() && (maybe(klong_opt, klong) || maybe(kshort_opt, kshort))) {
      throw UsageError("--k cannot be combined with --klong/--kshort");
    }
    return parse_ks(k, maybe(klong_opt, klong), maybe(kshort_opt, kshort));
  }
  bool k_given() const { return k_opt && k_opt->count(); }
  CLI::Option* k_opt = nullptr;

  std::shared_ptr<const PolyCache> cache() const {
    if (auto dir = resolve_cache_dir(cache_dir)) return std::make_shared<PolyCache>(*dir);
    return nullptr;
  }
};

int emit(const std::vector<CaseResult>& results, const Common& c, std::ostream& out) {
  if (c.out == "json") {
    out << report_json(results, c.timing).dump(2) << "\n";
  } else {
    out << render_text(results, c.timing);
  }
  return all_pass(results) ? 0 : 1;
}

int run_suite(const std::string& suite, SuiteOptions opt, const Common& c, std::ostream& out) {
  const Caps caps = c.caps();
  check_caps(opt.types, opt.ks, caps);
  opt.cache = c.cache();
  opt.method = parse_method(c.method);
  return emit(run_cases(build_suite(suite, opt), caps.jobs), c, out);
}

int cmd_poly(const Common& c, const std::string& weight, std::ostream& out) {
  const auto types = c.types();
  const auto ks = c.ks();
  if (types.size() != 1 || ks.size() != 1) throw UsageError("poly needs exactly one type and one parameter set");
  check_caps(types, ks, c.caps());
  RootSystem rs = RootSystem::build(types[0]);
  rs = rs.with_k(canonical_k(rs, ks[0]));
  const Exponent lam = parse_weight(rs, weight);
  const Method method = parse_method(c.method);
  MacdonaldContext ctx(rs);
  const auto cache = c.cache();
  bool cached = false;
  const MacdonaldPoly p = compute_poly(ctx, lam, method, cache.get(), &cached);
  const bool has_norm = rs.k().k_long >= 1 && rs.k().k_short >= 1;
  std::string lhs, rhs, verdict = "n/a";
  if (has_norm) {
    const LaurentPoly f = p.to_poly(rs);
    const Scalar l = ctx.inner_k(f, f), r = norm_formula_rhs(rs, lam);
    lhs = l.to_string();
    rhs = r.to_string();
    verdict = l == r ? "PASS" : "FAIL";
  }
  if (c.out == "json") {
    nlohmann::json j = poly_json(rs, p);
    j["method"] = method_name(method);
    j["from_cache"] = cached;
    j["expansion"] = expansion_text(rs, p);
    nlohmann::json norm = {{"verdict", verdict}};
    if (has_norm) {
      norm["lhs"] = lhs;
      norm["rhs"] = rhs;
    } else {
      norm["note"] = "the norm formula needs every k_alpha >= 1";
    }
    j["norm"] = norm;
    out << j.dump(2) << "\n";
  } else {
    out << "type " << rs.label() << "  " << k_label(rs) << "  q = u^" << rs.q_denominator() << "\n";
    out << "lambda " << rs.format_exponent(lam) << "  method " << method_name(method) << (cached ? "  (cache)" : "")
        << "\n";
    out << "P = " << expansion_text(rs, p) << "\n";
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
      out << "  m" << rs.format_exponent(it->first) << ": " << it->second.to_string() << "\n";
    }
    if (has_norm) {
      out << "norm lhs: " << lhs << "\nnorm rhs: " << rhs << "\n";
    }
    out << "norm verdict: " << verdict << "\n";
  }
  return verdict == "FAIL" ? 1 : 0;
}

int cmd_info(const Common& c, bool type_given, std::ostream& out) {
  const Caps caps = c.caps();
  if (!type_given) {
    nlohmann::json j = {{"suites", suite_names()},
                        {"caps", {{"max_rank", caps.max_rank}, {"max_k", caps.max_k}, {"jobs", caps.jobs}}},
                        {"report_format_version", kReportFormatVersion},
                        {"table_format_version", kTableFormatVersion}};
    if (auto dir = resolve_cache_dir("")) j["cache_dir"] = dir->string();
    if (c.out == "json") {
      out << j.dump(2) << "\n";
    } else {
      out << "suites:";
      for (const auto& s : suite_names()) out << " " << s;
      out << "\nmax rank " << caps.max_rank << ", max k " << caps.max_k << ", jobs " << caps.jobs << "\n";
      if (j.contains("cache_dir")) out << "cache " << j["cache_dir"].get<std::string>() << "\n";
    }
    return 0;
  }
  const auto types = c.types();
  check_caps(types, {}, caps);
  nlohmann::json all = nlohmann::json::array();
  for (const auto& label : types) {
    const RootSystem rs = RootSystem::build(label);
    nlohmann::json j;
    j["type"] = rs.label();
    j["rank"] = rs.rank();
    j["q"] = "u^" + std::to_string(rs.q_denominator());
    j["simply_laced"] = rs.simply_laced();
    j["positive_roots"] = rs.num_positive_roots();
    j["weyl_order"] = rs.weyl_order();
    j["degrees"] = rs.degrees();
    j["minuscule"] = rs.minuscule();
    j["rho"] = rs.format_exponent(rs.rho_exponent());
    j["highest_root"] = rs.format_exponent(rs.root_exponent(rs.highest_root()));
    std::vector<std::vector<int>> cartan;
    for (int i = 0; i < rs.rank(); ++i) {
      cartan.emplace_back();
      for (int k = 0; k < rs.rank(); ++k) cartan.back().push_back(rs.cartan(i, k));
    }
    j["cartan"] = cartan;
    all.push_back(j);
  }
  if (c.out == "json") {
    out << all.dump(2) << "\n";
  } else {
    for (const auto& j : all) {
      out << j["type"].get<std::string>() << ": rank " << j["rank"] << ", q = " << j["q"].get<std::string>() << ", |R+| "
          << j["positive_roots"] << ", |W| " << j["weyl_order"] << ", degrees " << j["degrees"].dump() << ", minuscule "
          << j["minuscule"].dump() << ", rho " << j["rho"].get<std::string>() << ", theta "
          << j["highest_root"].get<std::string>() << "\n";
    }
  }
  return 0;
}

}  // namespace

int flag_or_env(std::optional<int> flag, const char* env, int fallback) {
  if (flag) return *flag;
  if (const char* v = std::getenv(env); v && *v) {
    try {
      return parse_int(v);
    } catch (const UsageError&) {
      throw UsageError(std::string(env) + " is not an integer: '" + v + "'");
    }
  }
  return fallback;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots)), hi = parse_int(item.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

std::vector<std::string> parse_types(const std::string& text, std::optional<int> rank) {
  std::vector<std::string> out;
  for (std::string item : split(text, ',')) {
    if (item.size() == 1) {
      if (!rank) throw UsageError("type family '" + item + "' needs --rank");
      item += std::to_string(*rank);
    } else if (rank && item.substr(1) != std::to_string(*rank)) {
      throw UsageError("--rank " + std::to_string(*rank) + " conflicts with type " + item);
    }
    try {
      const CartanType t = CartanType::parse(item);
      item = t.label();
      // Larger ranks are rejected later by the rank cap.
      if (t.rank <= 4) RootSystem::build(item);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("no root system selected");
  return out;
}

std::vector<KParams> parse_ks(const std::string& k, std::optional<int> klong, std::optional<int> kshort) {
  std::vector<KParams> out;
  if (klong || kshort) {
    const int l = klong ? *klong : *kshort, s = kshort ? *kshort : *klong;
    out.push_back(KParams{l, s});
  } else {
    for (int v : parse_int_list(k)) out.push_back(KParams::equal(v));
  }
  for (const auto& p : out) {
    if (p.k_long < 0 || p.k_short < 0) throw UsageError("k must be a non-negative integer");
  }
  return out;
}

Exponent parse_weight(const RootSystem& rs, const std::string& text) {
  std::vector<int> omega;
  for (const auto& item : split(text, ',')) omega.push_back(parse_int(item));
  if (static_cast<int>(omega.size()) != rs.rank()) {
    throw UsageError("--weight needs " + std::to_string(rs.rank()) + " fundamental-weight coordinates for " + rs.label());
  }
  for (int x : omega) {
    if (x < 0) throw UsageError("--weight must be dominant");
  }
  return rs.exponent_from_omega(omega);
}

void check_caps(const std::vector<std::string>& types, const std::vector<KParams>& ks, const Caps& caps) {
  for (const auto& t : types) {
    if (CartanType::parse(t).rank > caps.max_rank) {
      throw UsageError(t + " exceeds the rank cap " + std::to_string(caps.max_rank));
    }
  }
  for (const auto& k : ks) {
    if (std::max(k.k_long, k.k_short) > caps.max_k) throw UsageError("k exceeds the cap " + std::to_string(caps.max_k));
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Macdonald polynomials and the polynomial representation of the double affine Hecke algebra"};
  app.require_subcommand(1);

  Common poly_c, verify_c, ct_c, dunkl_c, info_c;
  std::string weight;
  auto* poly = app.add_subcommand("poly", "compute P_lambda in the orbit-sum basis");
  poly_c.attach(poly);
  poly_c.k_opt = poly->get_option("--k");
  poly->add_option("--weight", weight, "fundamental-weight coordinates of lambda, e.g. 2 or 1,0")->required();

  std::string suite;
  SuiteOptions sopt;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite id")->required()->check(CLI::IsMember(suite_names()));
  verify_c.attach(verify);
  verify_c.k_opt = verify->get_option("--k");
  verify->add_option("--maxheight", sopt.maxheight, "largest height of the weights lambda")->capture_default_str();
  verify->add_option("--degree", sopt.degree, "monomial bound (daha-relations) or degree (dunkl)");
  verify->add_option("--nvars", sopt.nvars, "largest number of variables (dunkl)")->capture_default_str();

  auto* ct = app.add_subcommand("ct", "constant-term identities");
  ct_c.attach(ct);
  ct_c.k_opt = ct->get_option("--k");

  SuiteOptions dopt;
  auto* dunkl = app.add_subcommand("dunkl", "rational Dunkl operators and the degenerate affine Hecke algebra");
  dunkl_c.attach(dunkl, false);
  dunkl->add_option("--nvars", dopt.nvars, "largest number of variables")->capture_default_str();
  dunkl->add_option("--degree", dopt.degree, "largest polynomial degree")->capture_default_str();

  auto* info = app.add_subcommand("info", "root system data, suites and limits");
  info_c.attach(info, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*poly) return cmd_poly(poly_c, weight, out);
    if (*verify) {
      sopt.types = verify_c.types();
      sopt.ks = verify_c.ks();
      return run_suite(suite, sopt, verify_c, out);
    }
    if (*ct) {
      SuiteOptions opt;
      opt.types = ct_c.types();
      opt.ks = ct_c.ks();
      return run_suite("ct", opt, ct_c, out);
    }
    if (*dunkl) {
      dopt.types.clear();
      dopt.ks.clear();
      if (dunkl_c.caps().max_rank + 1 < dopt.nvars) throw UsageError("--nvars exceeds the rank cap plus one");
      return run_suite("dunkl", dopt, dunkl_c, out);
    }
    if (*info) return cmd_info(info_c, info->get_option("--type")->count() > 0, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace maclab
