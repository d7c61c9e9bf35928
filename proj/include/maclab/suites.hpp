#pragma once

#include <memory>
#include <string>
#include <vector>

#include "maclab/macpoly.hpp"
#include "maclab/report.hpp"
#include "maclab/rootsys.hpp"
#include "maclab/store.hpp"

namespace maclab {

enum class Method { Gram, Eigen, Both };

/// Parses "gram", "eigen" or "both".
Method parse_method(const std::string& s);
std::string method_name(Method m);

/// One verification run: suite id plus the selection it ranges over.
struct SuiteOptions {
  std::vector<std::string> types{"A1"};
  std::vector<KParams> ks{KParams::equal(1)};
  /// Largest sum of fundamental-weight coordinates of the weights lambda.
  int maxheight = 2;
  /// daha-relations: bound on |fundamental-weight coordinate| of test monomials; dunkl: polynomial degree.
  /// A negative value selects the suite default (3 and 6).
  int degree = -1;
  /// dunkl: the largest number of variables; every n from 2 up to it is checked.
  int nvars = 4;
  Method method = Method::Gram;
  std::shared_ptr<const PolyCache> cache;
};

/// norm, ct, daha-relations, shift, dunkl, adjoint, antisym, eigen, methods, minuscule.
const std::vector<std::string>& suite_names();

/// Cases of one suite; throws std::invalid_argument for an unknown suite or an
/// unsupported selection (for example unequal k in the shift suite).
std::vector<CaseTask> build_suite(const std::string& suite, const SuiteOptions& opt);

/// Dominant weights whose fundamental-weight coordinates sum to at most height.
std::vector<Exponent> dominant_upto(const RootSystem& rs, int height);

/// Canonical parameters for the type: simply-laced systems carry one k.
KParams canonical_k(const RootSystem& rs, KParams k);
/// "k=2" for equal parameters, "k=(2,1)" for (k_long, k_short) otherwise.
std::string k_label(const RootSystem& rs);

/// sum c_mu m_mu as "m(2) + (c)*m(0)", top weight first.
std::string expansion_text(const RootSystem& rs, const MacdonaldPoly& p);

/// P_lambda by the chosen method; for Both the two results must agree (std::logic_error otherwise).
/// A cache is consulted first and filled afterwards; a valid cached table sets *from_cache.
MacdonaldPoly compute_poly(const MacdonaldContext& ctx, const Exponent& lambda, Method method, const PolyCache* cache,
                           bool* from_cache = nullptr);

}  // namespace maclab
