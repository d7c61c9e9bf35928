#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "maclab/cli.hpp"
#include "maclab/laurent.hpp"
#include "maclab/suites.hpp"

using namespace maclab;

namespace {

struct Run {
  std::string suite;
  SuiteOptions opt;
};

SuiteOptions select(std::vector<std::string> types, std::vector<KParams> ks, int maxheight = 2) {
  SuiteOptions o;
  o.types = std::move(types);
  o.ks = std::move(ks);
  o.maxheight = maxheight;
  return o;
}

std::vector<KParams> equal_ks(int lo, int hi) {
  std::vector<KParams> out;
  for (int k = lo; k <= hi; ++k) out.push_back(KParams::equal(k));
  return out;
}

struct Criterion {
  int number;
  std::string title;
  std::vector<Run> runs;
  // Extra requirement on the collected records; empty when none.
  std::function<std::string(const std::vector<CaseResult>&)> extra;
};

const CaseResult* find(const std::vector<CaseResult>& rs, const std::string& id) {
  for (const auto& r : rs) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({1,
               "norm formula",
               {{"norm", select({"A1", "A2", "B2"}, equal_ks(1, 3), 3)},
                {"norm", select({"A1"}, {KParams::equal(4)}, 3)},
                {"norm", select({"G2"}, {KParams::equal(1)}, 3)},
                {"norm", select({"B2"}, {KParams{1, 2}, KParams{2, 1}}, 3)}},
               {}});

  c.push_back({2,
               "constant-term identity",
               {{"ct", select({"A1"}, equal_ks(1, 4))},
                {"ct", select({"A2", "B2"}, equal_ks(1, 3))},
                {"ct", select({"G2"}, equal_ks(1, 2))}},
               [](const std::vector<CaseResult>& rs) -> std::string {
                 const CaseResult* r = find(rs, "ct/A1/k=1/binomial");
                 const std::string q = q_power(RootSystem::build("A1"), Rational(1)).to_string();
                 if (!r) return "missing ct/A1/k=1/binomial";
                 if (r->factor != q) return "A1 k=1 factor " + r->factor + " differs from q = " + q;
                 return "";
               }});

  c.push_back({3,
               "shift-operator ladder",
               {{"shift", select({"A1", "A2"}, equal_ks(1, 3), 3)}},
               [](const std::vector<CaseResult>& rs) -> std::string {
                 // Every equal-k norm case of criterion 1 for A1, A2 needs a ladder record.
                 for (const char* label : {"A1", "A2"}) {
                   for (int k = 1; k <= 3; ++k) {
                     const RootSystem rs2 = RootSystem::build(label, KParams::equal(k));
                     for (const auto& lam : dominant_upto(rs2, 3)) {
                       const std::string id = "shift/" + rs2.label() + "/" + k_label(rs2) + "/lambda=" +
                                              rs2.format_exponent(lam) + "/ladder";
                       if (!find(rs, id)) return "missing " + id;
                     }
                   }
                 }
                 return "";
               }});

  c.push_back({4,
               "DAHA relations",
               {{"daha-relations", select({"A1", "A2", "B2"}, {KParams::equal(1), KParams{2, 1}})}},
               {}});

  c.push_back({5,
               "eigen-structure and adjointness",
               {{"eigen", select({"A1", "A2", "B2"}, equal_ks(0, 2))},
                {"eigen", select({"B2"}, {KParams{2, 1}})},
                {"adjoint", select({"A1", "A2", "B2"}, equal_ks(0, 2))},
                {"adjoint", select({"B2"}, {KParams{1, 2}})}},
               {}});

  c.push_back({6,
               "cross-method oracle",
               {{"methods", select({"A1", "A2", "B2"}, equal_ks(0, 3), 3)},
                {"methods", select({"A1"}, {KParams::equal(4)}, 3)},
                {"methods", select({"G2"}, equal_ks(0, 1), 3)},
                {"methods", select({"B2"}, {KParams{1, 2}, KParams{2, 1}}, 3)}},
               {}});

  c.push_back({7, "antisymmetrizers", {{"antisym", select({"A1", "A2"}, equal_ks(0, 2))}}, {}});

  c.push_back({8, "minuscule bridge", {{"minuscule", select({"A1", "A2", "A3", "B2", "C3"}, equal_ks(0, 2))}}, {}});

  SuiteOptions dunkl;
  dunkl.nvars = 4;
  dunkl.degree = 6;
  c.push_back({9,
               "Dunkl operators",
               {{"dunkl", dunkl}},
               [](const std::vector<CaseResult>& rs) -> std::string {
                 const CaseResult* r = find(rs, "dunkl/n=4/sum-squares");
                 if (!r) return "missing dunkl/n=4/sum-squares";
                 if (r->note.find("+2k display matches") == std::string::npos) return "normalization not resolved";
                 return "";
               }});
  return c;
}

}  // namespace

int main() {
  const int jobs = flag_or_env(std::nullopt, "MACLAB_JOBS", static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  bool ok = true;
  for (const Criterion& c : criteria()) {
    std::vector<CaseResult> all;
    std::string problem;
    try {
      for (const Run& r : c.runs) {
        auto rs = run_cases(build_suite(r.suite, r.opt), jobs);
        all.insert(all.end(), rs.begin(), rs.end());
      }
      if (all.empty()) problem = "no cases";
      if (problem.empty() && c.extra) problem = c.extra(all);
    } catch (const std::exception& e) {
      problem = std::string("error: ") + e.what();
    }
    std::size_t failed = 0;
    for (const auto& r : all) failed += r.pass ? 0 : 1;
    const bool pass = problem.empty() && failed == 0;
    ok = ok && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << all.size()
              << " cases, " << failed << " failed)";
    if (!problem.empty()) std::cout << " " << problem;
    std::cout << "\n";
    for (const auto& r : all) {
      if (!r.pass) std::cout << "  FAIL " << r.id << " lhs " << r.lhs << " rhs " << r.rhs << " " << r.note << "\n";
    }
    std::cout.flush();
  }
  return ok ? 0 : 1;
}
