#include "maclab/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace maclab {

std::vector<CaseResult> run_cases(const std::vector<CaseTask>& tasks, int jobs) {
  std::vector<CaseResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      CaseResult r;
      try {
        r = tasks[i].run();
      } catch (const std::exception& e) {
        r = CaseResult{};
        r.pass = false;
        r.note = std::string("error: ") + e.what();
      }
      r.suite = tasks[i].suite;
      r.id = tasks[i].id;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(r);
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < n; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(results.begin(), results.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  return results;
}

bool all_pass(const std::vector<CaseResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CaseResult& r) { return r.pass; });
}

std::string render_text(const std::vector<CaseResult>& results, bool timing) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    os << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (!r.q.empty()) os << "  [q = " << r.q << "]";
    if (timing) os << "  (" << r.seconds << " s)";
    os << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
    if (!r.factor.empty()) os << "  factor: " << r.factor << "\n";
    if (!r.note.empty()) os << "  note: " << r.note << "\n";
  }
  os << results.size() << " cases, " << results.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

nlohmann::json to_json(const CaseResult& r, bool timing) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["id"] = r.id;
  j["inputs"] = r.inputs;
  if (!r.q.empty()) j["q"] = r.q;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  if (!r.factor.empty()) j["factor"] = r.factor;
  if (!r.note.empty()) j["note"] = r.note;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

nlohmann::json report_json(const std::vector<CaseResult>& results, bool timing) {
  nlohmann::json j;
  j["format_version"] = kReportFormatVersion;
  j["cases"] = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    j["cases"].push_back(to_json(r, timing));
    if (!r.pass) ++failed;
  }
  j["summary"] = {{"cases", results.size()}, {"passed", results.size() - failed}, {"failed", failed}};
  return j;
}

}  // namespace maclab
