// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. An optional argument names a JSON report file.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "mdyn/error.hpp"
#include "mdyn/verify.hpp"

using namespace mdyn;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  double limit_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "Lehmer polynomial is a Salem fixed point", {"lehmer"}, 5},
    {2, "example families reach their proved orbit sizes", {"families"}, 300},
    {3, "theorem-st grid: orbit size c+2 and predictor agrees", {"thm1", "prop4", "rootloc"}, 600},
    {4, "root localization clauses on the theorem-st grid", {"rootloc"}, 600},
    {5, "quartic unit census: sizes 1, 2 or certified infinite", {"thm2"}, 600},
    {6, "Zhang quartic square relations", {"zhang"}, 60},
    {7, "degree-6 unit with orbit size 5", {"deg6"}, 60},
    {8, "x^5-x-1 alternating certificate and growth", {"thm4"}, 120},
    {9, "degree-12 units with orbit size S'+2 > S", {"deg12"}, 600},
    {10, "property suites on random irreducible polynomials", {"properties"}, 600},
};

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opt;
  nlohmann::json report = nlohmann::json::array();
  std::map<std::string, SuiteReport> done;
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    bool ok = true;
    double seconds = 0;
    long checks = 0;
    nlohmann::json first_failure;
    nlohmann::json suites = nlohmann::json::array();
    for (const std::string& s : c.suites) {
      // Criterion 4 reuses the localization run made for criterion 3.
      auto it = done.find(s);
      if (it == done.end()) {
        SuiteReport r;
        try {
          r = run_suite(s, opt);
        } catch (const std::exception& e) {
          r.suite = s;
          r.check(false, {{"exception", e.what()}});
        }
        it = done.emplace(s, std::move(r)).first;
        seconds += it->second.seconds;
      } else if (c.suites.size() == 1) {
        seconds += it->second.seconds;
      }
      const SuiteReport& r = it->second;
      ok = ok && r.passed;
      checks += r.checks;
      if (!r.passed && first_failure.is_null()) first_failure = r.failures.empty() ? nlohmann::json(s) : r.failures[0];
      suites.push_back(to_json(r));
    }
    bool in_time = seconds < c.limit_seconds;
    bool pass = ok && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d: %s  %s (%.1f s of %.0f s, %ld checks)\n", c.id, pass ? "PASS" : "FAIL", c.title,
                seconds, c.limit_seconds, checks);
    if (!ok) std::printf("    first failure: %s\n", first_failure.dump().substr(0, 400).c_str());
    if (!in_time) std::printf("    over the time limit\n");
    std::fflush(stdout);
    report.push_back({{"criterion", c.id}, {"pass", pass}, {"seconds", seconds}, {"suites", suites}});
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  if (argc > 1) {
    std::ofstream out(argv[1]);
    out << report.dump(2) << '\n';
  }
  return failed == 0 ? 0 : 1;
}
