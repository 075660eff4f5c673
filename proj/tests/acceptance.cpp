// One PASS/FAIL line per acceptance criterion. With a scenario name or
// number, runs just that one. Exit 0 only when every selected criterion passes.

#include <future>
#include <iostream>

#include "exotic/scenarios.hpp"

int main(int argc, char** argv) {
  using namespace exotic;
  std::vector<const Scenario*> chosen;
  if (argc > 1) {
    const Scenario* s = find_scenario(argv[1]);
    if (!s) {
      std::cerr << "unknown scenario " << argv[1] << "\n";
      return 2;
    }
    chosen.push_back(s);
  } else {
    for (const auto& s : scenarios()) chosen.push_back(&s);
  }

  std::vector<std::future<ScenarioResult>> jobs;
  for (const Scenario* s : chosen) jobs.push_back(std::async(std::launch::async, [s] { return run_scenario(*s); }));

  bool all = true;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const ScenarioResult r = jobs[i].get();
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << chosen[i]->title << "\n";
    for (const auto& line : r.checks)
      if (!r.passed && line.rfind("FAIL", 0) == 0) std::cout << "       " << line << "\n";
    if (!r.passed && !chosen[i]->known_issue.empty()) std::cout << "       known issue: " << chosen[i]->known_issue << "\n";
  }
  return all ? 0 : 1;
}
