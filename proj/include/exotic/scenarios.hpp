#pragma once

// The acceptance suite as named, seeded scenarios. The CLI `repro` verb and
// the acceptance test binary both run these.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exotic {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct ScenarioResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> checks;  // one line per check, prefixed "ok" or "FAIL"
  double millis = 0;
  std::optional<double> limit_ms;
};

struct Scenario {
  int id;
  std::string name;
  std::string title;
  std::optional<double> limit_ms;
  // Non-empty when the statement itself is false; the scenario still runs
  // the literal check and reports FAIL.
  std::string known_issue;
  void (*body)(class Checks&, std::uint64_t seed);
};

class Checks {
 public:
  void expect(bool ok, const std::string& what);
  bool all() const noexcept { return failures_ == 0; }
  const std::vector<std::string>& lines() const noexcept { return lines_; }

 private:
  std::vector<std::string> lines_;
  std::size_t failures_ = 0;
};

const std::vector<Scenario>& scenarios();
// By name ("smith") or number ("10").
const Scenario* find_scenario(std::string_view key);
// Times the body; an escaping exception is a failed check.
ScenarioResult run_scenario(const Scenario& s, std::uint64_t seed = kDefaultSeed);

}  // namespace exotic
