#ifndef CHARP_RUNNER_HPP
#define CHARP_RUNNER_HPP

#include <json.hpp>

#include "charp/budget.hpp"
#include "charp/session.hpp"

namespace charp {

struct RunConfig {
  unsigned emax = 4;
  unsigned window = 2;
  std::string order = "grevlex";  // or "lex"
  std::uint64_t seed = 0;
  unsigned probe_degree = 4;
  bool parallel = false;
  ResourceBudget budget;
};

struct CheckResult {
  int index = 0;
  std::string scenario;  // empty outside paper-example runs
  std::string name;
  std::vector<std::string> inputs;
  std::string status;  // IN/OUT/UNKNOWN/PASS/FAIL/RESOURCE_LIMIT/ERROR
  nlohmann::json detail;
  std::optional<std::string> expected;
  bool match = true;
  bool certificate_verified = true;
  double time_ms = 0.0;
};

// Exit-code contract: 0 all-expected, 1 mismatch, 2 parse/config error
// (raised before a report exists), 3 resource limit.
struct Report {
  RunConfig config;
  std::vector<CheckResult> checks;

  int exit_code() const;
  nlohmann::json to_json() const;  // includes the determinism hash
  // FNV-1a over the canonical dump with timing fields stripped
  std::string determinism_hash() const;
  std::string summary_text() const;
};

// Binds names and types (Name/TypeError with positions; nothing executes on
// error), then runs every directive in order. ResourceLimit surfaces as a
// per-check status, not a process abort.
Report run_session(const Session& session, const RunConfig& config);
Report run_session_text(const std::string& text, const RunConfig& config);

// The built-in scenarios, runnable end to end; expectations are inline, so
// drift shows up as mismatches in the report.
std::vector<std::string> paper_example_names();
const std::string& paper_example_source(const std::string& name);
Report paper_examples(const RunConfig& config);

}  // namespace charp

#endif
