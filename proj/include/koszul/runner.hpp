#pragma once

#include "koszul/generator.hpp"
#include "koszul/report.hpp"
#include "koszul/tor.hpp"

namespace koszul {

enum class CheckLevel {
  search,  // dd_zero, prop7, chi, theorem, conjecture10, n=1/n=2 facts
  full,    // search checks plus remark8 (seeded transforms), disc11, lift
};

struct RunOptions {
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  int jobs = 0;              // 0 = library default
  unsigned bound_max = 12;
  unsigned remark8_trials = 100;
  bool corrupt_dd = false;   // test hook: breaks one differential entry
};

struct SearchParams {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::uint32_t field = 101;
  GeneratorParams gen;
};

// Exit codes: 0 clean, 1 theorem-level verification failure or conjecture
// counterexample finding, 2 input errors.
struct RunOutcome {
  int exit_code = 0;
  Json report;              // empty on hard failures
  std::string console;      // human summary / diagnostics
};

// Evaluation of one instance; used by the commands below and by tests.
struct InstanceEvaluation {
  Json j;
  bool theorem_tight = false;
  std::vector<std::string> conjecture_violations;
};

InstanceEvaluation evaluate_analyze(const InstanceSpec& spec, unsigned bound_max);
InstanceEvaluation evaluate_koszul(const InstanceSpec& spec, CheckLevel level,
                                   unsigned bound_max, unsigned remark8_trials = 100,
                                   bool corrupt_dd = false);
InstanceEvaluation evaluate_tor(const InstanceSpec& spec, unsigned bound_max);

RunOutcome run_analyze(const std::string& path, const RunOptions& opt);
RunOutcome run_koszul(const std::string& path, const RunOptions& opt);
RunOutcome run_tor(const std::string& path, const RunOptions& opt);
RunOutcome run_search(const SearchParams& params, const RunOptions& opt);

// Serializes and writes report files when paths are set; returns the JSON text.
std::string emit_reports(const Json& report, const RunOptions& opt);

}  // namespace koszul
