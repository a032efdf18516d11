#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "koszul/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Koszul homology and complete-intersection-defect engine for Artinian local algebras over F_p"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  koszul::RunOptions opt;
  std::string json_path, csv_path;
  app.add_option("--json", json_path, "write the JSON report here")->capture_default_str();
  app.add_option("--csv", csv_path, "write the flattened CSV report here");
  app.add_option("--jobs", opt.jobs, "worker threads for search (0 = auto)");
  app.add_option("--bound-max", opt.bound_max, "largest degree bound tried during certification")
      ->capture_default_str();

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "algebra-level report for an instance file");
  analyze->add_option("FILE", file, "instance file")->required();
  auto* koszul_cmd = app.add_subcommand("koszul", "full Koszul/theorem report for an instance file");
  koszul_cmd->add_option("FILE", file, "instance file")->required();
  bool corrupt = false;
  koszul_cmd->add_flag("--selftest-corrupt-dd", corrupt)->group("");  // test hook, hidden
  auto* tor_cmd = app.add_subcommand("tor", "two-ideal Tor report for an instance file");
  tor_cmd->add_option("FILE", file, "instance file")->required();

  auto* search = app.add_subcommand("search", "evaluate seeded random instances");
  koszul::SearchParams sp;
  search->add_option("--seed", sp.seed, "master seed")->capture_default_str();
  search->add_option("--count", sp.count, "number of instances")->required();
  search->add_option("--field", sp.field, "prime modulus")->capture_default_str();
  search->add_option("--vars", sp.gen.max_vars, "max variable count (<= 3)")->capture_default_str();
  search->add_option("--maxdeg", sp.gen.max_deg, "max degree bound (<= 5)")->capture_default_str();
  search->add_option("--maxn", sp.gen.max_n, "max Koszul element count (<= 3)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!json_path.empty()) opt.json_path = json_path;
  if (!csv_path.empty()) opt.csv_path = csv_path;
  opt.corrupt_dd = corrupt;

  koszul::RunOutcome out;
  try {
    if (*analyze)
      out = koszul::run_analyze(file, opt);
    else if (*koszul_cmd)
      out = koszul::run_koszul(file, opt);
    else if (*tor_cmd)
      out = koszul::run_tor(file, opt);
    else
      out = koszul::run_search(sp, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << out.console << "\n";
  return out.exit_code;
}
