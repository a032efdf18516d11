#include "koszul/runner.hpp"

#include <atomic>
#include <chrono>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace koszul {

namespace {

Json instance_section(const InstanceSpec& spec, unsigned bound) {
  Json j = Json::object();
  if (spec.seed)
    j["seed"] = *spec.seed;
  else
    j["path"] = spec.path;
  j["p"] = spec.p;
  j["vars"] = spec.vars;
  j["gens"] = spec.gen_exprs;
  if (spec.tor_mode()) j["gens2"] = spec.gens2_exprs;
  j["D"] = bound;
  return j;
}

Json algebra_section(const LocalAlgebra& a, const CidReport& cid) {
  Json j = Json::object();
  j["length"] = a.length();
  j["embdim"] = a.embdim();
  j["cid_pres"] = cid.via_presentation;
  j["cid_dev"] = cid.via_deviation;
  return j;
}

Json checks_section(std::optional<bool> dd, std::optional<bool> prop7, std::optional<bool> remark8,
                    std::optional<bool> disc11, std::optional<bool> lift) {
  auto put = [](Json& j, const char* k, std::optional<bool> v) {
    if (v)
      j[k] = *v;
    else
      j[k] = nullptr;
  };
  Json j = Json::object();
  put(j, "dd_zero", dd);
  put(j, "prop7", prop7);
  put(j, "remark8", remark8);
  put(j, "disc11", disc11);
  put(j, "lift", lift);
  return j;
}

std::string provenance(const InstanceSpec& spec) {
  return spec.seed ? "seed " + std::to_string(*spec.seed) : spec.path;
}

// remark8 check: the vector (dim H_0..dim H_n, nu(H_1)) is invariant under
// invertible changes of the Koszul elements.
bool remark8_invariant(const LocalAlgebra& a, const std::vector<std::vector<std::uint32_t>>& xs,
                       const HomologyReport& base, unsigned trials) {
  const std::size_t n = xs.size();
  if (n == 0) return true;
  SplitMix64 rng(0x52454D38ull ^ n);
  for (unsigned t = 0; t < trials; ++t) {
    Matrix l(a.field(), n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          l.at(i, j) = static_cast<std::uint32_t>(rng.below(a.field().p()));
    } while (rank(l) != n);
    KoszulComplex k(a, transform_basis(xs, l));
    const HomologyReport h = k.homology();
    if (h.dims != base.dims) return false;
    if (n >= 1 && h.nus.at(1) != base.nus.at(1)) return false;
  }
  return true;
}

// disc11 check: appending x_{n+1} = 0 splits one extra copy of H_0 into H_1.
bool disc11_splitting(const LocalAlgebra& a, const std::vector<std::vector<std::uint32_t>>& xs,
                      const HomologyReport& base) {
  KoszulComplex k(a, append_zero(xs, a.length()));
  const HomologyReport h = k.homology();
  const std::size_t base_h1 = base.dims.size() > 1 ? base.dims[1] : 0;
  const std::size_t base_nu1 = base.nus.size() > 1 ? base.nus[1] : 0;
  return h.dims.at(1) == base_h1 + base.dims.at(0) && h.nus.at(1) == base_nu1 + base.nus.at(0);
}

// The n=1 and n=2 closed facts; both are proved, so failures are engine bugs.
void check_low_n_facts(const LocalAlgebra& a, const std::vector<std::vector<std::uint32_t>>& xs,
                       const HomologyReport& h) {
  if (xs.size() == 1) {
    const IdealSubspace ann = annihilator(a, xs);
    if (h.dims.at(1) != ann.dim() || ann.dim() < 1)
      throw VerificationError("n=1 fact violated: dim H_1 = " + std::to_string(h.dims.at(1)) +
                              ", l(Ann x) = " + std::to_string(ann.dim()));
  }
  if (xs.size() == 2) {
    if (h.nus.at(1) < 2)
      throw VerificationError("n=2 fact violated: nu(H_1) = " + std::to_string(h.nus.at(1)));
    const LocalAlgebra abar = quotient_by_ideal(a, xs);
    const IdealSubspace ann = annihilator(a, xs);
    const long long identity = static_cast<long long>(h.dims.at(1)) -
                               static_cast<long long>(abar.length()) -
                               static_cast<long long>(ann.dim());
    if (identity != 0)
      throw VerificationError("n=2 length identity violated: l(H_1) - l(A/(x)) - l(Ann(x)) = " +
                              std::to_string(identity));
  }
}

}  // namespace

InstanceEvaluation evaluate_analyze(const InstanceSpec& spec, unsigned bound_max) {
  const CompiledInstance ci = compile_instance(spec, bound_max);
  const CidReport cid = cid_report(ci.algebra);

  std::optional<bool> dd, prop7;
  const auto mgens = ci.algebra.minimal_m_generators();
  if (!mgens.empty()) {
    KoszulComplex k(ci.algebra, mgens);
    dd = k.dd_zero();
    prop7 = k.prop7_holds();
    if (!*dd) throw VerificationError("d.d != 0 on the minimal-generator complex");
    if (!*prop7)
      throw VerificationError("prop7 containment failed on the minimal-generator complex");
  } else {
    dd = true;
    prop7 = true;
  }

  InstanceEvaluation ev;
  ev.j = Json::object();
  ev.j["instance"] = instance_section(spec, ci.bound);
  ev.j["algebra"] = algebra_section(ci.algebra, cid);
  ev.j["checks"] = checks_section(dd, prop7, std::nullopt, std::nullopt, std::nullopt);
  return ev;
}

InstanceEvaluation evaluate_koszul(const InstanceSpec& spec, CheckLevel level, unsigned bound_max,
                                   unsigned remark8_trials, bool corrupt_dd) {
  const CompiledInstance ci = compile_instance(spec, bound_max);
  const LocalAlgebra& a = ci.algebra;
  const CidReport cid = cid_report(a);

  InstanceEvaluation ev;
  ev.j = Json::object();
  ev.j["instance"] = instance_section(spec, ci.bound);
  ev.j["algebra"] = algebra_section(a, cid);

  const std::size_t n = ci.xs.size();
  HomologyReport h;
  std::optional<bool> dd, prop7, remark8, disc11, lift;

  if (n == 0) {
    h.dims = {a.length()};
    h.nus = {1};
    h.euler = static_cast<long long>(a.length());
    dd = true;
    prop7 = true;
  } else {
    KoszulComplex k(a, ci.xs);
    if (corrupt_dd) k.corrupt_differential();
    dd = k.dd_zero();
    if (!*dd)
      throw VerificationError("d.d != 0: the composite d_i . d_{i+1} has a nonzero entry (" +
                              provenance(spec) + ")");
    prop7 = k.prop7_holds();
    if (!*prop7)
      throw VerificationError("prop7 violated: some x_j Z_i is not inside B_i (" +
                              provenance(spec) + ")");
    h = k.homology();
    // the alternating sum of homology lengths vanishes whenever n >= 1
    // (the algebra has dimension zero)
    if (h.euler != 0)
      throw VerificationError("Euler characteristic nonzero: chi = " + std::to_string(h.euler) +
                              " (" + provenance(spec) + ")");
    check_low_n_facts(a, ci.xs, h);
  }

  const TheoremReport thm = check_main_theorem(a, ci.xs, h);
  ev.theorem_tight = thm.slack == 0;
  if (!thm.conjecture10_met)
    ev.conjecture_violations.push_back(
        "conjecture10 violated on " + provenance(spec) + ": nu(H_1) = " +
        std::to_string(thm.nu_h1) + " < n = " + std::to_string(thm.n));

  if (level == CheckLevel::full && n >= 1) {
    remark8 = remark8_invariant(a, ci.xs, h, remark8_trials);
    if (!*remark8)
      throw VerificationError("remark8 invariance failed under a change of basis (" +
                              provenance(spec) + ")");
    disc11 = disc11_splitting(a, ci.xs, h);
    if (!*disc11)
      throw VerificationError("disc11 splitting failed (" + provenance(spec) + ")");
    lift = check_lift_invariance(a, ci.xs).identity_ok;
  } else if (level == CheckLevel::full) {
    remark8 = true;
    disc11 = disc11_splitting(a, ci.xs, h);
    lift = check_lift_invariance(a, ci.xs).identity_ok;
  }

  Json kj = Json::object();
  kj["n"] = n;
  kj["h_dims"] = h.dims;
  kj["h_nus"] = h.nus;
  kj["euler"] = h.euler;
  ev.j["koszul"] = kj;
  Json tj = Json::object();
  tj["bound"] = thm.bound;
  tj["slack"] = thm.slack;
  ev.j["theorem"] = tj;
  Json cj = Json::object();
  cj["met"] = thm.conjecture10_met;
  cj["slack"] = thm.conjecture10_slack;
  ev.j["conjecture10"] = cj;
  ev.j["checks"] = checks_section(dd, prop7, remark8, disc11, lift);
  return ev;
}

InstanceEvaluation evaluate_tor(const InstanceSpec& spec, unsigned bound_max) {
  if (!spec.tor_mode()) throw InputError("tor: instance file has no 'gens2' key");
  const PrimeField f(spec.p);
  const unsigned capacity = (spec.bound ? *spec.bound : 2 * bound_max) + 3;
  std::vector<TruncPoly> gi, gj;
  for (const auto& e : spec.gen_exprs) gi.push_back(parse_poly(e, spec.vars, f, capacity));
  for (const auto& e : spec.gens2_exprs) gj.push_back(parse_poly(e, spec.vars, f, capacity));
  const TorInstance inst =
      make_tor_instance(f, spec.vars, std::move(gi), std::move(gj), spec.bound, bound_max);

  // one diagonal build serves the route, dd_zero, and prop7
  const DiagonalSetup diag = diagonal_setup(inst);
  KoszulComplex k(diag.tensor, diag.elements);
  TorRoute diagonal;
  diagonal.length = k.cycles(1).dim() - k.boundaries(1).dim();
  diagonal.generators =
      nu(SubquotientModule{&diag.tensor, k.free_rank(1), k.cycles(1), k.boundaries(1)});
  const TorReport rep = combine_tor_routes(inst, tor_via_ideals(inst), diagonal);

  const bool dd = k.dd_zero();
  const bool prop7 = k.prop7_holds();
  if (!dd) throw VerificationError("d.d != 0 on the diagonal complex (" + provenance(spec) + ")");
  if (!prop7)
    throw VerificationError("prop7 violated on the diagonal complex (" + provenance(spec) + ")");

  InstanceEvaluation ev;
  ev.j = Json::object();
  ev.j["instance"] = instance_section(spec, inst.d_ij);
  Json tj = Json::object();
  tj["len_ideal"] = rep.ideals.length;
  tj["nu_ideal"] = rep.ideals.generators;
  tj["len_diag"] = rep.diagonal.length;
  tj["nu_diag"] = rep.diagonal.generators;
  tj["agree"] = rep.lengths_agree && rep.nus_agree;
  tj["c9_slack"] = rep.c9_slack;
  ev.j["tor"] = tj;
  ev.j["checks"] =
      checks_section(dd, prop7, std::nullopt, std::nullopt, std::nullopt);
  if (!rep.c9_met)
    ev.conjecture_violations.push_back("conjecture9 violated on " + provenance(spec) +
                                       ": nu = " + std::to_string(rep.ideals.generators) +
                                       " < n = " + std::to_string(inst.vars.size()));
  return ev;
}

std::string emit_reports(const Json& report, const RunOptions& opt) {
  const std::string text = report.dump(2) + "\n";
  if (opt.json_path) {
    std::ofstream out(*opt.json_path, std::ios::binary);
    if (!out) throw InputError("cannot write JSON report: " + *opt.json_path);
    out << text;
  }
  if (opt.csv_path) {
    std::ofstream out(*opt.csv_path, std::ios::binary);
    if (!out) throw InputError("cannot write CSV report: " + *opt.csv_path);
    out << report_to_csv(report);
  }
  return text;
}

namespace {

Json run_section(const std::string& command, const Json& run_extra,
                 const std::vector<InstanceEvaluation>& evs) {
  Json run = Json::object();
  run["command"] = command;
  for (auto& [k, v] : run_extra.items()) run[k] = v;
  Json violations = Json::array();
  Json tightness = Json::array();
  for (std::size_t i = 0; i < evs.size(); ++i) {
    for (const auto& v : evs[i].conjecture_violations) violations.push_back(v);
    if (evs[i].theorem_tight) tightness.push_back(i);
  }
  run["violations"] = violations;
  run["tightness"] = tightness;
  return run;
}

RunOutcome assemble(const std::string& command, std::vector<InstanceEvaluation> evs,
                    const RunOptions& opt, Json run_extra = Json::object()) {
  Json report = Json::object();
  report["run"] = run_section(command, run_extra, evs);
  Json instances = Json::array();
  for (auto& ev : evs) instances.push_back(std::move(ev.j));
  report["instances"] = instances;

  RunOutcome out;
  out.report = std::move(report);
  const auto& violations = out.report["run"]["violations"];
  out.exit_code = violations.empty() ? 0 : 1;
  emit_reports(out.report, opt);
  std::string summary = command + ": " + std::to_string(evs.size()) + " instance(s), " +
                        std::to_string(violations.size()) + " conjecture finding(s)";
  if (!violations.empty()) {
    for (const auto& v : violations) summary += "\n  FINDING: " + v.get<std::string>();
  }
  // single-instance commands show the report inline unless it goes to a file
  if (command != "search" && !opt.json_path) summary += "\n" + out.report.dump(2);
  out.console = summary;
  return out;
}

template <typename Fn>
RunOutcome guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const VerificationError& e) {
    return RunOutcome{1, Json::object(), std::string("VERIFICATION FAILURE: ") + e.what()};
  } catch (const ParseError& e) {
    return RunOutcome{2, Json::object(), std::string("input error: ") + e.what()};
  } catch (const InputError& e) {
    return RunOutcome{2, Json::object(), std::string("input error: ") + e.what()};
  }
}

}  // namespace

RunOutcome run_analyze(const std::string& path, const RunOptions& opt) {
  return guarded([&] {
    std::vector<InstanceEvaluation> evs;
    evs.push_back(evaluate_analyze(parse_instance_file(path), opt.bound_max));
    return assemble("analyze", std::move(evs), opt);
  });
}

RunOutcome run_koszul(const std::string& path, const RunOptions& opt) {
  return guarded([&] {
    const InstanceSpec spec = parse_instance_file(path);
    if (spec.tor_mode()) throw InputError("koszul: instance file is a Tor-mode file (has gens2)");
    std::vector<InstanceEvaluation> evs;
    evs.push_back(evaluate_koszul(spec, CheckLevel::full, opt.bound_max, opt.remark8_trials,
                                  opt.corrupt_dd));
    return assemble("koszul", std::move(evs), opt);
  });
}

RunOutcome run_tor(const std::string& path, const RunOptions& opt) {
  return guarded([&] {
    std::vector<InstanceEvaluation> evs;
    evs.push_back(evaluate_tor(parse_instance_file(path), opt.bound_max));
    return assemble("tor", std::move(evs), opt);
  });
}

RunOutcome run_search(const SearchParams& params, const RunOptions& opt) {
  return guarded([&] {
    validate_generator_params(params.gen);
    if (!PrimeField::is_prime(params.field))
      throw InputError("modulus must be prime: " + std::to_string(params.field));
    const PrimeField f(params.field);
    SplitMix64 master(params.seed);
    std::vector<std::uint64_t> seeds(params.count);
    for (auto& s : seeds) s = master.next();

    std::vector<InstanceEvaluation> evs(params.count);
    std::atomic<bool> fatal{false};
    std::string fatal_msg;
    const auto t0 = std::chrono::steady_clock::now();
#ifdef _OPENMP
    const int nthreads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (long long i = 0; i < static_cast<long long>(params.count); ++i) {
      if (fatal.load()) continue;
      try {
        const InstanceSpec spec = random_instance(seeds[static_cast<std::size_t>(i)], f, params.gen);
        evs[static_cast<std::size_t>(i)] =
            evaluate_koszul(spec, CheckLevel::search, opt.bound_max);
      } catch (const std::exception& e) {
        bool expected = false;
        // only the first failing worker records the diagnostic
        if (fatal.compare_exchange_strong(expected, true))
          fatal_msg = "instance seed " + std::to_string(seeds[static_cast<std::size_t>(i)]) +
                      ": " + e.what();
      }
    }
    if (fatal.load()) throw VerificationError(fatal_msg);
    const auto t1 = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    Json extra = Json::object();
    extra["seed"] = params.seed;
    Json pj = Json::object();
    pj["count"] = params.count;
    pj["field"] = params.field;
    pj["max_vars"] = params.gen.max_vars;
    pj["max_deg"] = params.gen.max_deg;
    pj["max_n"] = params.gen.max_n;
    extra["params"] = pj;
    RunOutcome out = assemble("search", std::move(evs), opt, extra);
    out.console += "\n  elapsed: " + std::to_string(ms) + " ms, threads: " +
                   std::to_string(nthreads);
    return out;
  });
}

}  // namespace koszul
