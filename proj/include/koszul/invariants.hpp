#pragma once

#include "koszul/complex.hpp"
#include "koszul/lift.hpp"

namespace koszul {

// Theorem-level check failed: a defect in the engine, never in the mathematics.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CidReport {
  long long via_presentation = 0;  // nu(I) - m
  long long via_deviation = 0;     // dim H_1(minimal m-generators; A) - embdim
  std::size_t embdim = 0;
  bool agree = false;
};

// cid(A) = nu(I) - ht(I); here ht(I) = number of presentation variables.
long long cid_presentation(const Presentation& pres);
// dim_k H_1(y_1..y_e; A) - e for the deterministic minimal generators of m.
long long cid_deviation(const LocalAlgebra& a);
// Both routes; throws VerificationError when they disagree or come out negative.
CidReport cid_report(const LocalAlgebra& a);

struct TheoremReport {
  std::size_t n = 0;
  std::size_t nu_h1 = 0;
  long long cid_a = 0;
  long long cid_abar = 0;
  long long bound = 0;   // n + cid(A) - cid(A/(x))
  long long slack = 0;   // nu(H_1) - bound; always >= 0 (proved bound)
  bool conjecture10_met = false;
  long long conjecture10_slack = 0;
};

// Evaluates the bound nu(H_1(x;A)) >= n + cid(A) - cid(A/(x)); negative slack
// raises VerificationError.
TheoremReport check_main_theorem(const LocalAlgebra& a,
                                 const std::vector<std::vector<std::uint32_t>>& xs);
TheoremReport check_main_theorem(const LocalAlgebra& a,
                                 const std::vector<std::vector<std::uint32_t>>& xs,
                                 const HomologyReport& precomputed);

struct Conjecture10Report {
  std::size_t n = 0;
  std::size_t nu_h1 = 0;
  bool met = false;
  long long slack = 0;
};

// Report-only: the conjecture is unproven, violations are findings.
Conjecture10Report check_conjecture10(const LocalAlgebra& a,
                                      const std::vector<std::vector<std::uint32_t>>& xs);

struct LiftReport {
  std::size_t nu_lifted_ideal = 0;
  long long cid_lifted = 0;
  bool iso_ok = false;
  bool identity_ok = false;  // nu(a) = cid(A) + n + m
  bool cid_invariant = false;
};

// Builds the lifted presentation, checks the rebuilt algebra is isomorphic to
// A (length + multiplication tables under X_i -> x_i), and verifies
// nu(a) = cid(A) + n + m and the cid invariance. Mismatches raise
// VerificationError.
LiftReport check_lift_invariance(const LocalAlgebra& a,
                                 const std::vector<std::vector<std::uint32_t>>& xs);

}  // namespace koszul
