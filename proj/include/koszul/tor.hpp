#pragma once

#include "koszul/invariants.hpp"

namespace koszul {

// Two m-primary ideals I, J of R = k[[Y_1..Y_n]], each certified Artinian,
// with a working truncation sound for IJ and I (intersect) J.
struct TorInstance {
  PrimeField field;
  std::vector<std::string> vars;
  std::vector<TruncPoly> gens_i, gens_j;  // capacity >= d_ij + 2
  unsigned d_i = 0, d_j = 0;              // certified bounds for I and J
  unsigned d_ij = 0;                      // working truncation, m^{d_ij} subseteq IJ
};

// Certifies both ideals and the working truncation. d_ij defaults to
// d_i + d_j; an override must still pass the certification against IJ.
TorInstance make_tor_instance(PrimeField f, std::vector<std::string> vars,
                              std::vector<TruncPoly> gens_i, std::vector<TruncPoly> gens_j,
                              std::optional<unsigned> d_ij_override, unsigned d_max);

struct TorRoute {
  std::size_t length = 0;      // l((I cap J)/IJ) resp. l(H_1(z; B))
  std::size_t generators = 0;  // nu of the same module
};

// (I cap J)/IJ by exact subspace arithmetic at truncation d_ij.
TorRoute tor_via_ideals(const TorInstance& inst);
// Reduction to the diagonal: H_1(y_1 - y_1', ..., y_n - y_n'; (R/I) (x) (R/J)).
TorRoute tor_via_diagonal(const TorInstance& inst);

// The diagonal data behind the second route: B = (R/I) (x) (R/J') with the
// second factor's variables freshened, and the elements y_i - y_i' in B.
struct DiagonalSetup {
  LocalAlgebra tensor;
  std::vector<std::vector<std::uint32_t>> elements;
};
DiagonalSetup diagonal_setup(const TorInstance& inst);

struct TorReport {
  TorRoute ideals, diagonal;
  bool lengths_agree = false;
  bool nus_agree = false;
  long long c9_slack = 0;  // nu - n, report-only (conjecture)
  bool c9_met = false;
};

// Runs both routes; disagreement raises VerificationError (the identity is a
// proved reduction), the conjecture slack is recorded as a finding only.
TorReport tor_report(const TorInstance& inst);
// Same consistency contract over routes the caller already computed.
TorReport combine_tor_routes(const TorInstance& inst, const TorRoute& ideals,
                             const TorRoute& diagonal);

struct Conjecture9Report {
  std::size_t n = 0;
  std::size_t nu = 0;
  long long slack = 0;  // nu - n; never asserted, only reported
  bool met = false;
};

// m-primary case: Tor_1(R/I, R/J) should need at least n = dim R generators.
Conjecture9Report check_conjecture9(const TorInstance& inst);

}  // namespace koszul
