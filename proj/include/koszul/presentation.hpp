#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/subspace.hpp"
#include "koszul/trunc_poly.hpp"

namespace koszul {

// Semantic problem with user input (non-Artinian ideal, failed bound, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A = k[[Y_1..Y_m]] / (g_1..g_s), finitely presented. Generators live in the
// maximal ideal (zero constant term) and are stored at capacity >= bound + 2
// so that computations at truncation levels bound and bound + 1 are exact.
struct Presentation {
  PrimeField field;
  std::vector<std::string> vars;
  std::vector<TruncPoly> gens;
  unsigned bound = 0;     // certified D with m^D subseteq (g_1..g_s)
  bool verified = false;

  std::size_t nvars() const { return vars.size(); }
};

// Validates arity/constant terms; does not certify a bound.
Presentation make_presentation(PrimeField f, std::vector<std::string> vars,
                               std::vector<TruncPoly> gens);

// span{ mu * g mod m^level : g in gens, mu_min_deg <= deg(mu) <= level-1 },
// as a subspace of P_{<level} over its graded-lex monomial basis.
Subspace ideal_span_mod(const PrimeField& f, std::size_t nvars,
                        const std::vector<TruncPoly>& gens, unsigned level,
                        unsigned mu_min_deg = 0);

// True iff m^D lies in the ideal: every degree-D monomial must fall in
// span{ mu * g mod m^{D+1} }. Sound by Nakayama over the complete local ring.
bool verify_degree_bound(const Presentation& p, unsigned candidate);

// Smallest D <= d_max passing verify_degree_bound; nullopt = not certified
// Artinian within the bound.
std::optional<unsigned> find_degree_bound(const Presentation& p, unsigned d_max);

// Certify: use the requested bound when given (must verify), else search.
// Throws InputError when certification fails.
Presentation certify(Presentation p, std::optional<unsigned> requested, unsigned d_max);

// nu(I) over k[[Y]] by Nakayama at truncation bound+1:
// dim(I mod m^{D+1}) - dim(m*I mod m^{D+1}). Exact since m^{D+1} subseteq m*I.
std::size_t ideal_min_generators(const Presentation& p);

// Same computation at an arbitrary level >= bound+1 (used by stability tests).
std::size_t ideal_min_generators_at(const Presentation& p, unsigned level);

}  // namespace koszul
