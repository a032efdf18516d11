#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/local_algebra.hpp"
#include "koszul/parser.hpp"

namespace koszul::testing {

inline Presentation make_pres(std::uint32_t p, const std::vector<std::string>& vars,
                              const std::vector<std::string>& gen_exprs,
                              std::optional<unsigned> bound = std::nullopt,
                              unsigned bound_max = 12) {
  const PrimeField f(p);
  const unsigned capacity = (bound ? *bound : bound_max) + 3;
  std::vector<TruncPoly> gens;
  for (const auto& e : gen_exprs) gens.push_back(parse_poly(e, vars, f, capacity));
  return certify(make_presentation(f, vars, std::move(gens)), bound, bound_max);
}

inline LocalAlgebra make_algebra(std::uint32_t p, const std::vector<std::string>& vars,
                                 const std::vector<std::string>& gen_exprs,
                                 std::optional<unsigned> bound = std::nullopt) {
  return LocalAlgebra::build(make_pres(p, vars, gen_exprs, bound));
}

// Koszul element coordinates from expressions.
inline std::vector<std::vector<std::uint32_t>> elements(const LocalAlgebra& a,
                                                        const std::vector<std::string>& exprs) {
  std::vector<std::vector<std::uint32_t>> xs;
  const auto& pres = a.presentation();
  for (const auto& e : exprs)
    xs.push_back(a.normal_form(parse_poly(e, pres.vars, pres.field, pres.bound)));
  return xs;
}

}  // namespace koszul::testing
