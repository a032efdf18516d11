#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

// Multivariate polynomial with every monomial of degree >= bound discarded:
// an element of k[[Y_1..Y_m]] / m^bound. Only nonzero coefficients are stored.
class TruncPoly {
 public:
  TruncPoly(PrimeField f, std::size_t nvars, unsigned bound)
      : f_(f), nvars_(nvars), bound_(bound) {}

  static TruncPoly constant(PrimeField f, std::size_t nvars, unsigned bound, std::uint32_t c);
  static TruncPoly variable(PrimeField f, std::size_t nvars, unsigned bound, std::size_t index);
  static TruncPoly from_monomial(PrimeField f, std::size_t nvars, unsigned bound,
                                 const Monomial& m, std::uint32_t c);

  const PrimeField& field() const { return f_; }
  std::size_t nvars() const { return nvars_; }
  unsigned bound() const { return bound_; }
  const std::map<Monomial, std::uint32_t, GradedLexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::uint32_t constant_term() const;
  std::uint32_t coeff(const Monomial& m) const;
  unsigned min_degree() const;  // degree of the lowest term; bound when zero

  // Accumulates c into the coefficient of m, dropping zero results and
  // anything of degree >= bound.
  void add_term(const Monomial& m, std::uint32_t c);

  TruncPoly operator+(const TruncPoly& o) const;
  TruncPoly operator-(const TruncPoly& o) const;
  TruncPoly operator-() const;
  TruncPoly operator*(const TruncPoly& o) const;
  bool operator==(const TruncPoly& o) const;

  TruncPoly times_monomial(const Monomial& m) const;
  TruncPoly scaled(std::uint32_t c) const;

  // Lower the truncation level (new_bound <= bound).
  TruncPoly truncated(unsigned new_bound) const;
  // Re-express over a wider variable list: old variable i becomes
  // variable var_offset + i. Used when merging presentations.
  TruncPoly rebased(std::size_t new_nvars, std::size_t var_offset, unsigned new_bound) const;

  // Coordinates over a graded-lex sorted monomial list covering every stored
  // term (the linear encoding of P/m^D).
  std::vector<std::uint32_t> to_vector(const std::vector<Monomial>& basis) const;
  static TruncPoly from_vector(PrimeField f, std::size_t nvars, unsigned bound,
                               const std::vector<Monomial>& basis,
                               std::span<const std::uint32_t> coords);

  // Canonical print: graded-lex term order, coefficients in [0, p).
  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  void check_compatible(const TruncPoly& o, const char* op) const;
  PrimeField f_;
  std::size_t nvars_;
  unsigned bound_;
  std::map<Monomial, std::uint32_t, GradedLexLess> terms_;
};

}  // namespace koszul
