#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace koszul {

// Exponent vector over a fixed variable list.
struct Monomial {
  std::vector<std::uint16_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps.size(); ++i)
      r.exps[i] = static_cast<std::uint16_t>(r.exps[i] + o.exps[i]);
    return r;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Graded-lexicographic order: degree first; within a degree, a higher power of
// an earlier declared variable comes first (so y1^2 < y1*y2 < y2^2).
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(a, b); }
};

// All monomials of degree <= max_degree in graded-lex order;
// count is C(var_count + max_degree, var_count).
std::vector<Monomial> enumerate_monomials(std::size_t var_count, unsigned max_degree);

// Index of m within a graded-lex sorted list (binary search); -1 when absent.
long long monomial_index(const std::vector<Monomial>& sorted, const Monomial& m);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace koszul
