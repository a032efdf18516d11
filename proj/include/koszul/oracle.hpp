#pragma once

#include "koszul/local_algebra.hpp"

namespace koszul {

struct OracleResult {
  std::vector<std::size_t> h_dims;
  std::vector<std::size_t> h_nus;
};

// Independent validation path for tiny F_2 instances: homology dimensions by
// enumerating every vector of each chain module, and nu by exhausting all
// candidate generating tuples (as Z/B class representatives) of each size.
// Guards: p = 2, l(A) <= 4, n <= 2, every expanded chain dimension <= 12.
OracleResult brute_force_oracle(const LocalAlgebra& a,
                                const std::vector<std::vector<std::uint32_t>>& xs);

bool oracle_eligible(const LocalAlgebra& a, std::size_t n);

}  // namespace koszul
