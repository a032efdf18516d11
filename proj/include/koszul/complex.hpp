#pragma once

#include "koszul/local_algebra.hpp"

namespace koszul {

struct HomologyReport {
  std::vector<std::size_t> dims;  // dim_k H_i = l(H_i), i = 0..n
  std::vector<std::size_t> nus;   // nu(H_i) as an A-module
  long long euler = 0;            // sum (-1)^i l(H_i)
};

// The Koszul complex K_.(x_1..x_n; A) in the exterior-algebra presentation:
// K_i is free of rank C(n,i) on e_S for sorted i-subsets S in lexicographic
// order, and d(e_{j_1<...<j_i}) = sum_t (-1)^{t-1} x_{j_t} e_{S \ {j_t}}.
// Differentials are stored as exact k-linear matrices of size
// (C(n,i-1)*l) x (C(n,i)*l) via the algebra's multiplication operators.
class KoszulComplex {
 public:
  KoszulComplex(const LocalAlgebra& a, std::vector<std::vector<std::uint32_t>> xs);

  const LocalAlgebra& algebra() const { return *a_; }
  std::size_t n() const { return xs_.size(); }
  const std::vector<std::vector<std::uint32_t>>& elements() const { return xs_; }
  std::size_t free_rank(std::size_t i) const;  // C(n, i)
  // d_i for i in [1, n]
  const Matrix& differential(std::size_t i) const { return d_.at(i - 1); }

  const Subspace& cycles(std::size_t i) const { return cycles_.at(i); }
  const Subspace& boundaries(std::size_t i) const { return boundaries_.at(i); }

  HomologyReport homology() const;
  long long euler_characteristic() const;

  bool dd_zero() const;       // d_i . d_{i+1} = 0, exact matrix check
  bool prop7_holds() const;   // x_j * Z_i subseteq B_i for all i, j

  // Test hook: flip one entry of d_i so the d.d = 0 check must fail.
  void corrupt_differential();

 private:
  const LocalAlgebra* a_;
  std::vector<std::vector<std::uint32_t>> xs_;
  std::vector<Matrix> d_;
  std::vector<Subspace> cycles_, boundaries_;
  void compute_spaces();
};

// x' = L x for an invertible n x n matrix over k; homology is invariant.
std::vector<std::vector<std::uint32_t>> transform_basis(
    const std::vector<std::vector<std::uint32_t>>& xs, const Matrix& l);

std::vector<std::vector<std::uint32_t>> append_zero(
    const std::vector<std::vector<std::uint32_t>>& xs, std::size_t algebra_length);

std::size_t nu_h1(const LocalAlgebra& a, const std::vector<std::vector<std::uint32_t>>& xs);

}  // namespace koszul
