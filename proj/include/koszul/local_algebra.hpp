#pragma once

#include <memory>
#include <span>
#include <vector>

#include "koszul/presentation.hpp"

namespace koszul {

// A finite-dimensional local k-algebra A = k[[Y]]/I built from a certified
// presentation by linear algebra in P_{<D}. The basis is the set of standard
// monomials (non-pivot coordinates of the echelonized relation space under
// graded-lex), basis()[0] is always the monomial 1, and the maximal ideal is
// spanned by the positive-degree basis elements.
class LocalAlgebra {
 public:
  static LocalAlgebra build(Presentation pres);

  const Presentation& presentation() const { return pres_; }
  const PrimeField& field() const { return pres_.field; }
  std::size_t length() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t embdim() const { return embdim_; }

  // Coordinate vectors (unit vectors) of the degree-1 standard monomials; a
  // deterministic minimal generating set of the maximal ideal.
  std::vector<std::vector<std::uint32_t>> minimal_m_generators() const;

  // Monomial basis of the ambient P_{<D} and the echelonized relation space.
  const std::vector<Monomial>& ambient_monomials() const { return pmonos_; }
  const Subspace& relations() const { return relations_; }

  // Linear projector P_{<D} -> span(standard monomials) along the relations.
  std::vector<std::uint32_t> normal_form(const TruncPoly& f) const;
  // Canonical polynomial representative of a coordinate vector.
  TruncPoly representative(std::span<const std::uint32_t> coords) const;

  const Matrix& basis_mult_op(std::size_t i) const { return mult_[i]; }
  // k-linear operator "multiply by the element with these coordinates".
  Matrix mult_operator(std::span<const std::uint32_t> elem) const;
  std::vector<std::uint32_t> multiply(std::span<const std::uint32_t> a,
                                      std::span<const std::uint32_t> b) const;

  bool in_maximal_ideal(std::span<const std::uint32_t> v) const { return v.empty() || v[0] == 0; }
  const Subspace& maximal_ideal() const { return mideal_; }
  const Subspace& maximal_ideal_square() const { return mideal_sq_; }

  std::vector<std::uint32_t> zero_element() const { return std::vector<std::uint32_t>(length(), 0); }
  std::vector<std::uint32_t> one_element() const;

 private:
  LocalAlgebra(Presentation pres);
  Presentation pres_;
  std::vector<Monomial> pmonos_;
  Subspace relations_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> basis_cols_;  // coordinate of each standard monomial in pmonos_
  std::vector<Matrix> mult_;
  Subspace mideal_;
  Subspace mideal_sq_;
  std::size_t embdim_ = 0;
};

// An ideal of A carried as a subspace of the coordinate space, closed under
// the algebra action.
struct IdealSubspace {
  const LocalAlgebra* parent;
  Subspace space;
  std::size_t dim() const { return space.dim(); }
};

IdealSubspace ideal_span(const LocalAlgebra& a,
                         const std::vector<std::vector<std::uint32_t>>& elements);
IdealSubspace ideal_product(const IdealSubspace& i, const IdealSubspace& j);
IdealSubspace ideal_intersect(const IdealSubspace& i, const IdealSubspace& j);
// { a : a * x_j = 0 for every j }, the intersection of the mult-op kernels.
IdealSubspace annihilator(const LocalAlgebra& a,
                          const std::vector<std::vector<std::uint32_t>>& elements);

// A/(x_1..x_n)A, rebuilt from the presentation extended by canonical
// representatives of the x_i. Rejects units among the x_i.
LocalAlgebra quotient_by_ideal(const LocalAlgebra& a,
                               const std::vector<std::vector<std::uint32_t>>& xs);

// A1 (x) A2 over k: merged presentation in disjoint variables (second factor's
// names freshened), bound D1 + D2 - 1, provably certified.
LocalAlgebra tensor_product(const LocalAlgebra& a1, const LocalAlgebra& a2);

// A subquotient Z/B of a free module A^rank, both subspaces of k^{rank*length}
// laid out block-by-block; the algebra acts blockwise.
struct SubquotientModule {
  const LocalAlgebra* algebra;
  std::size_t rank;
  Subspace cycles;
  Subspace boundaries;
};

// Apply an l x l operator to each of the rank blocks of v.
std::vector<std::uint32_t> blockwise_apply(const Matrix& op, std::size_t rank,
                                           std::span<const std::uint32_t> v);

// nu(Z/B) = dim Z - dim(mZ + B) by Nakayama.
std::size_t nu(const SubquotientModule& mod);

}  // namespace koszul
