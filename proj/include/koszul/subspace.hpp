#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

// A subspace of k^N held by its reduced row-echelon basis. The RREF basis is
// unique for a given row space, so equality of subspaces is equality of the
// stored matrices entry for entry.
class Subspace {
 public:
  static Subspace zero(PrimeField f, std::size_t ambient);
  static Subspace full(PrimeField f, std::size_t ambient);
  // Row span of an arbitrary matrix.
  static Subspace span(const Matrix& rows);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const PrimeField& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const Subspace& other) const;
  // Residual of v after eliminating all pivot coordinates; zero iff v lies here.
  std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  friend Subspace sum(const Subspace& u, const Subspace& w);
  friend Subspace intersect(const Subspace& u, const Subspace& w);

 private:
  friend class SpanBuilder;
  explicit Subspace(Matrix echelon_basis, std::vector<std::size_t> pivots)
      : basis_(std::move(echelon_basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& w);
// Computed via the kernel of the stacked-coefficient system [U^T | -W^T].
Subspace intersect(const Subspace& u, const Subspace& w);

// { v : m v = 0 }, echelonized; dim = cols - rank.
Subspace kernel_basis(const Matrix& m);
// Column span, echelonized.
Subspace image_basis(const Matrix& m);

// Incremental RREF span. add() reduces the vector against the current rows,
// inserts it when independent, and back-eliminates so the row set stays in
// reduced form; the final subspace is identical to a batch rref.
class SpanBuilder {
 public:
  SpanBuilder(PrimeField f, std::size_t ambient);

  // Returns true when the vector enlarged the span.
  bool add(std::span<const std::uint32_t> v);
  void add_rows(const Matrix& rows);
  void add_subspace(const Subspace& s);

  bool contains(std::span<const std::uint32_t> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;

  Subspace to_subspace() const;

 private:
  PrimeField f_;
  std::size_t ambient_;
  std::vector<std::vector<std::uint32_t>> rows_;  // mutually reduced, pivot entry 1
  std::vector<std::size_t> row_pivot_;            // pivot column of rows_[i]
  std::vector<int> pivot_row_;                    // column -> row index or -1
};

}  // namespace koszul
