#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix(PrimeField f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(PrimeField f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % f.p();
    return m;
  }

  const PrimeField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::uint32_t* row_ptr(std::size_t r) { return a_.data() + r * cols_; }
  const std::uint32_t* row_ptr(std::size_t r) const { return a_.data() + r * cols_; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {row_ptr(r), cols_}; }

  void set_row(std::size_t r, std::span<const std::uint32_t> v) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (auto v : a_)
      if (v) return false;
    return true;
  }

 private:
  PrimeField f_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

struct Echelon {
  Matrix mat;                        // reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot columns, strictly increasing
  std::size_t rank() const { return pivots.size(); }
};

// Production kernels; OpenMP-parallel above a size threshold, bit-identical
// to the serial reference for any thread count.
Echelon rref(Matrix m);
Matrix mul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);
std::size_t rank(const Matrix& m);
std::vector<std::uint32_t> apply(const Matrix& m, std::span<const std::uint32_t> v);
Matrix vstack(const Matrix& a, const Matrix& b);

// Rows form a basis of ker(m) (not echelonized; wrap in Subspace for canonical form).
Matrix kernel_rows(const Matrix& m);

namespace ref {
// Serial reference implementations kept for testing and benchmarking.
Echelon rref(Matrix m);
Matrix mul(const Matrix& a, const Matrix& b);
}  // namespace ref

}  // namespace koszul
