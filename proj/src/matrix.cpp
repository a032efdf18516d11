#include "koszul/matrix.hpp"

#include <stdexcept>

namespace koszul {

namespace {

// v[j] += c * w[j] (mod p) for j in [from, cols)
inline void row_axpy(std::uint32_t* v, const std::uint32_t* w, std::uint32_t c,
                     std::size_t from, std::size_t cols, std::uint32_t p) {
  for (std::size_t j = from; j < cols; ++j) {
    v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(c) * w[j]) % p);
  }
}

Echelon rref_impl(Matrix m, bool parallel) {
  const std::uint32_t p = m.field().p();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const std::uint32_t piv_inv = m.field().inv(m.at(r, c));
    if (piv_inv != 1)
      for (std::size_t j = c; j < cols; ++j) m.at(r, j) = m.field().mul(m.at(r, j), piv_inv);
    const std::uint32_t* prow = m.row_ptr(r);
    const bool go_wide = parallel && rows * (cols - c) > 1u << 15;
#pragma omp parallel for schedule(static) if (go_wide)
    for (long long i = 0; i < static_cast<long long>(rows); ++i) {
      if (static_cast<std::size_t>(i) == r) continue;
      const std::uint32_t f = m.at(i, c);
      if (f) row_axpy(m.row_ptr(i), prow, p - f, c, cols, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

Matrix mul_impl(const Matrix& a, const Matrix& b, bool parallel) {
  if (a.cols() != b.rows() || a.field() != b.field())
    throw std::invalid_argument("matrix product dimension mismatch");
  const std::uint32_t p = a.field().p();
  Matrix c(a.field(), a.rows(), b.cols());
  const bool go_wide = parallel && a.rows() * a.cols() * b.cols() > 1u << 16;
#pragma omp parallel for schedule(static) if (go_wide)
  for (long long i = 0; i < static_cast<long long>(a.rows()); ++i) {
    // accumulate row i of a against b; (p-1)^2 < 2^30, no intermediate overflow
    std::uint32_t* out = c.row_ptr(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t f = a.at(i, k);
      if (!f) continue;
      const std::uint32_t* brow = b.row_ptr(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        out[j] = static_cast<std::uint32_t>((out[j] + f * brow[j]) % p);
    }
  }
  return c;
}

}  // namespace

Echelon rref(Matrix m) { return rref_impl(std::move(m), true); }
Matrix mul(const Matrix& a, const Matrix& b) { return mul_impl(a, b, true); }

namespace ref {
Echelon rref(Matrix m) { return rref_impl(std::move(m), false); }
Matrix mul(const Matrix& a, const Matrix& b) { return mul_impl(a, b, false); }
}  // namespace ref

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<std::uint32_t> apply(const Matrix& m, std::span<const std::uint32_t> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("apply: dimension mismatch");
  const std::uint32_t p = m.field().p();
  std::vector<std::uint32_t> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* row = m.row_ptr(i);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += static_cast<std::uint64_t>(row[j]) * v[j];
    out[i] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("vstack: dimension mismatch");
  Matrix s(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) s.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) s.set_row(a.rows() + i, b.row(i));
  return s;
}

Matrix kernel_rows(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(m.field(), free_cols.size(), cols);
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    const std::size_t f = free_cols[fi];
    k.at(fi, f) = 1;
    for (std::size_t pi = 0; pi < e.pivots.size(); ++pi)
      k.at(fi, e.pivots[pi]) = m.field().neg(e.mat.at(pi, f));
  }
  return k;
}

}  // namespace koszul
