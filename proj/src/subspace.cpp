#include "koszul/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace koszul {

Subspace Subspace::zero(PrimeField f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(PrimeField f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  std::iota(piv.begin(), piv.end(), 0);
  return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::span(const Matrix& rows) {
  Echelon e = rref(rows);
  const std::size_t r = e.rank();
  Matrix basis(rows.field(), r, rows.cols());
  for (std::size_t i = 0; i < r; ++i) basis.set_row(i, e.mat.row(i));
  return Subspace(std::move(basis), std::move(e.pivots));
}

std::vector<std::uint32_t> Subspace::reduce(std::span<const std::uint32_t> v) const {
  if (v.size() != ambient()) throw std::invalid_argument("subspace reduce: ambient mismatch");
  const std::uint32_t p = field().p();
  std::vector<std::uint32_t> r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::uint32_t c = r[pivots_[i]];
    if (!c) continue;
    const std::uint32_t* row = basis_.row_ptr(i);
    const std::uint32_t nc = p - c;
    for (std::size_t j = pivots_[i]; j < ambient(); ++j)
      r[j] = static_cast<std::uint32_t>((r[j] + static_cast<std::uint64_t>(nc) * row[j]) % p);
  }
  return r;
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw std::invalid_argument("subspace contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient() || u.field() != w.field())
    throw std::invalid_argument("subspace sum: ambient mismatch");
  return Subspace::span(vstack(u.basis_, w.basis_));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient() || u.field() != w.field())
    throw std::invalid_argument("subspace intersect: ambient mismatch");
  const PrimeField f = u.field();
  const std::size_t a = u.dim(), b = w.dim(), n = u.ambient();
  if (a == 0 || b == 0) return Subspace::zero(f, n);
  // columns 0..a-1 hold U^T, columns a..a+b-1 hold -W^T
  Matrix stacked(f, n, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked.at(j, i) = u.basis_.at(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked.at(j, a + i) = f.neg(w.basis_.at(i, j));
  Matrix ker = kernel_rows(stacked);
  Matrix gens(f, ker.rows(), n);
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    // alpha part of the kernel vector recombines u's basis
    for (std::size_t t = 0; t < a; ++t) {
      const std::uint32_t c = ker.at(i, t);
      if (!c) continue;
      for (std::size_t j = 0; j < n; ++j)
        gens.at(i, j) = f.add(gens.at(i, j), f.mul(c, u.basis_.at(t, j)));
    }
  }
  return Subspace::span(gens);
}


Subspace kernel_basis(const Matrix& m) { return Subspace::span(kernel_rows(m)); }

Subspace image_basis(const Matrix& m) { return Subspace::span(transpose(m)); }

SpanBuilder::SpanBuilder(PrimeField f, std::size_t ambient)
    : f_(f), ambient_(ambient), pivot_row_(ambient, -1) {}

bool SpanBuilder::add(std::span<const std::uint32_t> v) {
  auto r = reduce(v);
  std::size_t piv = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (r[j]) {
      piv = j;
      break;
    }
  if (piv == ambient_) return false;
  const std::uint32_t s = f_.inv(r[piv]);
  if (s != 1)
    for (std::size_t j = piv; j < ambient_; ++j) r[j] = f_.mul(r[j], s);
  // back-eliminate the new pivot from existing rows
  const std::uint32_t p = f_.p();
  for (auto& row : rows_) {
    const std::uint32_t c = row[piv];
    if (!c) continue;
    const std::uint32_t nc = p - c;
    for (std::size_t j = piv; j < ambient_; ++j)
      row[j] = static_cast<std::uint32_t>((row[j] + static_cast<std::uint64_t>(nc) * r[j]) % p);
  }
  pivot_row_[piv] = static_cast<int>(rows_.size());
  row_pivot_.push_back(piv);
  rows_.push_back(std::move(r));
  return true;
}

void SpanBuilder::add_rows(const Matrix& rows) {
  for (std::size_t i = 0; i < rows.rows(); ++i) add(rows.row(i));
}

void SpanBuilder::add_subspace(const Subspace& s) { add_rows(s.basis()); }

std::vector<std::uint32_t> SpanBuilder::reduce(std::span<const std::uint32_t> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("span reduce: ambient mismatch");
  const std::uint32_t p = f_.p();
  std::vector<std::uint32_t> r(v.begin(), v.end());
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!r[j] || pivot_row_[j] < 0) continue;
    const auto& row = rows_[static_cast<std::size_t>(pivot_row_[j])];
    const std::uint32_t nc = p - r[j];
    for (std::size_t t = j; t < ambient_; ++t)
      r[t] = static_cast<std::uint32_t>((r[t] + static_cast<std::uint64_t>(nc) * row[t]) % p);
  }
  return r;
}

bool SpanBuilder::contains(std::span<const std::uint32_t> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

Subspace SpanBuilder::to_subspace() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return row_pivot_[a] < row_pivot_[b]; });
  Matrix basis(f_, rows_.size(), ambient_);
  std::vector<std::size_t> pivots;
  pivots.reserve(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    basis.set_row(i, rows_[order[i]]);
    pivots.push_back(row_pivot_[order[i]]);
  }
  return Subspace(std::move(basis), std::move(pivots));
}

}  // namespace koszul
