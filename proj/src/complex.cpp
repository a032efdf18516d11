#include "koszul/complex.hpp"

#include <algorithm>

namespace koszul {

namespace {

// sorted i-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t subset_index(const std::vector<std::vector<std::size_t>>& list,
                         const std::vector<std::size_t>& s) {
  auto it = std::lower_bound(list.begin(), list.end(), s);
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

KoszulComplex::KoszulComplex(const LocalAlgebra& a, std::vector<std::vector<std::uint32_t>> xs)
    : a_(&a), xs_(std::move(xs)) {
  const std::size_t l = a.length();
  for (const auto& x : xs_) {
    if (x.size() != l) throw std::invalid_argument("koszul: element size mismatch");
    if (!a.in_maximal_ideal(x))
      throw InputError("koszul: element outside the maximal ideal");
  }
  const std::size_t n = xs_.size();
  std::vector<Matrix> xops;
  xops.reserve(n);
  for (const auto& x : xs_) xops.push_back(a.mult_operator(x));

  auto below = subsets_lex(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    auto here = subsets_lex(n, i);
    Matrix d(a.field(), below.size() * l, here.size() * l);
    for (std::size_t s = 0; s < here.size(); ++s) {
      const auto& sub = here[s];
      for (std::size_t t = 0; t < sub.size(); ++t) {
        std::vector<std::size_t> face = sub;
        face.erase(face.begin() + static_cast<long>(t));
        const std::size_t row_block = subset_index(below, face);
        const bool negative = (t % 2) == 1;  // sign (-1)^{t-1} with t 1-based
        const Matrix& op = xops[sub[t]];
        for (std::size_t r = 0; r < l; ++r)
          for (std::size_t c = 0; c < l; ++c) {
            const std::uint32_t v = negative ? a.field().neg(op.at(r, c)) : op.at(r, c);
            d.at(row_block * l + r, s * l + c) = v;
          }
      }
    }
    d_.push_back(std::move(d));
    below = std::move(here);
  }
  compute_spaces();
}

void KoszulComplex::compute_spaces() {
  const std::size_t n = xs_.size(), l = a_->length();
  cycles_.clear();
  boundaries_.clear();
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t dim_i = free_rank(i) * l;
    if (i == 0)
      cycles_.push_back(Subspace::full(a_->field(), dim_i));
    else
      cycles_.push_back(Subspace::span(kernel_rows(d_[i - 1])));
    if (i == n)
      boundaries_.push_back(Subspace::zero(a_->field(), dim_i));
    else
      boundaries_.push_back(Subspace::span(transpose(d_[i])));
  }
}

std::size_t KoszulComplex::free_rank(std::size_t i) const {
  const std::size_t n = xs_.size();
  if (i > n) return 0;
  std::size_t c = 1;
  for (std::size_t t = 0; t < i; ++t) c = c * (n - t) / (t + 1);
  return c;
}

HomologyReport KoszulComplex::homology() const {
  HomologyReport rep;
  const std::size_t n = xs_.size();
  for (std::size_t i = 0; i <= n; ++i) {
    rep.dims.push_back(cycles_[i].dim() - boundaries_[i].dim());
    rep.nus.push_back(nu(SubquotientModule{a_, free_rank(i), cycles_[i], boundaries_[i]}));
  }
  rep.euler = 0;
  for (std::size_t i = 0; i <= n; ++i)
    rep.euler += (i % 2 ? -1ll : 1ll) * static_cast<long long>(rep.dims[i]);
  return rep;
}

long long KoszulComplex::euler_characteristic() const {
  long long chi = 0;
  const std::size_t n = xs_.size();
  for (std::size_t i = 0; i <= n; ++i)
    chi += (i % 2 ? -1ll : 1ll) *
           static_cast<long long>(cycles_[i].dim() - boundaries_[i].dim());
  return chi;
}

bool KoszulComplex::dd_zero() const {
  for (std::size_t i = 0; i + 1 < d_.size(); ++i)
    if (!mul(d_[i], d_[i + 1]).is_zero()) return false;
  return true;
}

bool KoszulComplex::prop7_holds() const {
  const std::size_t n = xs_.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix op = a_->mult_operator(xs_[j]);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t z = 0; z < cycles_[i].dim(); ++z) {
        auto moved = blockwise_apply(op, free_rank(i), cycles_[i].basis().row(z));
        if (!boundaries_[i].contains(moved)) return false;
      }
    }
  }
  return true;
}

void KoszulComplex::corrupt_differential() {
  if (d_.empty() || n() < 2) throw std::invalid_argument("corrupt_differential: need n >= 2");
  Matrix& d2 = d_[1];
  d2.at(0, 0) = a_->field().add(d2.at(0, 0), 1);
  compute_spaces();
}

std::vector<std::vector<std::uint32_t>> transform_basis(
    const std::vector<std::vector<std::uint32_t>>& xs, const Matrix& l) {
  const std::size_t n = xs.size();
  if (l.rows() != n || l.cols() != n)
    throw std::invalid_argument("transform_basis: matrix must be n x n");
  if (rank(l) != n) throw std::invalid_argument("transform_basis: singular transformation");
  const PrimeField& f = l.field();
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> xi(xs.empty() ? 0 : xs[0].size(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t c = l.at(i, j);
      if (!c) continue;
      for (std::size_t t = 0; t < xi.size(); ++t) xi[t] = f.add(xi[t], f.mul(c, xs[j][t]));
    }
    out.push_back(std::move(xi));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> append_zero(
    const std::vector<std::vector<std::uint32_t>>& xs, std::size_t algebra_length) {
  auto out = xs;
  out.emplace_back(algebra_length, 0);
  return out;
}

std::size_t nu_h1(const LocalAlgebra& a, const std::vector<std::vector<std::uint32_t>>& xs) {
  if (xs.empty()) return 0;
  KoszulComplex k(a, xs);
  return nu(SubquotientModule{&a, k.free_rank(1), k.cycles(1), k.boundaries(1)});
}

}  // namespace koszul
