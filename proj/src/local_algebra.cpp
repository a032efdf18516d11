#include "koszul/local_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace koszul {

LocalAlgebra::LocalAlgebra(Presentation pres)
    : pres_(std::move(pres)),
      relations_(Subspace::zero(pres_.field, 0)),
      mideal_(Subspace::zero(pres_.field, 0)),
      mideal_sq_(Subspace::zero(pres_.field, 0)) {}

LocalAlgebra LocalAlgebra::build(Presentation pres) {
  if (!pres.verified) throw std::invalid_argument("build: presentation not certified");
  LocalAlgebra a(std::move(pres));
  const unsigned level = a.pres_.bound;
  a.pmonos_ = enumerate_monomials(a.pres_.nvars(), level - 1);
  a.relations_ = ideal_span_mod(a.field(), a.pres_.nvars(), a.pres_.gens, level);

  std::vector<bool> is_pivot(a.pmonos_.size(), false);
  for (auto c : a.relations_.pivots()) is_pivot[c] = true;
  for (std::size_t c = 0; c < a.pmonos_.size(); ++c) {
    if (is_pivot[c]) continue;
    a.basis_.push_back(a.pmonos_[c]);
    a.basis_cols_.push_back(c);
  }
  if (a.basis_.empty() || !a.basis_[0].is_one())
    throw std::logic_error("build: the unit monomial is not standard");

  const std::size_t l = a.basis_.size();
  // normal form of every ambient monomial, reused for the mult table
  std::vector<std::vector<std::uint32_t>> nf_mono(a.pmonos_.size());
  for (std::size_t c = 0; c < a.pmonos_.size(); ++c) {
    std::vector<std::uint32_t> unit(a.pmonos_.size(), 0);
    unit[c] = 1;
    auto residual = a.relations_.reduce(unit);
    std::vector<std::uint32_t> coords(l, 0);
    for (std::size_t i = 0; i < l; ++i) coords[i] = residual[a.basis_cols_[i]];
    nf_mono[c] = std::move(coords);
  }

  a.mult_.reserve(l);
  for (std::size_t i = 0; i < l; ++i) a.mult_.emplace_back(a.field(), l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i; j < l; ++j) {
      const Monomial prod = a.basis_[i] * a.basis_[j];
      std::vector<std::uint32_t> col(l, 0);
      if (prod.degree() < level) {
        const long long c = monomial_index(a.pmonos_, prod);
        col = nf_mono[static_cast<std::size_t>(c)];
      }
      for (std::size_t t = 0; t < l; ++t) {
        a.mult_[i].at(t, j) = col[t];
        a.mult_[j].at(t, i) = col[t];
      }
    }
  }

  Matrix mrows(a.field(), l > 0 ? l - 1 : 0, l);
  for (std::size_t i = 1; i < l; ++i) mrows.at(i - 1, i) = 1;
  a.mideal_ = Subspace::span(mrows);

  SpanBuilder sq(a.field(), l);
  for (std::size_t i = 1; i < l; ++i) {
    for (std::size_t j = i; j < l; ++j) {
      std::vector<std::uint32_t> col(l);
      for (std::size_t t = 0; t < l; ++t) col[t] = a.mult_[i].at(t, j);
      sq.add(col);
    }
  }
  a.mideal_sq_ = sq.to_subspace();

  a.embdim_ = 0;
  for (const auto& b : a.basis_)
    if (b.degree() == 1) ++a.embdim_;
  return a;
}

std::vector<std::vector<std::uint32_t>> LocalAlgebra::minimal_m_generators() const {
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree() != 1) continue;
    std::vector<std::uint32_t> e(length(), 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return gens;
}

std::vector<std::uint32_t> LocalAlgebra::normal_form(const TruncPoly& f) const {
  const TruncPoly ft = f.bound() > pres_.bound ? f.truncated(pres_.bound) : f;
  if (ft.bound() != pres_.bound || ft.nvars() != pres_.nvars())
    throw std::invalid_argument("normal_form: polynomial incompatible with the algebra");
  auto residual = relations_.reduce(ft.to_vector(pmonos_));
  std::vector<std::uint32_t> coords(length(), 0);
  for (std::size_t i = 0; i < length(); ++i) coords[i] = residual[basis_cols_[i]];
  return coords;
}

TruncPoly LocalAlgebra::representative(std::span<const std::uint32_t> coords) const {
  if (coords.size() != length()) throw std::invalid_argument("representative: size mismatch");
  TruncPoly r(field(), pres_.nvars(), pres_.gens.empty() ? pres_.bound + 2 : pres_.gens[0].bound());
  for (std::size_t i = 0; i < length(); ++i) r.add_term(basis_[i], coords[i]);
  return r;
}

Matrix LocalAlgebra::mult_operator(std::span<const std::uint32_t> elem) const {
  if (elem.size() != length()) throw std::invalid_argument("mult_operator: size mismatch");
  Matrix op(field(), length(), length());
  for (std::size_t i = 0; i < length(); ++i) {
    const std::uint32_t c = elem[i];
    if (!c) continue;
    for (std::size_t r = 0; r < length(); ++r)
      for (std::size_t j = 0; j < length(); ++j)
        op.at(r, j) = field().add(op.at(r, j), field().mul(c, mult_[i].at(r, j)));
  }
  return op;
}

std::vector<std::uint32_t> LocalAlgebra::multiply(std::span<const std::uint32_t> a,
                                                  std::span<const std::uint32_t> b) const {
  if (a.size() != length() || b.size() != length())
    throw std::invalid_argument("multiply: size mismatch");
  std::vector<std::uint32_t> out(length(), 0);
  for (std::size_t i = 0; i < length(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < length(); ++j) {
      if (!b[j]) continue;
      const std::uint32_t c = field().mul(a[i], b[j]);
      for (std::size_t t = 0; t < length(); ++t)
        out[t] = field().add(out[t], field().mul(c, mult_[i].at(t, j)));
    }
  }
  return out;
}

std::vector<std::uint32_t> LocalAlgebra::one_element() const {
  std::vector<std::uint32_t> e(length(), 0);
  e[0] = 1;
  return e;
}

namespace {
void check_parent(const IdealSubspace& i, const IdealSubspace& j, const char* op) {
  if (i.parent != j.parent) throw std::invalid_argument(std::string(op) + ": mismatched parents");
}
}  // namespace

IdealSubspace ideal_span(const LocalAlgebra& a,
                         const std::vector<std::vector<std::uint32_t>>& elements) {
  SpanBuilder span(a.field(), a.length());
  for (const auto& x : elements)
    for (std::size_t i = 0; i < a.length(); ++i) {
      std::vector<std::uint32_t> bx(a.length());
      for (std::size_t t = 0; t < a.length(); ++t) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < a.length(); ++j)
          acc += static_cast<std::uint64_t>(a.basis_mult_op(i).at(t, j)) * x[j];
        bx[t] = static_cast<std::uint32_t>(acc % a.field().p());
      }
      span.add(bx);
    }
  return IdealSubspace{&a, span.to_subspace()};
}

IdealSubspace ideal_product(const IdealSubspace& i, const IdealSubspace& j) {
  check_parent(i, j, "ideal_product");
  const LocalAlgebra& a = *i.parent;
  SpanBuilder span(a.field(), a.length());
  for (std::size_t u = 0; u < i.space.dim(); ++u)
    for (std::size_t w = 0; w < j.space.dim(); ++w)
      span.add(a.multiply(i.space.basis().row(u), j.space.basis().row(w)));
  return IdealSubspace{&a, span.to_subspace()};
}

IdealSubspace ideal_intersect(const IdealSubspace& i, const IdealSubspace& j) {
  check_parent(i, j, "ideal_intersect");
  return IdealSubspace{i.parent, intersect(i.space, j.space)};
}

IdealSubspace annihilator(const LocalAlgebra& a,
                          const std::vector<std::vector<std::uint32_t>>& elements) {
  Subspace result = Subspace::full(a.field(), a.length());
  for (const auto& x : elements) {
    const Matrix op = a.mult_operator(x);
    result = intersect(result, Subspace::span(kernel_rows(op)));
  }
  return IdealSubspace{&a, std::move(result)};
}

LocalAlgebra quotient_by_ideal(const LocalAlgebra& a,
                               const std::vector<std::vector<std::uint32_t>>& xs) {
  std::vector<TruncPoly> gens = a.presentation().gens;
  for (const auto& x : xs) {
    if (!a.in_maximal_ideal(x))
      throw InputError("quotient_by_ideal: unit element among the x_i");
    gens.push_back(a.representative(x));
  }
  Presentation q{a.field(), a.presentation().vars, std::move(gens), a.presentation().bound, true};
  return LocalAlgebra::build(std::move(q));
}

namespace {
std::string fresh_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += "p";
  return base;
}
}  // namespace

LocalAlgebra tensor_product(const LocalAlgebra& a1, const LocalAlgebra& a2) {
  if (a1.field() != a2.field()) throw std::invalid_argument("tensor_product: field mismatch");
  const auto& p1 = a1.presentation();
  const auto& p2 = a2.presentation();
  std::vector<std::string> vars = p1.vars;
  std::set<std::string> taken(vars.begin(), vars.end());
  for (const auto& v : p2.vars) {
    const std::string nv = fresh_name(v, taken);
    taken.insert(nv);
    vars.push_back(nv);
  }
  const unsigned bound = p1.bound + p2.bound - 1;
  const unsigned capacity = bound + 2;
  const std::size_t nvars = vars.size();
  std::vector<TruncPoly> gens;
  // generator terms above each factor's certified bound cannot change the
  // ideal (Nakayama), so truncating at D_i keeps the extension exact
  for (const auto& g : p1.gens)
    gens.push_back(g.truncated(std::min(g.bound(), p1.bound + 1)).rebased(nvars, 0, capacity));
  for (const auto& g : p2.gens)
    gens.push_back(
        g.truncated(std::min(g.bound(), p2.bound + 1)).rebased(nvars, p1.nvars(), capacity));
  // m^{D1+D2-1} subseteq I1^e + I2^e: any such monomial has first-block degree
  // >= D1 or second-block degree >= D2
  Presentation t{a1.field(), std::move(vars), std::move(gens), bound, true};
  return LocalAlgebra::build(std::move(t));
}

std::vector<std::uint32_t> blockwise_apply(const Matrix& op, std::size_t rank,
                                           std::span<const std::uint32_t> v) {
  const std::size_t l = op.cols();
  if (v.size() != rank * l) throw std::invalid_argument("blockwise_apply: size mismatch");
  std::vector<std::uint32_t> out(v.size(), 0);
  const std::uint32_t p = op.field().p();
  for (std::size_t b = 0; b < rank; ++b) {
    const std::uint32_t* in = v.data() + b * l;
    std::uint32_t* o = out.data() + b * l;
    for (std::size_t t = 0; t < l; ++t) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < l; ++j) acc += static_cast<std::uint64_t>(op.at(t, j)) * in[j];
      o[t] = static_cast<std::uint32_t>(acc % p);
    }
  }
  return out;
}

std::size_t nu(const SubquotientModule& mod) {
  const LocalAlgebra& a = *mod.algebra;
  const std::size_t zdim = mod.cycles.dim();
  SpanBuilder span(a.field(), mod.cycles.ambient());
  span.add_subspace(mod.boundaries);
  for (std::size_t zi = 0; zi < zdim && span.dim() < zdim; ++zi) {
    const auto z = mod.cycles.basis().row(zi);
    for (std::size_t bi = 1; bi < a.length(); ++bi) {
      span.add(blockwise_apply(a.basis_mult_op(bi), mod.rank, z));
      if (span.dim() >= zdim) break;
    }
  }
  return zdim - span.dim();
}

}  // namespace koszul
