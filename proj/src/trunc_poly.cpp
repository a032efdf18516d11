#include "koszul/trunc_poly.hpp"

#include <stdexcept>

namespace koszul {

TruncPoly TruncPoly::constant(PrimeField f, std::size_t nvars, unsigned bound, std::uint32_t c) {
  TruncPoly p(f, nvars, bound);
  p.add_term(Monomial(nvars), c % f.p());
  return p;
}

TruncPoly TruncPoly::variable(PrimeField f, std::size_t nvars, unsigned bound, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Monomial m(nvars);
  m.exps[index] = 1;
  return from_monomial(f, nvars, bound, m, 1);
}

TruncPoly TruncPoly::from_monomial(PrimeField f, std::size_t nvars, unsigned bound,
                                   const Monomial& m, std::uint32_t c) {
  TruncPoly p(f, nvars, bound);
  p.add_term(m, c % f.p());
  return p;
}

std::uint32_t TruncPoly::constant_term() const { return coeff(Monomial(nvars_)); }

std::uint32_t TruncPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

unsigned TruncPoly::min_degree() const {
  return terms_.empty() ? bound_ : terms_.begin()->first.degree();
}

void TruncPoly::add_term(const Monomial& m, std::uint32_t c) {
  if (c % f_.p() == 0) return;
  if (m.exps.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (m.degree() >= bound_) return;
  auto [it, fresh] = terms_.try_emplace(m, 0);
  it->second = f_.add(it->second, c % f_.p());
  if (it->second == 0) terms_.erase(it);
}

void TruncPoly::check_compatible(const TruncPoly& o, const char* op) const {
  if (f_ != o.f_) throw std::invalid_argument(std::string(op) + ": field mismatch");
  if (nvars_ != o.nvars_) throw std::invalid_argument(std::string(op) + ": variable count mismatch");
  if (bound_ != o.bound_) throw std::invalid_argument(std::string(op) + ": bound mismatch");
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
  check_compatible(o, "poly add");
  TruncPoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const {
  check_compatible(o, "poly sub");
  TruncPoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, f_.neg(c));
  return r;
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly r(f_, nvars_, bound_);
  for (const auto& [m, c] : terms_) r.add_term(m, f_.neg(c));
  return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
  check_compatible(o, "poly mul");
  TruncPoly r(f_, nvars_, bound_);
  for (const auto& [ma, ca] : terms_) {
    if (ma.degree() >= bound_) continue;
    for (const auto& [mb, cb] : o.terms_) {
      if (ma.degree() + mb.degree() >= bound_) break;  // graded order: later terms only grow
      r.add_term(ma * mb, f_.mul(ca, cb));
    }
  }
  return r;
}

bool TruncPoly::operator==(const TruncPoly& o) const {
  return f_ == o.f_ && nvars_ == o.nvars_ && bound_ == o.bound_ && terms_ == o.terms_;
}

TruncPoly TruncPoly::times_monomial(const Monomial& m) const {
  TruncPoly r(f_, nvars_, bound_);
  for (const auto& [mm, c] : terms_) r.add_term(mm * m, c);
  return r;
}

TruncPoly TruncPoly::scaled(std::uint32_t c) const {
  TruncPoly r(f_, nvars_, bound_);
  for (const auto& [m, cc] : terms_) r.add_term(m, f_.mul(cc, c));
  return r;
}

TruncPoly TruncPoly::truncated(unsigned new_bound) const {
  if (new_bound > bound_) throw std::invalid_argument("truncated: cannot raise the bound");
  TruncPoly r(f_, nvars_, new_bound);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

TruncPoly TruncPoly::rebased(std::size_t new_nvars, std::size_t var_offset,
                             unsigned new_bound) const {
  if (var_offset + nvars_ > new_nvars) throw std::invalid_argument("rebased: variables overflow");
  TruncPoly r(f_, new_nvars, new_bound);
  for (const auto& [m, c] : terms_) {
    Monomial mm(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) mm.exps[var_offset + i] = m.exps[i];
    r.add_term(mm, c);
  }
  return r;
}

std::vector<std::uint32_t> TruncPoly::to_vector(const std::vector<Monomial>& basis) const {
  std::vector<std::uint32_t> v(basis.size(), 0);
  for (const auto& [m, c] : terms_) {
    const long long i = monomial_index(basis, m);
    if (i < 0) throw std::invalid_argument("to_vector: monomial outside the coordinate basis");
    v[static_cast<std::size_t>(i)] = c;
  }
  return v;
}

TruncPoly TruncPoly::from_vector(PrimeField f, std::size_t nvars, unsigned bound,
                                 const std::vector<Monomial>& basis,
                                 std::span<const std::uint32_t> coords) {
  if (coords.size() != basis.size()) throw std::invalid_argument("from_vector: size mismatch");
  TruncPoly r(f, nvars, bound);
  for (std::size_t i = 0; i < basis.size(); ++i) r.add_term(basis[i], coords[i]);
  return r;
}

std::string TruncPoly::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (m.is_one()) {
      s += std::to_string(c);
    } else if (c == 1) {
      s += monomial_to_string(m, vars);
    } else {
      s += std::to_string(c) + "*" + monomial_to_string(m, vars);
    }
  }
  return s;
}

}  // namespace koszul
