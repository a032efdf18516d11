#include "koszul/presentation.hpp"

namespace koszul {

Presentation make_presentation(PrimeField f, std::vector<std::string> vars,
                               std::vector<TruncPoly> gens) {
  for (const auto& g : gens) {
    if (g.nvars() != vars.size())
      throw std::invalid_argument("presentation: generator arity mismatch");
    if (g.constant_term() != 0)
      throw InputError("generator with nonzero constant term (ideal must lie in m)");
  }
  return Presentation{f, std::move(vars), std::move(gens)};
}

Subspace ideal_span_mod(const PrimeField& f, std::size_t nvars,
                        const std::vector<TruncPoly>& gens, unsigned level,
                        unsigned mu_min_deg) {
  const auto monos = enumerate_monomials(nvars, level - 1);
  SpanBuilder span(f, monos.size());
  for (const auto& g : gens) {
    if (g.bound() < level)
      throw std::invalid_argument("ideal_span_mod: generator capacity below requested level");
    const TruncPoly gt = g.bound() > level ? g.truncated(level) : g;
    if (gt.is_zero()) continue;
    for (const auto& mu : monos) {
      if (mu.degree() < mu_min_deg) continue;
      if (mu.degree() + gt.min_degree() >= level) continue;  // product truncates to zero
      span.add(gt.times_monomial(mu).to_vector(monos));
    }
  }
  return span.to_subspace();
}

bool verify_degree_bound(const Presentation& p, unsigned candidate) {
  if (candidate < 1) return false;
  const unsigned level = candidate + 1;
  const auto monos = enumerate_monomials(p.nvars(), level - 1);
  const Subspace span = ideal_span_mod(p.field, p.nvars(), p.gens, level);
  for (const auto& m : monos) {
    if (m.degree() != candidate) continue;
    std::vector<std::uint32_t> v(monos.size(), 0);
    v[static_cast<std::size_t>(monomial_index(monos, m))] = 1;
    if (!span.contains(v)) return false;
  }
  return true;
}

std::optional<unsigned> find_degree_bound(const Presentation& p, unsigned d_max) {
  for (unsigned d = 1; d <= d_max; ++d)
    if (verify_degree_bound(p, d)) return d;
  return std::nullopt;
}

Presentation certify(Presentation p, std::optional<unsigned> requested, unsigned d_max) {
  if (requested) {
    if (*requested < 1) throw InputError("bound must be at least 1");
    if (!verify_degree_bound(p, *requested))
      throw InputError("declared bound " + std::to_string(*requested) +
                       " fails the Nakayama containment check (m^D is not inside the ideal)");
    p.bound = *requested;
  } else {
    auto d = find_degree_bound(p, d_max);
    if (!d)
      throw InputError("not certified Artinian within bound " + std::to_string(d_max) +
                       " (no D with m^D inside the ideal)");
    p.bound = *d;
  }
  p.verified = true;
  return p;
}

std::size_t ideal_min_generators_at(const Presentation& p, unsigned level) {
  const Subspace ideal = ideal_span_mod(p.field, p.nvars(), p.gens, level);
  const Subspace m_ideal = ideal_span_mod(p.field, p.nvars(), p.gens, level, 1);
  return ideal.dim() - m_ideal.dim();
}

std::size_t ideal_min_generators(const Presentation& p) {
  if (!p.verified) throw std::invalid_argument("ideal_min_generators: presentation not certified");
  return ideal_min_generators_at(p, p.bound + 1);
}

}  // namespace koszul
