#include "koszul/generator.hpp"

namespace koszul {

void validate_generator_params(const GeneratorParams& p) {
  if (p.max_vars < 1 || p.max_vars > 3) throw InputError("generator: max_vars must be in [1, 3]");
  if (p.max_deg < 2 || p.max_deg > 5) throw InputError("generator: max_deg must be in [2, 5]");
  if (p.max_n > 3) throw InputError("generator: max_n must be in [0, 3]");
}

InstanceSpec random_instance(std::uint64_t seed, const PrimeField& f, const GeneratorParams& p) {
  validate_generator_params(p);

  SplitMix64 rng(seed);
  const unsigned m = 1 + static_cast<unsigned>(rng.below(p.max_vars));
  const unsigned d = 2 + static_cast<unsigned>(rng.below(p.max_deg - 1));
  unsigned r = static_cast<unsigned>(rng.below(4));
  const unsigned n = static_cast<unsigned>(rng.below(p.max_n + 1));
  if (d < 3) r = 0;  // no room for terms of degree in [2, D-1]

  InstanceSpec spec;
  spec.p = f.p();
  spec.seed = seed;
  spec.bound = d;
  for (unsigned i = 0; i < m; ++i) spec.vars.push_back("y" + std::to_string(i + 1));

  const unsigned capacity = d + 3;
  std::vector<TruncPoly> gens;
  for (const auto& mono : enumerate_monomials(m, d)) {
    if (mono.degree() != d) continue;
    gens.push_back(TruncPoly::from_monomial(f, m, capacity, mono, 1));
  }
  for (unsigned gi = 0; gi < r; ++gi) {
    const unsigned s = 1 + static_cast<unsigned>(rng.below(3));
    TruncPoly g(f, m, capacity);
    for (unsigned ti = 0; ti < s; ++ti) {
      const unsigned deg = 2 + static_cast<unsigned>(rng.below(d - 2));
      Monomial mono(m);
      for (unsigned k = 0; k < deg; ++k) {
        const std::size_t v = static_cast<std::size_t>(rng.below(m));
        mono.exps[v] = static_cast<std::uint16_t>(mono.exps[v] + 1);
      }
      const std::uint32_t coeff = 1 + static_cast<std::uint32_t>(rng.below(f.p() - 1));
      g.add_term(mono, coeff);
    }
    gens.push_back(g);
  }
  for (const auto& g : gens) spec.gen_exprs.push_back(g.to_string(spec.vars));

  // Koszul elements are k-combinations of the positive-degree standard
  // monomials, so the algebra is built before the remaining draws.
  if (n > 0) {
    Presentation pres{f, spec.vars, gens, d, true};  // m^D in the ideal by construction
    const LocalAlgebra a = LocalAlgebra::build(std::move(pres));
    for (unsigned xi = 0; xi < n; ++xi) {
      std::vector<std::uint32_t> coords(a.length(), 0);
      for (std::size_t bi = 1; bi < a.length(); ++bi)
        coords[bi] = static_cast<std::uint32_t>(rng.below(f.p()));
      spec.koszul_exprs.push_back(a.representative(coords).to_string(spec.vars));
    }
  }
  return spec;
}

}  // namespace koszul
