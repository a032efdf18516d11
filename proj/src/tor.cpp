#include "koszul/tor.hpp"

namespace koszul {

namespace {

std::vector<TruncPoly> pairwise_products(const std::vector<TruncPoly>& a,
                                         const std::vector<TruncPoly>& b, unsigned capacity) {
  std::vector<TruncPoly> out;
  for (const auto& g : a)
    for (const auto& h : b) {
      TruncPoly gh = g.truncated(std::min(g.bound(), capacity)) *
                     h.truncated(std::min(h.bound(), capacity));
      out.push_back(std::move(gh));
    }
  return out;
}

}  // namespace

TorInstance make_tor_instance(PrimeField f, std::vector<std::string> vars,
                              std::vector<TruncPoly> gens_i, std::vector<TruncPoly> gens_j,
                              std::optional<unsigned> d_ij_override, unsigned d_max) {
  if (vars.empty()) throw InputError("tor: at least one variable is required");
  Presentation pi = make_presentation(f, vars, gens_i);
  Presentation pj = make_presentation(f, vars, gens_j);
  const auto di = find_degree_bound(pi, d_max);
  if (!di) throw InputError("first ideal not certified m-primary within bound " + std::to_string(d_max));
  const auto dj = find_degree_bound(pj, d_max);
  if (!dj) throw InputError("second ideal not certified m-primary within bound " + std::to_string(d_max));

  TorInstance inst{f, std::move(vars), std::move(pi.gens), std::move(pj.gens), *di, *dj,
                   *di + *dj};
  if (d_ij_override) {
    // m^{D_IJ} subseteq IJ must hold for the override: every degree-D_IJ
    // monomial lies in span{mu * g * h} at level D_IJ + 1.
    const unsigned d = *d_ij_override;
    const unsigned cap = d + 2;
    Presentation prod{f, inst.vars,
                      pairwise_products(inst.gens_i, inst.gens_j, cap),
                      0, false};
    if (!verify_degree_bound(prod, d))
      throw InputError("tor bound override " + std::to_string(d) +
                       " fails the certification against IJ");
    inst.d_ij = d;
  }
  return inst;
}

TorRoute tor_via_ideals(const TorInstance& inst) {
  const unsigned level = inst.d_ij;
  const std::size_t nvars = inst.vars.size();
  const auto monos = enumerate_monomials(nvars, level - 1);

  const Subspace span_i = ideal_span_mod(inst.field, nvars, inst.gens_i, level);
  const Subspace span_j = ideal_span_mod(inst.field, nvars, inst.gens_j, level);
  const Subspace inter = intersect(span_i, span_j);
  const auto products =
      pairwise_products(inst.gens_i, inst.gens_j, level + 1);
  const Subspace span_ij = ideal_span_mod(inst.field, nvars, products, level);

  TorRoute r;
  r.length = inter.dim() - span_ij.dim();

  // nu over the local ring: dim (I cap J) - dim (m (I cap J) + IJ)
  SpanBuilder denom(inst.field, monos.size());
  denom.add_subspace(span_ij);
  for (std::size_t zi = 0; zi < inter.dim() && denom.dim() < inter.dim(); ++zi) {
    const TruncPoly z =
        TruncPoly::from_vector(inst.field, nvars, level, monos, inter.basis().row(zi));
    for (std::size_t v = 0; v < nvars; ++v) {
      Monomial y(nvars);
      y.exps[v] = 1;
      denom.add(z.times_monomial(y).to_vector(monos));
    }
  }
  r.generators = inter.dim() - denom.dim();
  return r;
}

DiagonalSetup diagonal_setup(const TorInstance& inst) {
  const std::size_t n = inst.vars.size();
  Presentation pi{inst.field, inst.vars, inst.gens_i, inst.d_i, true};
  Presentation pj{inst.field, inst.vars, inst.gens_j, inst.d_j, true};
  const LocalAlgebra ai = LocalAlgebra::build(std::move(pi));
  const LocalAlgebra aj = LocalAlgebra::build(std::move(pj));
  LocalAlgebra b = tensor_product(ai, aj);

  const unsigned bd = b.presentation().bound;
  std::vector<std::vector<std::uint32_t>> zs;
  for (std::size_t v = 0; v < n; ++v) {
    const TruncPoly diff = TruncPoly::variable(inst.field, 2 * n, bd, v) -
                           TruncPoly::variable(inst.field, 2 * n, bd, n + v);
    zs.push_back(b.normal_form(diff));
  }
  return DiagonalSetup{std::move(b), std::move(zs)};
}

TorRoute tor_via_diagonal(const TorInstance& inst) {
  const DiagonalSetup d = diagonal_setup(inst);
  KoszulComplex k(d.tensor, d.elements);
  TorRoute r;
  r.length = k.cycles(1).dim() - k.boundaries(1).dim();
  r.generators =
      nu(SubquotientModule{&d.tensor, k.free_rank(1), k.cycles(1), k.boundaries(1)});
  return r;
}

TorReport combine_tor_routes(const TorInstance& inst, const TorRoute& ideals,
                             const TorRoute& diagonal) {
  TorReport rep;
  rep.ideals = ideals;
  rep.diagonal = diagonal;
  rep.lengths_agree = rep.ideals.length == rep.diagonal.length;
  rep.nus_agree = rep.ideals.generators == rep.diagonal.generators;
  if (!rep.lengths_agree || !rep.nus_agree)
    throw VerificationError(
        "tor routes disagree: ideal route (l=" + std::to_string(rep.ideals.length) +
        ", nu=" + std::to_string(rep.ideals.generators) +
        ") vs diagonal route (l=" + std::to_string(rep.diagonal.length) +
        ", nu=" + std::to_string(rep.diagonal.generators) + ")");
  rep.c9_slack = static_cast<long long>(rep.ideals.generators) -
                 static_cast<long long>(inst.vars.size());
  rep.c9_met = rep.c9_slack >= 0;
  return rep;
}

TorReport tor_report(const TorInstance& inst) {
  return combine_tor_routes(inst, tor_via_ideals(inst), tor_via_diagonal(inst));
}

Conjecture9Report check_conjecture9(const TorInstance& inst) {
  Conjecture9Report r;
  r.n = inst.vars.size();
  r.nu = tor_via_ideals(inst).generators;
  r.slack = static_cast<long long>(r.nu) - static_cast<long long>(r.n);
  r.met = r.slack >= 0;
  return r;
}

}  // namespace koszul
