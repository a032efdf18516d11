#include "koszul/invariants.hpp"

#include <string>

namespace koszul {

long long cid_presentation(const Presentation& pres) {
  return static_cast<long long>(ideal_min_generators(pres)) -
         static_cast<long long>(pres.nvars());
}

long long cid_deviation(const LocalAlgebra& a) {
  const auto gens = a.minimal_m_generators();
  if (gens.empty()) return 0;  // A = k
  KoszulComplex k(a, gens);
  const long long dim_h1 =
      static_cast<long long>(k.cycles(1).dim()) - static_cast<long long>(k.boundaries(1).dim());
  return dim_h1 - static_cast<long long>(gens.size());
}

CidReport cid_report(const LocalAlgebra& a) {
  CidReport r;
  r.via_presentation = cid_presentation(a.presentation());
  r.via_deviation = cid_deviation(a);
  r.embdim = a.embdim();
  r.agree = r.via_presentation == r.via_deviation;
  if (!r.agree)
    throw VerificationError("cid routes disagree: presentation " +
                            std::to_string(r.via_presentation) + " vs deviation " +
                            std::to_string(r.via_deviation));
  if (r.via_presentation < 0)
    throw VerificationError("cid came out negative: " + std::to_string(r.via_presentation));
  return r;
}

TheoremReport check_main_theorem(const LocalAlgebra& a,
                                 const std::vector<std::vector<std::uint32_t>>& xs) {
  if (xs.empty()) {
    HomologyReport trivial;
    trivial.dims = {a.length()};
    trivial.nus = {1};
    trivial.euler = static_cast<long long>(a.length());
    return check_main_theorem(a, xs, trivial);
  }
  KoszulComplex k(a, xs);
  return check_main_theorem(a, xs, k.homology());
}

TheoremReport check_main_theorem(const LocalAlgebra& a,
                                 const std::vector<std::vector<std::uint32_t>>& xs,
                                 const HomologyReport& h) {
  TheoremReport r;
  r.n = xs.size();
  r.nu_h1 = r.n >= 1 ? h.nus.at(1) : 0;
  r.cid_a = cid_presentation(a.presentation());
  const LocalAlgebra abar = quotient_by_ideal(a, xs);
  r.cid_abar = cid_presentation(abar.presentation());
  r.bound = static_cast<long long>(r.n) + r.cid_a - r.cid_abar;
  r.slack = static_cast<long long>(r.nu_h1) - r.bound;
  r.conjecture10_met = r.nu_h1 >= r.n;
  r.conjecture10_slack = static_cast<long long>(r.nu_h1) - static_cast<long long>(r.n);
  if (r.slack < 0)
    throw VerificationError("main theorem bound violated: nu(H_1) = " + std::to_string(r.nu_h1) +
                            " < " + std::to_string(r.bound) + " = n + cid(A) - cid(A/(x))");
  return r;
}

Conjecture10Report check_conjecture10(const LocalAlgebra& a,
                                      const std::vector<std::vector<std::uint32_t>>& xs) {
  Conjecture10Report r;
  r.n = xs.size();
  r.nu_h1 = xs.empty() ? 0 : nu_h1(a, xs);
  r.slack = static_cast<long long>(r.nu_h1) - static_cast<long long>(r.n);
  r.met = r.slack >= 0;
  return r;
}

namespace {

// Evaluate a monomial of the lifted ring at (x_1..x_n, y_1..y_m) inside A.
std::vector<std::uint32_t> evaluate_monomial(const LocalAlgebra& a,
                                             const std::vector<std::vector<std::uint32_t>>& images,
                                             const Monomial& mono) {
  auto acc = a.one_element();
  for (std::size_t v = 0; v < mono.exps.size(); ++v)
    for (std::uint16_t e = 0; e < mono.exps[v]; ++e) acc = a.multiply(acc, images[v]);
  return acc;
}

}  // namespace

LiftReport check_lift_invariance(const LocalAlgebra& a,
                                 const std::vector<std::vector<std::uint32_t>>& xs) {
  const PresentationLift lift = lift_presentation(a, xs);
  const std::size_t n = lift.n, m = a.presentation().nvars();
  LiftReport r;
  r.nu_lifted_ideal = lifted_ideal_min_generators(lift);
  r.cid_lifted = static_cast<long long>(r.nu_lifted_ideal) - static_cast<long long>(n + m);

  const long long cid_a = cid_presentation(a.presentation());
  r.identity_ok =
      static_cast<long long>(r.nu_lifted_ideal) == cid_a + static_cast<long long>(n + m);
  r.cid_invariant = r.cid_lifted == cid_a;

  // Isomorphism: evaluate the lifted standard monomials in A and check the
  // map is bijective and multiplicative on basis pairs.
  const LocalAlgebra lifted = LocalAlgebra::build(lift.lifted);
  r.iso_ok = lifted.length() == a.length();
  if (r.iso_ok) {
    std::vector<std::vector<std::uint32_t>> images;  // lifted variable -> element of A
    for (std::size_t i = 0; i < n; ++i) images.push_back(xs[i]);
    for (std::size_t j = 0; j < m; ++j)
      images.push_back(
          a.normal_form(TruncPoly::variable(a.field(), m, a.presentation().bound, j)));

    const std::size_t l = a.length();
    std::vector<std::vector<std::uint32_t>> phi(lifted.length());
    Matrix phi_mat(a.field(), lifted.length(), l);
    for (std::size_t i = 0; i < lifted.length(); ++i) {
      phi[i] = evaluate_monomial(a, images, lifted.basis()[i]);
      phi_mat.set_row(i, phi[i]);
    }
    if (rank(phi_mat) != l) r.iso_ok = false;
    for (std::size_t i = 0; i < lifted.length() && r.iso_ok; ++i)
      for (std::size_t j = i; j < lifted.length() && r.iso_ok; ++j) {
        auto ei = lifted.zero_element(), ej = lifted.zero_element();
        ei[i] = 1;
        ej[j] = 1;
        const auto prod = lifted.multiply(ei, ej);
        std::vector<std::uint32_t> lhs(l, 0);
        for (std::size_t t = 0; t < lifted.length(); ++t) {
          if (!prod[t]) continue;
          for (std::size_t c = 0; c < l; ++c)
            lhs[c] = a.field().add(lhs[c], a.field().mul(prod[t], phi[t][c]));
        }
        if (lhs != a.multiply(phi[i], phi[j])) r.iso_ok = false;
      }
  }

  if (!r.iso_ok)
    throw VerificationError("lifted presentation is not isomorphic to the source algebra");
  if (!r.identity_ok)
    throw VerificationError("lift identity nu(a) = cid(A) + n + m violated: nu(a) = " +
                            std::to_string(r.nu_lifted_ideal) + ", cid(A) = " +
                            std::to_string(cid_a) + ", n + m = " + std::to_string(n + m));
  if (!r.cid_invariant)
    throw VerificationError("cid not invariant under presentation lift");
  return r;
}

}  // namespace koszul
