#include "koszul/lift.hpp"

#include <set>

namespace koszul {

PresentationLift lift_presentation(const LocalAlgebra& a,
                                   const std::vector<std::vector<std::uint32_t>>& xs) {
  std::vector<TruncPoly> reps;
  reps.reserve(xs.size());
  for (const auto& x : xs) reps.push_back(a.representative(x));
  return lift_presentation(a, xs, reps);
}

PresentationLift lift_presentation(const LocalAlgebra& a,
                                   const std::vector<std::vector<std::uint32_t>>& xs,
                                   const std::vector<TruncPoly>& reps) {
  if (reps.size() != xs.size()) throw std::invalid_argument("lift: representative count mismatch");
  const auto& pres = a.presentation();
  const std::size_t n = xs.size(), m = pres.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.in_maximal_ideal(xs[i]))
      throw InputError("lift_presentation: Koszul element outside the maximal ideal");
    if (a.normal_form(reps[i]) != xs[i])
      throw InputError("lift_presentation: representative fails the NF-consistency check");
  }

  std::set<std::string> taken(pres.vars.begin(), pres.vars.end());
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "X" + std::to_string(i + 1);
    while (taken.count(name)) name = "X" + name;
    taken.insert(name);
    vars.push_back(name);
  }
  vars.insert(vars.end(), pres.vars.begin(), pres.vars.end());

  // m_T^D maps into m_A^D = 0, so the certified bound carries over to T.
  const unsigned bound = pres.bound;
  const unsigned capacity = bound + 2;
  std::vector<TruncPoly> gens;
  for (const auto& g : pres.gens)
    gens.push_back(g.truncated(std::min(g.bound(), capacity)).rebased(n + m, n, capacity));
  for (std::size_t i = 0; i < n; ++i) {
    TruncPoly xi = TruncPoly::variable(a.field(), n + m, capacity, i);
    gens.push_back(xi - reps[i].truncated(std::min(reps[i].bound(), capacity))
                            .rebased(n + m, n, capacity));
  }
  Presentation lifted{a.field(), std::move(vars), std::move(gens), bound, true};
  return PresentationLift{std::move(lifted), n, reps};
}

std::size_t lifted_ideal_min_generators(const PresentationLift& lift) {
  return ideal_min_generators(lift.lifted);
}

}  // namespace koszul
