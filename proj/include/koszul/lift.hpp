#pragma once

#include "koszul/local_algebra.hpp"

namespace koszul {

// Presentation of the same algebra A over T = k[[X_1..X_n, Y_1..Y_m]]: the
// original generators together with X_i - xi_i, where xi_i represents the
// i-th Koszul element. The ideal they generate is the kernel of
// T ->> A, X_i -> x_i, Y_j -> y_j.
struct PresentationLift {
  Presentation lifted;                     // over the X's then the Y's
  std::size_t n;                           // number of adjoined elements
  std::vector<TruncPoly> representatives;  // xi_i in the original variables
};

// Canonical representatives (the standard-monomial expansions of the x_i).
PresentationLift lift_presentation(const LocalAlgebra& a,
                                   const std::vector<std::vector<std::uint32_t>>& xs);

// Caller-chosen representatives; each must satisfy NF(rep_i) == x_i.
PresentationLift lift_presentation(const LocalAlgebra& a,
                                   const std::vector<std::vector<std::uint32_t>>& xs,
                                   const std::vector<TruncPoly>& reps);

// nu of the lifted ideal, computed by Nakayama at truncation bound+1 over T.
std::size_t lifted_ideal_min_generators(const PresentationLift& lift);

}  // namespace koszul
