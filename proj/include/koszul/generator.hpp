#pragma once

#include "koszul/instance.hpp"
#include "koszul/rng.hpp"

namespace koszul {

struct GeneratorParams {
  unsigned max_vars = 3;  // m in [1, max_vars], max_vars <= 3
  unsigned max_deg = 5;   // D in [2, max_deg], max_deg in [2, 5]
  unsigned max_n = 3;     // n in [0, max_n], max_n <= 3
};

// Seeded random instance. Draw order (one splitmix64 stream, fixed):
//   1. m = 1 + next % max_vars
//   2. D = 2 + next % (max_deg - 1)
//   3. r = next % 4                   (forced to 0 when D < 3)
//   4. n = next % (max_n + 1)
//   5. per extra generator: s = 1 + next % 3 terms, each term
//      (deg = 2 + next % (D - 2); deg variable picks, next % m each;
//       coefficient 1 + next % (p - 1))
//   6. after the algebra is built: per Koszul element, one coefficient
//      next % p for every positive-degree standard monomial in basis order.
// The ideal always contains every monomial of degree exactly D, so the bound
// D is certified by construction.
InstanceSpec random_instance(std::uint64_t seed, const PrimeField& f, const GeneratorParams& p);

// Throws InputError when a range is outside the supported envelope.
void validate_generator_params(const GeneratorParams& p);

}  // namespace koszul
