#include "doctest.h"

#include "helpers.hpp"
#include "koszul/complex.hpp"
#include "koszul/generator.hpp"
#include "koszul/oracle.hpp"

using namespace koszul;
using koszul::testing::elements;
using koszul::testing::make_algebra;

namespace {

void check_agreement(const LocalAlgebra& a, const std::vector<std::vector<std::uint32_t>>& xs) {
  REQUIRE(oracle_eligible(a, xs.size()));
  const auto oracle = brute_force_oracle(a, xs);
  KoszulComplex k(a, xs);
  const auto h = k.homology();
  CHECK(h.dims == oracle.h_dims);
  CHECK(h.nus == oracle.h_nus);
}

}  // namespace

TEST_CASE("oracle: k[y]/(y^2) over F_2, x=(y)") {
  auto a = make_algebra(2, {"y"}, {"y^2"});
  auto xs = elements(a, {"y"});
  auto r = brute_force_oracle(a, xs);
  CHECK(r.h_dims == std::vector<std::size_t>{1, 1});
  CHECK(r.h_nus == std::vector<std::size_t>{1, 1});
  check_agreement(a, xs);
}

TEST_CASE("oracle: m^2=0 over F_2, x=(y1): nu(H_1)=2 by exhausting single generators") {
  auto a = make_algebra(2, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"});
  auto xs = elements(a, {"y1"});
  auto r = brute_force_oracle(a, xs);
  CHECK(r.h_dims[1] == 2);
  CHECK(r.h_nus[1] == 2);
  check_agreement(a, xs);
}

TEST_CASE("oracle: x=(y,y) over F_2: sign degeneracy handled") {
  auto a = make_algebra(2, {"y"}, {"y^2"});
  auto xs = elements(a, {"y", "y"});
  auto r = brute_force_oracle(a, xs);
  CHECK(r.h_nus[1] == 2);
  check_agreement(a, xs);
}

TEST_CASE("oracle: tightness witnesses over F_2") {
  SUBCASE("m^2=0 in two variables with the full generating set") {
    auto a = make_algebra(2, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"});
    auto xs = elements(a, {"y1", "y2"});
    auto r = brute_force_oracle(a, xs);
    CHECK(r.h_nus[1] == 3);
    check_agreement(a, xs);
  }
  SUBCASE("m^2=0 in three variables with x=(y1,y2): nu(H_1)=5") {
    auto a = make_algebra(2, {"y1", "y2", "y3"},
                          {"y1^2", "y1*y2", "y1*y3", "y2^2", "y2*y3", "y3^2"});
    auto xs = elements(a, {"y1", "y2"});
    auto r = brute_force_oracle(a, xs);
    CHECK(r.h_dims[1] == 5);
    CHECK(r.h_nus[1] == 5);
    check_agreement(a, xs);
  }
}

TEST_CASE("oracle agreement across every eligible small F_2 instance shape") {
  // all F_2 algebras of length <= 4 reachable from these presentations,
  // against a spread of Koszul element choices
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> algebras = {
      {{"y"}, {"y^2"}},
      {{"y"}, {"y^3"}},
      {{"y"}, {"y^4"}},
      {{"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"}},
      {{"y1", "y2"}, {"y1^2", "y2^2"}},
      {{"y1", "y2"}, {"y1^2", "y1*y2", "y2^3"}},
  };
  for (auto& [vars, gens] : algebras) {
    auto a = make_algebra(2, vars, gens);
    REQUIRE(a.length() <= 4);
    // single elements: every element of m
    for (std::uint32_t bits = 0; bits < (1u << (a.length() - 1)); ++bits) {
      std::vector<std::uint32_t> x(a.length(), 0);
      for (std::size_t i = 1; i < a.length(); ++i) x[i] = (bits >> (i - 1)) & 1;
      check_agreement(a, {x});
    }
    // a few pairs
    for (std::uint32_t b1 = 0; b1 < (1u << (a.length() - 1)); b1 += 2) {
      std::vector<std::uint32_t> x1(a.length(), 0), x2(a.length(), 0);
      for (std::size_t i = 1; i < a.length(); ++i) {
        x1[i] = (b1 >> (i - 1)) & 1;
        x2[i] = ((b1 + 1) >> (i - 1)) & 1;
      }
      check_agreement(a, {x1, x2});
    }
  }
}

TEST_CASE("oracle sweep over seeded random F_2 instances") {
  // scan generated instances and cross-check every oracle-eligible one
  const PrimeField f(2);
  GeneratorParams gp;
  gp.max_vars = 2;
  gp.max_deg = 4;
  gp.max_n = 2;
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 400 && checked < 40; ++seed) {
    const InstanceSpec spec = random_instance(seed, f, gp);
    const CompiledInstance ci = compile_instance(spec, 12);
    if (!oracle_eligible(ci.algebra, ci.xs.size())) continue;
    ++checked;
    check_agreement(ci.algebra, ci.xs);
  }
  CHECK(checked == 40);
}

TEST_CASE("oracle guards") {
  auto big = make_algebra(2, {"y"}, {"y^5"});
  CHECK_FALSE(oracle_eligible(big, 1));
  CHECK_THROWS_AS(brute_force_oracle(big, elements(big, {"y"})), std::invalid_argument);
  auto a101 = make_algebra(101, {"y"}, {"y^2"});
  CHECK_FALSE(oracle_eligible(a101, 1));
}
