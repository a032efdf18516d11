#include "doctest.h"

#include "koszul/parser.hpp"
#include "koszul/rng.hpp"

using namespace koszul;

namespace {

TruncPoly random_poly(PrimeField f, SplitMix64& rng, std::size_t nvars, unsigned bound,
                      bool zero_constant = false) {
  TruncPoly g(f, nvars, bound);
  const auto monos = enumerate_monomials(nvars, bound - 1);
  for (const auto& m : monos) {
    if (zero_constant && m.is_one()) continue;
    if (rng.below(3) == 0) g.add_term(m, static_cast<std::uint32_t>(rng.below(f.p())));
  }
  return g;
}

}  // namespace

TEST_CASE("monomial enumeration: counts and order") {
  auto one_var = enumerate_monomials(1, 2);
  REQUIRE(one_var.size() == 3);  // 1, y, y^2
  CHECK(one_var[0].degree() == 0);
  CHECK(one_var[1].exps == std::vector<std::uint16_t>{1});
  CHECK(one_var[2].exps == std::vector<std::uint16_t>{2});

  CHECK(enumerate_monomials(2, 2).size() == 6);  // C(4, 2)
  CHECK(enumerate_monomials(3, 0).size() == 1);

  // graded-lex in two variables: 1, y1, y2, y1^2, y1*y2, y2^2
  auto two = enumerate_monomials(2, 2);
  std::vector<std::vector<std::uint16_t>> expect = {{0, 0}, {1, 0}, {0, 1},
                                                    {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t i = 0; i < 6; ++i) CHECK(two[i].exps == expect[i]);
  for (std::size_t i = 0; i + 1 < 6; ++i) CHECK(graded_lex_less(two[i], two[i + 1]));
}

TEST_CASE("truncated multiplication") {
  PrimeField f(101);
  SUBCASE("y*y with D=2 is 0") {
    auto y = TruncPoly::variable(f, 1, 2, 0);
    CHECK((y * y).is_zero());
  }
  SUBCASE("(1+y)(1-y) with D=3 is 1 - y^2") {
    auto one = TruncPoly::constant(f, 1, 3, 1);
    auto y = TruncPoly::variable(f, 1, 3, 0);
    auto prod = (one + y) * (one - y);
    CHECK(prod.constant_term() == 1);
    Monomial y2(1);
    y2.exps[0] = 2;
    CHECK(prod.coeff(y2) == 100);  // -1 mod 101
    Monomial y1(1);
    y1.exps[0] = 1;
    CHECK(prod.coeff(y1) == 0);
  }
  SUBCASE("f * 1 = f") {
    SplitMix64 rng(5);
    auto g = random_poly(f, rng, 2, 4);
    CHECK(g * TruncPoly::constant(f, 2, 4, 1) == g);
  }
  SUBCASE("bound mismatch throws") {
    auto a = TruncPoly::variable(f, 1, 2, 0);
    auto b = TruncPoly::variable(f, 1, 3, 0);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
  }
}

TEST_CASE("parser examples") {
  PrimeField f101(101);
  const std::vector<std::string> vars = {"y1", "y2"};
  SUBCASE("direct reading") {
    auto g = parse_poly("y1^2 + 3*y1*y2", vars, f101, 5);
    Monomial a(2), b(2);
    a.exps = {2, 0};
    b.exps = {1, 1};
    CHECK(g.coeff(a) == 1);
    CHECK(g.coeff(b) == 3);
    CHECK(g.terms().size() == 2);
  }
  SUBCASE("negative coefficients normalize into [0, p)") {
    PrimeField f5(5);
    auto g = parse_poly("y1 - y2", vars, f5, 5);
    Monomial a(2), b(2);
    a.exps = {1, 0};
    b.exps = {0, 1};
    CHECK(g.coeff(a) == 1);
    CHECK(g.coeff(b) == 4);
  }
  SUBCASE("zero literal") { CHECK(parse_poly("0", vars, f101, 5).is_zero()); }
  SUBCASE("parenthesized expressions and powers") {
    auto g = parse_poly("(y1 + y2)*(y1 + y2)", vars, f101, 5);
    Monomial ab(2);
    ab.exps = {1, 1};
    CHECK(g.coeff(ab) == 2);
  }
  SUBCASE("syntax error carries a position") {
    try {
      parse_poly("y1 + * y2", vars, f101, 5);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position == 5);
    }
  }
  SUBCASE("unknown variable") {
    CHECK_THROWS_AS(parse_poly("y1 + z", vars, f101, 5), ParseError);
  }
  SUBCASE("no implicit multiplication") {
    CHECK_THROWS_AS(parse_poly("2 y1", vars, f101, 5), ParseError);
  }
}

TEST_CASE("property: ring laws inside the truncation") {
  for (std::uint32_t p : {2u, 5u, 101u}) {
    PrimeField f(p);
    SplitMix64 rng(p * 31);
    for (int trial = 0; trial < 25; ++trial) {
      const unsigned bound = 2 + static_cast<unsigned>(rng.below(4));
      auto a = random_poly(f, rng, 2, bound);
      auto b = random_poly(f, rng, 2, bound);
      auto c = random_poly(f, rng, 2, bound);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("property: parse of canonical print is the identity") {
  PrimeField f(101);
  SplitMix64 rng(321);
  const std::vector<std::string> vars = {"y1", "y2", "y3"};
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_poly(f, rng, 3, 4);
    CHECK(parse_poly(g.to_string(vars), vars, f, 4) == g);
  }
}

TEST_CASE("property: any product of D maximal-ideal elements vanishes") {
  PrimeField f(5);
  SplitMix64 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned bound = 2 + static_cast<unsigned>(rng.below(3));
    auto acc = TruncPoly::constant(f, 2, bound, 1);
    for (unsigned i = 0; i < bound; ++i) acc = acc * random_poly(f, rng, 2, bound, true);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("coordinate encoding is linear and invertible") {
  PrimeField f(5);
  const auto basis = enumerate_monomials(1, 2);  // 1, y, y^2
  auto y = TruncPoly::variable(f, 1, 3, 0);
  CHECK(y.to_vector(basis) == std::vector<std::uint32_t>{0, 1, 0});
  TruncPoly g = TruncPoly::constant(f, 1, 3, 2);
  Monomial y2(1);
  y2.exps[0] = 2;
  g.add_term(y2, 1);
  CHECK(g.to_vector(basis) == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(TruncPoly(f, 1, 3).to_vector(basis) == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(TruncPoly::from_vector(f, 1, 3, basis, g.to_vector(basis)) == g);
}
