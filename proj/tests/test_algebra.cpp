#include "doctest.h"

#include "helpers.hpp"
#include "koszul/rng.hpp"

using namespace koszul;
using koszul::testing::elements;
using koszul::testing::make_algebra;
using koszul::testing::make_pres;

TEST_CASE("verify_degree_bound") {
  const PrimeField f(101);
  SUBCASE("(y^2): m^2 = (y^2)") {
    auto p = make_pres(101, {"y"}, {"y^2"});
    CHECK(p.bound == 2);
  }
  SUBCASE("(y^3): D=2 fails, D=3 passes") {
    const std::vector<std::string> vars = {"y"};
    std::vector<TruncPoly> gens = {parse_poly("y^3", vars, f, 8)};
    Presentation p = make_presentation(f, vars, gens);
    CHECK_FALSE(verify_degree_bound(p, 2));
    CHECK(verify_degree_bound(p, 3));
  }
  SUBCASE("(y1, y2): A = k at D=1") {
    auto p = make_pres(101, {"y1", "y2"}, {"y1", "y2"});
    CHECK(p.bound == 1);
  }
}

TEST_CASE("find_degree_bound") {
  const PrimeField f(101);
  SUBCASE("(y^2 - y^3) certifies at 2 (1-y is a unit)") {
    auto p = make_pres(101, {"y"}, {"y^2 - y^3"});
    CHECK(p.bound == 2);
  }
  SUBCASE("(y1^2, y1*y2, y2^2) certifies at 2") {
    auto p = make_pres(101, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"});
    CHECK(p.bound == 2);
  }
  SUBCASE("(y1*y2) is not Artinian for any bound") {
    const std::vector<std::string> vars = {"y1", "y2"};
    std::vector<TruncPoly> gens = {parse_poly("y1*y2", vars, f, 15)};
    Presentation p = make_presentation(f, vars, gens);
    CHECK_FALSE(find_degree_bound(p, 12).has_value());
    CHECK_THROWS_AS(certify(p, std::nullopt, 12), InputError);
  }
}

TEST_CASE("build_algebra worked examples") {
  SUBCASE("k[y]/(y^3)") {
    auto a = make_algebra(101, {"y"}, {"y^3"});
    CHECK(a.length() == 3);
    REQUIRE(a.basis().size() == 3);
    CHECK(a.basis()[0].is_one());
    CHECK(a.basis()[1].degree() == 1);
    CHECK(a.basis()[2].degree() == 2);
    CHECK(a.embdim() == 1);
  }
  SUBCASE("k[y1,y2]/(y1,y2)^2") {
    auto a = make_algebra(101, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"});
    CHECK(a.length() == 3);
    CHECK(a.embdim() == 2);
  }
  SUBCASE("k[y]/(y^2 - y^3) at bound 2 has length 2") {
    auto a = make_algebra(101, {"y"}, {"y^2 - y^3"}, 2);
    CHECK(a.length() == 2);
    CHECK(a.embdim() == 1);
  }
}

TEST_CASE("normal form is idempotent and multiplicative; mult ops commute") {
  for (auto& spec : std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>{
           {{"y"}, {"y^4"}},
           {{"y1", "y2"}, {"y1^2", "y1*y2", "y2^3"}},
           {{"y1", "y2"}, {"y1^2 - y2^2", "y1*y2", "y2^4"}}}) {
    auto a = make_algebra(101, spec.first, spec.second);
    const auto& pres = a.presentation();
    const std::size_t l = a.length();
    for (std::size_t i = 0; i < l; ++i) {
      // NF fixes its own output: representative of a basis vector maps back
      std::vector<std::uint32_t> e(l, 0);
      e[i] = 1;
      CHECK(a.normal_form(a.representative(e)) == e);
      for (std::size_t j = 0; j < l; ++j) {
        std::vector<std::uint32_t> v(l, 0);
        v[j] = 1;
        // NF(fg) = NF(NF(f) NF(g)) on basis pairs
        const TruncPoly direct =
            TruncPoly::from_monomial(pres.field, pres.nvars(), pres.bound, a.basis()[i], 1) *
            TruncPoly::from_monomial(pres.field, pres.nvars(), pres.bound, a.basis()[j], 1);
        CHECK(a.normal_form(direct) == a.multiply(e, v));
        // commuting operators
        CHECK(mul(a.basis_mult_op(i), a.basis_mult_op(j)) ==
              mul(a.basis_mult_op(j), a.basis_mult_op(i)));
      }
    }
  }
}

TEST_CASE("power-ideal lengths match the closed form") {
  // l(k[y_1..y_m]/m^D) = C(m + D - 1, m)
  auto binom = [](std::size_t n, std::size_t k) {
    std::size_t c = 1;
    for (std::size_t t = 0; t < k; ++t) c = c * (n - t) / (t + 1);
    return c;
  };
  for (std::size_t m = 1; m <= 3; ++m)
    for (unsigned d = 1; d <= 4; ++d) {
      std::vector<std::string> vars;
      for (std::size_t i = 0; i < m; ++i) vars.push_back("y" + std::to_string(i + 1));
      std::vector<std::string> gens;
      for (const auto& mono : enumerate_monomials(m, d))
        if (mono.degree() == d) gens.push_back(monomial_to_string(mono, vars));
      auto a = make_algebra(101, vars, gens);
      CHECK(a.length() == binom(m + d - 1, m));
      CHECK(a.presentation().bound == d);
    }
}

TEST_CASE("length and basis are stable when the truncation level grows") {
  auto base = make_pres(101, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^3"});
  auto a = LocalAlgebra::build(base);
  Presentation higher = base;
  higher.bound = base.bound + 1;  // still certified: larger D keeps m^D in I
  auto b = LocalAlgebra::build(higher);
  CHECK(a.length() == b.length());
  CHECK(a.basis() == b.basis());
  CHECK(a.embdim() == b.embdim());
}

TEST_CASE("Nakayama consistency: nu(I) stable under raising the level") {
  for (auto& gens : std::vector<std::vector<std::string>>{
           {"y1^2", "y1*y2", "y2^3"}, {"y1^2 - y2^3", "y1*y2", "y2^4"}, {"y1", "y2^2"}}) {
    auto p = make_pres(101, {"y1", "y2"}, gens);
    CHECK(ideal_min_generators_at(p, p.bound + 1) == ideal_min_generators_at(p, p.bound + 2));
  }
}

TEST_CASE("nu of subquotients") {
  SUBCASE("Z = B gives 0") {
    auto a = make_algebra(101, {"y"}, {"y^3"});
    SubquotientModule m{&a, 1, a.maximal_ideal(), a.maximal_ideal()};
    CHECK(nu(m) == 0);
  }
  SUBCASE("m of k[y1,y2]/(y1,y2)^2 needs 2 generators") {
    auto a = make_algebra(101, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"});
    SubquotientModule m{&a, 1, a.maximal_ideal(), Subspace::zero(a.field(), a.length())};
    CHECK(nu(m) == 2);
  }
  SUBCASE("(y^3)/(y^5) inside k[y]/(y^6) is cyclic") {
    auto a = make_algebra(101, {"y"}, {"y^6"});
    auto z = ideal_span(a, elements(a, {"y^3"}));
    auto b = ideal_span(a, elements(a, {"y^5"}));
    CHECK(nu(SubquotientModule{&a, 1, z.space, b.space}) == 1);
  }
}

TEST_CASE("ideal arithmetic") {
  auto a = make_algebra(101, {"y"}, {"y^6"});
  SUBCASE("(y^2) cap (y^3) = (y^3)") {
    auto i2 = ideal_span(a, elements(a, {"y^2"}));
    auto i3 = ideal_span(a, elements(a, {"y^3"}));
    auto inter = ideal_intersect(i2, i3);
    CHECK(inter.space == i3.space);
  }
  SUBCASE("Ann(y) in k[y]/(y^3) is (y^2)") {
    auto b = make_algebra(101, {"y"}, {"y^3"});
    auto ann = annihilator(b, elements(b, {"y"}));
    auto y2 = ideal_span(b, elements(b, {"y^2"}));
    CHECK(ann.dim() == 1);
    CHECK(ann.space == y2.space);
  }
  SUBCASE("I * (1) = I") {
    auto i = ideal_span(a, elements(a, {"y^2", "y^4"}));
    auto u = ideal_span(a, {a.one_element()});
    CHECK(ideal_product(i, u).space == i.space);
  }
  SUBCASE("property: IJ inside I cap J inside I and J; all closed under the action") {
    SplitMix64 rng(17);
    auto b = make_algebra(5, {"y1", "y2"}, {"y1^3", "y1*y2", "y2^3"});
    auto closed = [&](const IdealSubspace& s) {
      for (std::size_t bi = 0; bi < b.length(); ++bi)
        for (std::size_t r = 0; r < s.space.dim(); ++r)
          if (!s.space.contains(apply(b.basis_mult_op(bi), s.space.basis().row(r)))) return false;
      return true;
    };
    for (int trial = 0; trial < 20; ++trial) {
      auto pick = [&] {
        std::vector<std::vector<std::uint32_t>> els;
        for (int k = 0; k < 2; ++k) {
          std::vector<std::uint32_t> v(b.length(), 0);
          for (std::size_t i = 1; i < b.length(); ++i)
            v[i] = static_cast<std::uint32_t>(rng.below(5));
          els.push_back(v);
        }
        return ideal_span(b, els);
      };
      auto i = pick(), j = pick();
      auto prod = ideal_product(i, j);
      auto inter = ideal_intersect(i, j);
      CHECK(inter.space.contains(prod.space));
      CHECK(i.space.contains(inter.space));
      CHECK(j.space.contains(inter.space));
      CHECK(closed(i));
      CHECK(closed(prod));
      CHECK(closed(inter));
      CHECK(closed(annihilator(b, {i.space.dim() ? std::vector<std::uint32_t>(
                                                       i.space.basis().row(0).begin(),
                                                       i.space.basis().row(0).end())
                                                 : b.zero_element()})));
    }
  }
}

TEST_CASE("quotient_by_ideal") {
  SUBCASE("A/(0) keeps the length") {
    auto a = make_algebra(101, {"y"}, {"y^3"});
    auto q = quotient_by_ideal(a, {a.zero_element()});
    CHECK(q.length() == a.length());
    CHECK(q.basis() == a.basis());
  }
  SUBCASE("(k[y]/(y^3))/(y) = k") {
    auto a = make_algebra(101, {"y"}, {"y^3"});
    auto q = quotient_by_ideal(a, elements(a, {"y"}));
    CHECK(q.length() == 1);
  }
  SUBCASE("(k[y1,y2]/m^2)/(y1) = k[y2]/(y2^2)") {
    auto a = make_algebra(101, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"});
    auto q = quotient_by_ideal(a, elements(a, {"y1"}));
    CHECK(q.length() == 2);
    CHECK(q.embdim() == 1);
  }
  SUBCASE("units are rejected") {
    auto a = make_algebra(101, {"y"}, {"y^3"});
    CHECK_THROWS_AS(quotient_by_ideal(a, {a.one_element()}), InputError);
  }
}

TEST_CASE("tensor_product") {
  SUBCASE("A tensor k keeps A") {
    auto a = make_algebra(101, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"});
    auto k = make_algebra(101, {"z"}, {"z"});
    auto t = tensor_product(a, k);
    CHECK(t.length() == a.length());
    CHECK(t.embdim() == a.embdim());
  }
  SUBCASE("k[x]/(x^2) tensor k[x]/(x^3) has length 6") {
    auto a1 = make_algebra(101, {"x"}, {"x^2"});
    auto a2 = make_algebra(101, {"x"}, {"x^3"});
    auto t = tensor_product(a1, a2);
    CHECK(t.length() == 6);
    CHECK(t.presentation().vars == std::vector<std::string>{"x", "xp"});
  }
  SUBCASE("property: length multiplies, embdim adds") {
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> algebras = {
        {{"y"}, {"y^4"}},
        {{"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"}},
        {{"y1", "y2"}, {"y1^3", "y1*y2", "y2^2"}}};
    for (auto& s1 : algebras)
      for (auto& s2 : algebras) {
        auto a1 = make_algebra(3, s1.first, s1.second);
        auto a2 = make_algebra(3, s2.first, s2.second);
        auto t = tensor_product(a1, a2);
        CHECK(t.length() == a1.length() * a2.length());
        CHECK(t.embdim() == a1.embdim() + a2.embdim());
      }
  }
  SUBCASE("field mismatch throws") {
    auto a1 = make_algebra(3, {"y"}, {"y^2"});
    auto a2 = make_algebra(5, {"y"}, {"y^2"});
    CHECK_THROWS_AS(tensor_product(a1, a2), std::invalid_argument);
  }
}

TEST_CASE("maximal ideal structure") {
  auto a = make_algebra(101, {"y1", "y2"}, {"y1^2", "y1*y2", "y2^3"});
  CHECK(a.maximal_ideal().dim() == a.length() - 1);
  CHECK(a.embdim() == a.maximal_ideal().dim() - a.maximal_ideal_square().dim());
  // m is closed under the action: b * m lies in m for every basis element b
  for (std::size_t i = 0; i < a.length(); ++i)
    for (std::size_t j = 0; j < a.maximal_ideal().dim(); ++j) {
      auto moved = apply(a.basis_mult_op(i), a.maximal_ideal().basis().row(j));
      CHECK(a.maximal_ideal().contains(moved));
    }
}
