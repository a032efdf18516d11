#include "doctest.h"

#include "helpers.hpp"
#include "koszul/rng.hpp"
#include "koszul/tor.hpp"

using namespace koszul;

namespace {

TorInstance make_tor(std::uint32_t p, const std::vector<std::string>& vars,
                     const std::vector<std::string>& gi, const std::vector<std::string>& gj,
                     std::optional<unsigned> override_d = std::nullopt) {
  const PrimeField f(p);
  const unsigned capacity = (override_d ? *override_d : 24) + 3;
  std::vector<TruncPoly> a, b;
  for (const auto& e : gi) a.push_back(parse_poly(e, vars, f, capacity));
  for (const auto& e : gj) b.push_back(parse_poly(e, vars, f, capacity));
  return make_tor_instance(f, vars, std::move(a), std::move(b), override_d, 12);
}

}  // namespace

TEST_CASE("one-variable hand computations") {
  SUBCASE("(x^2), (x^3): (x^3)/(x^5) has length 2, one generator") {
    auto inst = make_tor(101, {"x"}, {"x^2"}, {"x^3"});
    CHECK(inst.d_i == 2);
    CHECK(inst.d_j == 3);
    CHECK(inst.d_ij == 5);
    auto ideals = tor_via_ideals(inst);
    CHECK(ideals.length == 2);
    CHECK(ideals.generators == 1);
    auto diag = tor_via_diagonal(inst);
    CHECK(diag.length == 2);
    CHECK(diag.generators == 1);
  }
  SUBCASE("I = J = (x^2): (x^2)/(x^4)") {
    auto inst = make_tor(101, {"x"}, {"x^2"}, {"x^2"});
    auto r = tor_report(inst);
    CHECK(r.ideals.length == 2);
    CHECK(r.ideals.generators == 1);
    CHECK(r.lengths_agree);
    CHECK(r.nus_agree);
  }
  SUBCASE("I = J = (x): (x)/(x^2)") {
    auto inst = make_tor(101, {"x"}, {"x"}, {"x"});
    auto r = tor_report(inst);
    CHECK(r.ideals.length == 1);
    CHECK(r.ideals.generators == 1);
  }
}

TEST_CASE("diagonal tensor factor has the product length") {
  auto inst = make_tor(101, {"x"}, {"x^2"}, {"x^3"});
  Presentation pi{inst.field, inst.vars, inst.gens_i, inst.d_i, true};
  Presentation pj{inst.field, inst.vars, inst.gens_j, inst.d_j, true};
  auto b = tensor_product(LocalAlgebra::build(pi), LocalAlgebra::build(pj));
  CHECK(b.length() == 6);
}

TEST_CASE("swapping the ideals leaves both routes invariant") {
  std::vector<std::array<std::vector<std::string>, 2>> pairs = {
      {{{"x^2"}, {"x^3"}}},
      {{{"y1^2", "y1*y2", "y2^2"}, {"y1", "y2^2"}}},
      {{{"y1^2", "y2^2"}, {"y1*y2", "y1^3", "y2^3"}}},
  };
  std::vector<std::vector<std::string>> vars = {{"x"}, {"y1", "y2"}, {"y1", "y2"}};
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    auto fwd = tor_report(make_tor(101, vars[c], pairs[c][0], pairs[c][1]));
    auto rev = tor_report(make_tor(101, vars[c], pairs[c][1], pairs[c][0]));
    CHECK(fwd.ideals.length == rev.ideals.length);
    CHECK(fwd.ideals.generators == rev.ideals.generators);
    CHECK(fwd.diagonal.length == rev.diagonal.length);
    CHECK(fwd.diagonal.generators == rev.diagonal.generators);
  }
}

TEST_CASE("n=1 shortcut: l(Tor_1) = l(R/(I+J))") {
  std::vector<std::array<std::string, 2>> pairs = {
      {"x^2", "x^3"}, {"x^2", "x^2"}, {"x^4", "x^2"}, {"x^3", "x^5"}};
  for (auto& [gi, gj] : pairs) {
    auto inst = make_tor(101, {"x"}, {gi}, {gj});
    auto r = tor_report(inst);
    // R/(I+J) for principal ideals is k[x]/(x^min)
    auto sum_alg = koszul::testing::make_algebra(101, {"x"}, {gi, gj});
    CHECK(r.ideals.length == sum_alg.length());
  }
}

TEST_CASE("two-variable pairs agree across routes; conjecture 9 slack recorded") {
  std::vector<std::array<std::vector<std::string>, 2>> pairs = {
      {{{"y1^2", "y1*y2", "y2^2"}, {"y1^2", "y1*y2", "y2^2"}}},
      {{{"y1", "y2"}, {"y1^2", "y2^2"}}},
      {{{"y1^2", "y1*y2", "y2^3"}, {"y1", "y2^2"}}},
      {{{"y1 + y2", "y1*y2"}, {"y1^2", "y2^2"}}},
  };
  for (auto& pr : pairs) {
    auto r = tor_report(make_tor(101, {"y1", "y2"}, pr[0], pr[1]));
    CHECK(r.lengths_agree);
    CHECK(r.nus_agree);
    CHECK(r.c9_slack >= 0);  // recorded as a finding, asserted only in tests
    CHECK(r.c9_met);
  }
}

TEST_CASE("I = J = m^2 in two variables: nu = nu(I/I^2)") {
  // engine-computed once, frozen: I/I^2 for I = (y1,y2)^2 needs 3 generators
  auto r = tor_report(make_tor(101, {"y1", "y2"},
                               {"y1^2", "y1*y2", "y2^2"}, {"y1^2", "y1*y2", "y2^2"}));
  CHECK(r.ideals.generators == 3);
  CHECK(r.c9_slack == 1);
}

TEST_CASE("check_conjecture9 reports slack without asserting") {
  auto r1 = check_conjecture9(make_tor(101, {"x"}, {"x^2"}, {"x^3"}));
  CHECK(r1.n == 1);
  CHECK(r1.nu == 1);
  CHECK(r1.slack == 0);
  CHECK(r1.met);
  auto r2 = check_conjecture9(make_tor(101, {"y1", "y2"},
                                       {"y1^2", "y1*y2", "y2^2"}, {"y1^2", "y1*y2", "y2^2"}));
  CHECK(r2.n == 2);
  CHECK(r2.nu == 3);
  CHECK(r2.slack == 1);
}

TEST_CASE("bound override must certify against IJ") {
  SUBCASE("too small is rejected") {
    CHECK_THROWS_AS(make_tor(101, {"x"}, {"x^2"}, {"x^3"}, 4), InputError);
  }
  SUBCASE("larger than the default is accepted and changes nothing") {
    auto def = tor_report(make_tor(101, {"x"}, {"x^2"}, {"x^3"}));
    auto over = tor_report(make_tor(101, {"x"}, {"x^2"}, {"x^3"}, 7));
    CHECK(def.ideals.length == over.ideals.length);
    CHECK(def.ideals.generators == over.ideals.generators);
    CHECK(def.diagonal.length == over.diagonal.length);
  }
}

TEST_CASE("random m-primary pairs: route agreement holds, conjecture slack recorded") {
  // seeded family: each ideal is m^D plus, sometimes, one extra form of
  // degree in [2, D-1]; route disagreement would throw out of tor_report
  SplitMix64 rng(0xABCDEF);
  for (std::uint32_t p : {2u, 101u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t m = 1 + rng.below(2);
      std::vector<std::string> vars;
      for (std::size_t i = 0; i < m; ++i) vars.push_back("y" + std::to_string(i + 1));
      auto draw_ideal = [&] {
        const unsigned d = 1 + static_cast<unsigned>(rng.below(3));
        std::vector<TruncPoly> gens;
        for (const auto& mono : enumerate_monomials(m, d))
          if (mono.degree() == d) gens.push_back(TruncPoly::from_monomial(f, m, 12, mono, 1));
        if (d >= 3 && rng.below(2) == 0) {
          TruncPoly extra(f, m, 12);
          for (int t = 0; t < 2; ++t) {
            Monomial mono(m);
            for (unsigned k = 0; k < 2; ++k) {
              const std::size_t v = rng.below(m);
              mono.exps[v] = static_cast<std::uint16_t>(mono.exps[v] + 1);
            }
            extra.add_term(mono, 1 + static_cast<std::uint32_t>(rng.below(p - 1)));
          }
          if (!extra.is_zero()) gens.push_back(extra);
        }
        return gens;
      };
      const TorInstance inst =
          make_tor_instance(f, vars, draw_ideal(), draw_ideal(), std::nullopt, 12);
      const TorReport r = tor_report(inst);
      CHECK(r.lengths_agree);
      CHECK(r.nus_agree);
      WARN(r.c9_met);  // conjectured, never asserted: a failure here is a finding
    }
  }
}

TEST_CASE("non-m-primary inputs are rejected") {
  const PrimeField f(101);
  std::vector<TruncPoly> gi = {parse_poly("y1*y2", {"y1", "y2"}, f, 15)};
  std::vector<TruncPoly> gj = {parse_poly("y1", {"y1", "y2"}, f, 15),
                               parse_poly("y2", {"y1", "y2"}, f, 15)};
  CHECK_THROWS_AS(make_tor_instance(f, {"y1", "y2"}, gi, gj, std::nullopt, 12), InputError);
}
