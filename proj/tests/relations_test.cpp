#include <doctest.h>

#include <algorithm>

#include "algeo/error.hpp"
#include "algeo/lattice.hpp"
#include "algeo/parser.hpp"
#include "algeo/relations.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace algeo;

namespace {

bool contains_equation(const std::vector<Equation>& list, const Equation& eq) {
  return std::find(list.begin(), list.end(), eq) != list.end();
}

}  // namespace

TEST_CASE("identities_up_to fixture examples") {
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra c3 = test::c3();
  FiniteAlgebra m2 = test::m2();

  auto ids_c2 = identities_up_to(c2, 1, 2);
  CHECK(contains_equation(ids_c2, parse_equation("(add x1 x1) = e", c2.signature(), 1)));

  auto ids_m2 = identities_up_to(m2, 2, 1);
  CHECK(contains_equation(ids_m2,
                          parse_equation("(meet x1 x2) = (meet x2 x1)", m2.signature(), 2)));

  auto ids_c3 = identities_up_to(c3, 1, 2);
  CHECK(!contains_equation(ids_c3, parse_equation("(add x1 x1) = e", c3.signature(), 1)));
}

TEST_CASE("identities survive direct products") {
  FiniteAlgebra c2 = test::c2();
  std::vector<FiniteAlgebra> two{c2, c2};
  FiniteAlgebra c2c2 = direct_product(two);
  CHECK(identities_up_to(c2, 2, 2) == identities_up_to(c2c2, 2, 2));
}

TEST_CASE("identities are valid everywhere (cross-check)") {
  FiniteAlgebra c3 = test::c3();
  auto points = all_points(c3, 2);
  for (const auto& eq : identities_up_to(c3, 2, 1))
    for (const auto& p : points) CHECK(evaluate(eq.lhs, c3, p) == evaluate(eq.rhs, c3, p));
}

TEST_CASE("check_quasi_identity examples") {
  FiniteAlgebra c2 = test::c2();

  QuasiIdentity forcing{1,
                        {parse_equation("x1 = (add x1 x1)", c2.signature(), 1)},
                        parse_equation("x1 = e", c2.signature(), 1)};
  CHECK(check_quasi_identity(c2, forcing));

  QuasiIdentity unconditional{1, {}, parse_equation("x1 = e", c2.signature(), 1)};
  CHECK(!check_quasi_identity(c2, unconditional));

  for (const FiniteAlgebra& h : {test::c2(), test::c3()}) {
    QuasiIdentity symmetry{2,
                           {parse_equation("x1 = x2", h.signature(), 2)},
                           parse_equation("x2 = x1", h.signature(), 2)};
    CHECK(check_quasi_identity(h, symmetry));
  }
}

TEST_CASE("geom_equivalent_bounded distinguishes C2 from C3") {
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra c3 = test::c3();
  EquivalenceVerdict verdict = geom_equivalent_bounded(c2, c3, {1, 2, 3});
  REQUIRE(verdict.distinguished);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->system.empty());
  CHECK(print_equation(verdict.witness->pair, c2.signature()) == "(add x1 x1) = e");
  CHECK(verdict.witness->holds_in == 1);

  // the witness re-verifies via closure membership on both algebras
  EquationSystem t{verdict.witness->var_count, verdict.witness->system};
  CHECK(system_closure_membership(c2, 1, t, verdict.witness->pair));
  CHECK(!system_closure_membership(c3, 1, t, verdict.witness->pair));
}

TEST_CASE("geom_equivalent_bounded: C2 vs C2xC2 finds no witness") {
  FiniteAlgebra c2 = test::c2();
  std::vector<FiniteAlgebra> two{c2, c2};
  FiniteAlgebra c2c2 = direct_product(two);
  EquivalenceVerdict verdict = geom_equivalent_bounded(c2, c2c2, {2, 2, 3});
  CHECK(!verdict.distinguished);
}

TEST_CASE("geom_equivalent_bounded is reflexive and symmetric") {
  for (const FiniteAlgebra& h : {test::c2(), test::c3(), test::m2()}) {
    CHECK(!geom_equivalent_bounded(h, h, {2, 2, 2}).distinguished);
  }
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra c3 = test::c3();
  EquivalenceVerdict forward = geom_equivalent_bounded(c2, c3, {1, 2, 2});
  EquivalenceVerdict backward = geom_equivalent_bounded(c3, c2, {1, 2, 2});
  REQUIRE(forward.distinguished);
  REQUIRE(backward.distinguished);
  CHECK(forward.witness->pair == backward.witness->pair);
  CHECK(forward.witness->holds_in == 1);
  CHECK(backward.witness->holds_in == 2);
}

TEST_CASE("separation_equivalence examples") {
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra c3 = test::c3();
  std::vector<FiniteAlgebra> two{c2, c2};
  FiniteAlgebra c2c2 = direct_product(two);

  SeparationReport same = separation_equivalence(c2, c2);
  CHECK(same.equivalent());

  SeparationReport power = separation_equivalence(c2, c2c2);
  CHECK(power.forward);
  CHECK(power.backward);

  SeparationReport different = separation_equivalence(c2, c3);
  CHECK(!different.forward);
  REQUIRE(different.forward_failure.has_value());
  CHECK(*different.forward_failure == std::pair<int, int>{0, 1});
}

TEST_CASE("separation true implies no bounded witness (fixture cross-check)") {
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra c3 = test::c3();
  FiniteAlgebra m2 = test::m2();
  std::vector<FiniteAlgebra> two{c2, c2};
  FiniteAlgebra c2c2 = direct_product(two);

  std::vector<std::pair<const FiniteAlgebra*, const FiniteAlgebra*>> pairs{
      {&c2, &c2}, {&c2, &c2c2}, {&c2, &c3}, {&m2, &m2}, {&c3, &c3}};
  for (auto [a, b] : pairs) {
    SeparationReport separation = separation_equivalence(*a, *b);
    EquivalenceVerdict verdict = geom_equivalent_bounded(*a, *b, {2, 2, 2});
    if (separation.equivalent()) CHECK(!verdict.distinguished);
  }
}

TEST_CASE("reduce_system examples") {
  FiniteAlgebra c2 = test::c2();

  EquationSystem duplicated{2,
                            {parse_equation("x1 = x2", c2.signature(), 2),
                             parse_equation("x2 = x1", c2.signature(), 2)}};
  CHECK(reduce_system(c2, 2, duplicated).equations.size() == 1);

  EquationSystem mutual{2,
                        {parse_equation("x1 = x2", c2.signature(), 2),
                         parse_equation("(add x1 (neg x2)) = e", c2.signature(), 2)}};
  CHECK(reduce_system(c2, 2, mutual).equations.size() == 1);

  EquationSystem minimal{1, {parse_equation("x1 = e", c2.signature(), 1)}};
  CHECK(reduce_system(c2, 1, minimal).equations == minimal.equations);
}

TEST_CASE("reduce_system keeps the solution set and respects the lattice height") {
  test::Rng rng(99);
  for (const FiniteAlgebra& h : {test::c2(), test::m2()}) {
    int height = lattice_height(enumerate_closed_sets(h, 2));
    for (int i = 0; i < 40; ++i) {
      EquationSystem t = test::random_system(rng, h.signature(), 2, 2, 8);
      EquationSystem reduced = reduce_system(h, 2, t);
      CHECK(solve_system(h, 2, reduced).points == solve_system(h, 2, t).points);
      CHECK(static_cast<int>(reduced.equations.size()) <= height);
      for (const auto& eq : reduced.equations) CHECK(contains_equation(t.equations, eq));
    }
  }
}

TEST_CASE("equivalence_report formats the witness") {
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra c3 = test::c3();
  EquivalenceVerdict verdict = geom_equivalent_bounded(c2, c3, {1, 2, 3});
  std::string report = equivalence_report(verdict, c2.signature());
  CHECK(report.find("status: distinguished") != std::string::npos);
  CHECK(report.find("(add x1 x1) = e") != std::string::npos);
  CHECK(report.find("holds in: first") != std::string::npos);
}
