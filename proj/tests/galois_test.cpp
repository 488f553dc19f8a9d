#include <doctest.h>

#include <algorithm>

#include "algeo/error.hpp"
#include "algeo/galois.hpp"
#include "algeo/parser.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace algeo;

TEST_CASE("solve_system examples") {
  FiniteAlgebra c2 = test::c2();

  EquationSystem empty{2, {}};
  CHECK(solve_system(c2, 2, empty).points.size() == 4);

  EquationSystem diag{2, {parse_equation("x1 = x2", c2.signature(), 2)}};
  CHECK(solve_system(c2, 2, diag).points == std::vector<Point>{{0, 0}, {1, 1}});

  EquationSystem sum{2, {parse_equation("(add x1 x2) = e", c2.signature(), 2)}};
  CHECK(solve_system(c2, 2, sum).points == std::vector<Point>{{0, 0}, {1, 1}});
}

TEST_CASE("congruence_membership examples") {
  FiniteAlgebra c2 = test::c2();
  Equation x1x2 = parse_equation("x1 = x2", c2.signature(), 2);

  CHECK(congruence_membership(c2, 2, {}, x1x2));  // empty point set: full relation

  std::vector<Point> diag{{0, 0}, {1, 1}};
  CHECK(congruence_membership(c2, 2, diag, x1x2));

  std::vector<Point> off{{0, 1}};
  CHECK(!congruence_membership(c2, 2, off, x1x2));
  Equation mixed = parse_equation("(add x1 x2) = (neg x2)", c2.signature(), 2);
  CHECK(congruence_membership(c2, 2, off, mixed));
}

TEST_CASE("system_closure_membership examples") {
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra c3 = test::c3();

  EquationSystem diag{2, {parse_equation("x1 = x2", c2.signature(), 2)}};
  CHECK(system_closure_membership(c2, 2, diag,
                                  parse_equation("(add x1 (neg x2)) = e", c2.signature(), 2)));

  EquationSystem empty1{1, {}};
  CHECK(system_closure_membership(c2, 1, empty1,
                                  parse_equation("(add x1 x1) = e", c2.signature(), 1)));
  CHECK(!system_closure_membership(c3, 1, empty1,
                                   parse_equation("(add x1 x1) = e", c3.signature(), 1)));
}

TEST_CASE("closure_of_set examples") {
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra m2 = test::m2();

  std::vector<Point> diag{{0, 0}, {1, 1}};
  CHECK(closure_of_set(c2, 2, diag).points == diag);

  std::vector<Point> single{{0, 1}};
  CHECK(closure_of_set(c2, 2, single).points == std::vector<Point>{{0, 0}, {0, 1}});

  CHECK(closure_of_set(m2, 2, {}).points == std::vector<Point>{{0, 0}, {1, 1}});
  CHECK(closure_of_set(c2, 2, {}).points == std::vector<Point>{{0, 0}});
}

TEST_CASE("is_algebraic examples") {
  FiniteAlgebra c2 = test::c2();
  CHECK(is_algebraic(c2, 1, all_points(c2, 1)));
  CHECK(!is_algebraic(c2, 1, std::vector<Point>{{1}}));
  CHECK(is_algebraic(c2, 2, std::vector<Point>{{0, 0}, {1, 1}}));
}

TEST_CASE("apply_substitution_to_point") {
  FiniteAlgebra m2 = test::m2();
  FiniteAlgebra c2 = test::c2();

  Substitution identity = identity_substitution(2);
  Point nu{1, 0};
  CHECK(apply_substitution_to_point(identity, m2, nu) == nu);

  Substitution s{1, 2, {parse_term("(meet x1 x2)", m2.signature(), 2)}};
  CHECK(apply_substitution_to_point(s, m2, nu) == Point{0});

  Substitution d{1, 1, {parse_term("(add x1 x1)", c2.signature(), 1)}};
  CHECK(apply_substitution_to_point(d, c2, Point{1}) == Point{0});
}

TEST_CASE("pullback_membership examples") {
  FiniteAlgebra c2 = test::c2();
  FiniteAlgebra c3 = test::c3();
  EquationSystem empty1{1, {}};

  Substitution id1 = identity_substitution(1);
  for (const char* eq : {"x1 = e", "(add x1 x1) = e", "(neg x1) = x1"}) {
    Equation pair = parse_equation(eq, c2.signature(), 1);
    CHECK(pullback_membership(c2, id1, empty1, pair) ==
          system_closure_membership(c2, 1, empty1, pair));
  }

  Substitution dbl{1, 1, {parse_term("(add x1 x1)", c2.signature(), 1)}};
  CHECK(pullback_membership(c2, dbl, empty1, parse_equation("y1 = e", c2.signature(), 1)));

  Substitution idc3{1, 1, {parse_term("x1", c3.signature(), 1)}};
  CHECK(!pullback_membership(c3, idc3, empty1,
                             parse_equation("(add y1 y1) = e", c3.signature(), 1)));
}

TEST_CASE("closure operator laws on all subsets (C2, n<=2)") {
  FiniteAlgebra c2 = test::c2();
  for (int n = 1; n <= 2; ++n) {
    auto space = all_points(c2, n);
    std::size_t m = space.size();
    std::vector<std::vector<Point>> closures(1ULL << m);
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
      std::vector<Point> subset;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1ULL << i)) subset.push_back(space[i]);
      auto closed = closure_of_set(c2, n, subset).points;
      CHECK(std::includes(closed.begin(), closed.end(), subset.begin(), subset.end()));
      CHECK(closure_of_set(c2, n, closed).points == closed);
      closures[mask] = std::move(closed);
    }
    for (std::uint64_t a = 0; a < (1ULL << m); ++a)
      for (std::uint64_t b = a; b < (1ULL << m); ++b) {
        if ((a & b) != a) continue;
        CHECK(std::includes(closures[b].begin(), closures[b].end(), closures[a].begin(),
                            closures[a].end()));
      }
  }
}

TEST_CASE("adding a consequence never changes the solution set") {
  FiniteAlgebra c3 = test::c3();
  test::Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    EquationSystem t = test::random_system(rng, c3.signature(), 2, 2, 3);
    Equation p = test::random_equation(rng, c3.signature(), 2, 2);
    if (!system_closure_membership(c3, 2, t, p)) continue;
    EquationSystem extended = t;
    extended.equations.push_back(p);
    CHECK(solve_system(c3, 2, extended).points == solve_system(c3, 2, t).points);
  }
}

TEST_CASE("antitone: pairs valid on a larger set stay valid on a smaller one") {
  FiniteAlgebra c2 = test::c2();
  auto classes = test::term_classes(c2, 2, 2);
  test::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::uint64_t a = static_cast<std::uint64_t>(rng.below(16));
    std::uint64_t b = a | static_cast<std::uint64_t>(rng.below(16));
    for (std::size_t c1 = 0; c1 < classes.values.size(); ++c1)
      for (std::size_t c2i = c1 + 1; c2i < classes.values.size(); ++c2i) {
        bool valid_b = true, valid_a = true;
        for (std::size_t i = 0; i < 4; ++i) {
          if ((b & (1ULL << i)) && classes.values[c1][i] != classes.values[c2i][i])
            valid_b = false;
          if ((a & (1ULL << i)) && classes.values[c1][i] != classes.values[c2i][i])
            valid_a = false;
        }
        if (valid_b) CHECK(valid_a);
      }
  }
}

TEST_CASE("pullback realizes an algebraic set over the source space") {
  FiniteAlgebra c2 = test::c2();
  test::Rng rng(2025);
  for (int i = 0; i < 25; ++i) {
    EquationSystem t = test::random_system(rng, c2.signature(), 2, 2, 3);
    Substitution s = test::random_substitution(rng, c2.signature(), 2, 2, 2);

    // B = closure of the image of T' under the dual map of s
    std::vector<Point> image;
    for (const auto& nu : solve_system(c2, 2, t).points)
      image.push_back(apply_substitution_to_point(s, c2, nu));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    AlgebraicSet b = closure_of_set(c2, 2, image);
    CHECK(is_algebraic(c2, 2, b.points));

    for (int k = 0; k < 20; ++k) {
      Equation pair = test::random_equation(rng, c2.signature(), 2, 2);
      CHECK(pullback_membership(c2, s, t, pair) ==
            congruence_membership(c2, 2, b.points, pair));
    }
  }
}

TEST_CASE("evaluating a substituted term equals evaluating at the moved point") {
  test::Rng rng(1618);
  for (const FiniteAlgebra& h : {test::c2(), test::c3(), test::m2()}) {
    for (int i = 0; i < 60; ++i) {
      Term t = test::random_term(rng, h.signature(), 2, 2);
      Substitution s = test::random_substitution(rng, h.signature(), 2, 2, 2);
      Point nu{rng.below(h.size()), rng.below(h.size())};
      Point moved = apply_substitution_to_point(s, h, nu);
      CHECK(evaluate(substitute(t, s), h, nu) == evaluate(t, h, moved));
    }
  }
}

TEST_CASE("pullback along a composition equals sequential pullback") {
  FiniteAlgebra c3 = test::c3();
  test::Rng rng(4242);
  for (int i = 0; i < 40; ++i) {
    EquationSystem t = test::random_system(rng, c3.signature(), 2, 2, 3);
    Substitution s1 = test::random_substitution(rng, c3.signature(), 2, 2, 2);  // Y -> X
    Substitution s2 = test::random_substitution(rng, c3.signature(), 2, 2, 2);  // Z -> Y
    Equation pair = test::random_equation(rng, c3.signature(), 2, 2);           // over Z

    Equation pushed{substitute(pair.lhs, s2), substitute(pair.rhs, s2)};  // over Y
    CHECK(pullback_membership(c3, compose(s1, s2), t, pair) ==
          pullback_membership(c3, s1, t, pushed));
  }
}

TEST_CASE("caps raise SizeLimitExceeded") {
  FiniteAlgebra c2 = test::c2();
  Caps tight_points;
  tight_points.max_points = 2;
  CHECK_THROWS_AS(all_points(c2, 2, tight_points), SizeLimitExceeded);

  Caps tight_product;
  tight_product.max_product = 1;
  CHECK_THROWS_AS(closure_of_set(c2, 2, std::vector<Point>{{0, 0}, {0, 1}}, tight_product),
                  SizeLimitExceeded);
}

TEST_CASE("closure past the power cap falls back to the term-function route") {
  FiniteAlgebra c2 = test::c2();
  Caps caps;
  caps.max_product = 5;  // |H|^|A| = 8 blocks the diagonal; 4 term functions fit
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    std::vector<Point> subset;
    auto space = all_points(c2, 2);
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1ULL << i)) subset.push_back(space[i]);
    if (subset.size() < 3) continue;  // small sets stay on the diagonal route
    CHECK(closure_of_set(c2, 2, subset, caps).points == closure_of_set(c2, 2, subset).points);
  }
}

TEST_CASE("two distinct constants make the empty set algebraic") {
  FiniteAlgebra pointed =
      load_algebra("algebra P2\nsize 2\nop a 0\n0\nop b 0\n1\n");
  EquationSystem clash{1, {parse_equation("a = b", pointed.signature(), 1)}};
  CHECK(solve_system(pointed, 1, clash).points.empty());
  CHECK(closure_of_set(pointed, 1, {}).points.empty());
  CHECK(is_algebraic(pointed, 1, {}));
}

TEST_CASE("ClosurePredicate answers membership from either presentation") {
  FiniteAlgebra c2 = test::c2();
  EquationSystem diag{2, {parse_equation("x1 = x2", c2.signature(), 2)}};
  ClosurePredicate from_system = ClosurePredicate::of_system(c2, 2, diag);
  CHECK(from_system.contains(parse_equation("(add x1 (neg x2)) = e", c2.signature(), 2)));

  std::vector<Point> pts{{0, 1}};
  ClosurePredicate from_points = ClosurePredicate::of_points(c2, 2, pts);
  CHECK(!from_points.contains(parse_equation("x1 = x2", c2.signature(), 2)));
}
