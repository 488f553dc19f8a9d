#include <doctest.h>

#include "algeo/error.hpp"
#include "algeo/parser.hpp"
#include "algeo/term.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace algeo;

namespace {

Signature group_sig() { return test::c2().signature(); }
Signature meet_sig() { return test::m2().signature(); }

}  // namespace

TEST_CASE("parse_term basic forms") {
  Signature sig = group_sig();
  CHECK(parse_term("x1", sig, 1) == Term::variable(1));
  CHECK(parse_term("y2", sig, 2) == Term::variable(2));

  Term expected = Term::apply(0, {Term::variable(1), Term::apply(1, {Term::variable(2)})});
  CHECK(parse_term("(add x1 (neg x2))", sig, 2) == expected);

  CHECK(parse_term("e", sig, 1) == Term::apply(2));
  CHECK(parse_term("  ( add   x1 x1 ) ", sig, 1) == Term::apply(0, {Term::variable(1), Term::variable(1)}));
}

TEST_CASE("parse_term error cases") {
  Signature sig = group_sig();
  CHECK_THROWS_AS(parse_term("(add x1)", sig, 2), ArityMismatch);
  CHECK_THROWS_AS(parse_term("add", sig, 1), ArityMismatch);
  CHECK_THROWS_AS(parse_term("(mul x1 x2)", sig, 2), UnknownSymbol);
  CHECK_THROWS_AS(parse_term("x0", sig, 2), IndexOutOfRange);
  CHECK_THROWS_AS(parse_term("x3", sig, 2), IndexOutOfRange);
  CHECK_THROWS_AS(parse_term("(add x1 x2", sig, 2), ParseError);
  CHECK_THROWS_AS(parse_term("(e)", sig, 1), ParseError);
  CHECK_THROWS_AS(parse_term("x1 x2", sig, 2), ParseError);
}

TEST_CASE("printer round-trips all enumerated terms") {
  for (const Signature& sig : {group_sig(), meet_sig()}) {
    for (const Term& t : enumerate_terms(sig, 2, 3)) {
      CAPTURE(print_term(t, sig));
      CHECK(parse_term(print_term(t, sig), sig, 2) == t);
    }
  }
}

TEST_CASE("evaluate on fixtures") {
  FiniteAlgebra m2 = test::m2();
  FiniteAlgebra c2 = test::c2();
  Term meet = parse_term("(meet x1 x2)", m2.signature(), 2);
  CHECK(evaluate(meet, m2, std::vector<int>{1, 0}) == 0);

  Term twice = parse_term("(add x1 x1)", c2.signature(), 1);
  CHECK(evaluate(twice, c2, std::vector<int>{1}) == 0);

  Term e = parse_term("e", c2.signature(), 1);
  CHECK(evaluate(e, c2, std::vector<int>{0}) == 0);
  CHECK(evaluate(e, c2, std::vector<int>{1}) == 0);

  CHECK_THROWS_AS(evaluate(Term::variable(3), c2, std::vector<int>{0, 1}), IndexOutOfRange);
}

TEST_CASE("enumerate_terms canonical order") {
  Signature gsig = group_sig();
  auto depth0 = enumerate_terms(gsig, 1, 0);
  REQUIRE(depth0.size() == 2);
  CHECK(depth0[0] == Term::variable(1));
  CHECK(depth0[1] == parse_term("e", gsig, 1));

  Signature msig = meet_sig();
  auto d1v1 = enumerate_terms(msig, 1, 1);
  REQUIRE(d1v1.size() == 2);
  CHECK(d1v1[0] == Term::variable(1));
  CHECK(d1v1[1] == parse_term("(meet x1 x1)", msig, 1));

  auto d1v2 = enumerate_terms(msig, 2, 1);
  std::vector<std::string> printed;
  for (const auto& t : d1v2) printed.push_back(print_term(t, msig));
  CHECK(printed == std::vector<std::string>{"x1", "x2", "(meet x1 x1)", "(meet x1 x2)",
                                            "(meet x2 x1)", "(meet x2 x2)"});
}

TEST_CASE("enumerate_terms is prefix-monotone in depth") {
  for (const Signature& sig : {group_sig(), meet_sig()}) {
    for (int d = 0; d < 3; ++d) {
      auto shallow = enumerate_terms(sig, 2, d);
      auto deep = enumerate_terms(sig, 2, d + 1);
      REQUIRE(shallow.size() <= deep.size());
      for (std::size_t i = 0; i < shallow.size(); ++i) CHECK(shallow[i] == deep[i]);
    }
  }
}

TEST_CASE("enumerate_terms respects the term cap") {
  Caps caps;
  caps.max_terms = 10;
  CHECK_THROWS_AS(enumerate_terms(group_sig(), 2, 2, caps), SizeLimitExceeded);
}

TEST_CASE("substitute") {
  Signature msig = meet_sig();
  Term t = parse_term("(meet y1 y1)", msig, 1);
  Substitution s{1, 2, {parse_term("(meet x1 x2)", msig, 2)}};
  CHECK(print_term(substitute(t, s), msig) == "(meet (meet x1 x2) (meet x1 x2))");

  Substitution identity = identity_substitution(2);
  for (const auto& term : enumerate_terms(msig, 2, 2)) CHECK(substitute(term, identity) == term);

  CHECK_THROWS_AS(substitute(Term::variable(2), s), IndexOutOfRange);
}

TEST_CASE("substitution composition matches sequential application") {
  Signature sig = group_sig();
  test::Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    Term t = test::random_term(rng, sig, 2, 2);
    Substitution s2 = test::random_substitution(rng, sig, 2, 3, 2);  // Y(2) -> Z(3)... t over Y
    Substitution s1 = test::random_substitution(rng, sig, 3, 2, 2);  // Z(3) -> X(2)
    CHECK(substitute(substitute(t, s2), s1) == substitute(t, compose(s1, s2)));
  }
}

TEST_CASE("parser rejects garbage with library errors only") {
  Signature sig = group_sig();
  test::Rng rng(0xFADE);
  const char charset[] = "()adnegx123 =#_";
  for (int i = 0; i < 500; ++i) {
    std::string text;
    int len = rng.below(20);
    for (int j = 0; j < len; ++j)
      text += charset[static_cast<std::size_t>(rng.below(static_cast<int>(sizeof(charset) - 1)))];
    try {
      Term t = parse_term(text, sig, 2);
      check_term(t, sig, 2);  // successful parses are well-formed
    } catch (const Error&) {
      // any library error is acceptable; anything else would escape and fail
    }
  }
}

TEST_CASE("term_less orders variables before applications") {
  Signature sig = group_sig();
  Term x1 = Term::variable(1);
  Term e = parse_term("e", sig, 1);
  Term twice = parse_term("(add x1 x1)", sig, 1);
  CHECK(term_less(x1, e));
  CHECK(term_less(x1, twice));
  CHECK(term_less(twice, e));  // add precedes e in the signature
  CHECK(!term_less(e, twice));
}
