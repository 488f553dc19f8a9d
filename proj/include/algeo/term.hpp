#pragma once

#include <string>
#include <vector>

#include "algeo/caps.hpp"
#include "algeo/signature.hpp"

namespace algeo {

// A term of the absolutely free algebra over a signature and variables
// x1..xn. Either a variable (var > 0, 1-based index) or an application of
// the signature symbol `symbol` to `args`.
struct Term {
  int var = 0;
  int symbol = -1;
  std::vector<Term> args;

  bool is_variable() const { return var > 0; }

  static Term variable(int index) {
    Term t;
    t.var = index;
    return t;
  }
  static Term apply(int symbol_index, std::vector<Term> arguments = {}) {
    Term t;
    t.symbol = symbol_index;
    t.args = std::move(arguments);
    return t;
  }

  bool operator==(const Term&) const = default;
};

struct Equation {
  Term lhs;
  Term rhs;

  bool operator==(const Equation&) const = default;
};

// A homomorphism W(Y) -> W(X) given by the images of y1..y|Y|, each a term
// over x1..x|X|.
struct Substitution {
  int source_vars = 0;  // |Y|
  int target_vars = 0;  // |X|
  std::vector<Term> images;
};

int term_height(const Term& t);
int term_size(const Term& t);
int max_variable(const Term& t);

// Validates that every application matches its symbol's arity and every
// variable index lies in 1..var_count. Throws ArityMismatch / IndexOutOfRange.
void check_term(const Term& t, const Signature& sig, int var_count);

// Canonical structural order: variables first by index, then applications
// by symbol (declaration order), then lexicographically by arguments.
bool term_less(const Term& a, const Term& b);

std::string print_term(const Term& t, const Signature& sig);
std::string print_equation(const Equation& eq, const Signature& sig);

// Replaces every variable yj by s.images[j-1]. Throws IndexOutOfRange when a
// variable exceeds s.source_vars.
Term substitute(const Term& t, const Substitution& s);

Substitution identity_substitution(int var_count);

// Composition: (compose(s1, s2)).images[j] = substitute(s2.images[j], s1),
// so applying the result equals applying s2 then s1. Requires
// s2.target_vars == s1.source_vars.
Substitution compose(const Substitution& s1, const Substitution& s2);

// All terms of height <= depth in the canonical enumeration order: layered
// by height, each layer sorted by term_less. The depth-d output is a list
// prefix of the depth-(d+1) output. Throws SizeLimitExceeded past
// caps.max_terms.
std::vector<Term> enumerate_terms(const Signature& sig, int var_count, int depth,
                                  const Caps& caps = {});

}  // namespace algeo
