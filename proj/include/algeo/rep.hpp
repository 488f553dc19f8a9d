#pragma once

#include <span>
#include <string>
#include <vector>

#include "algeo/caps.hpp"

namespace algeo {

// A finite group given by its multiplication table; identity and inverses
// are derived and the axioms checked on construction.
struct GroupTable {
  int size = 0;
  std::vector<int> mul;  // row-major: mul[a*size+b] = a*b
  int identity = 0;
  std::vector<int> inverse;

  int op(int a, int b) const {
    return mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) +
               static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }

  static GroupTable from_mul(int size, std::vector<int> mul);
};

// Row-major matrix over Z/m. Vectors are rows; the action is v * M.
struct ModMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  int at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(c)];
  }
  int& at(int r, int c) {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(c)];
  }
  static ModMatrix zero(int rows, int cols) { return {rows, cols, std::vector<int>(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0)}; }
  static ModMatrix identity(int n);

  bool operator==(const ModMatrix&) const = default;
};

ModMatrix mat_mul(const ModMatrix& x, const ModMatrix& y, int modulus);
ModMatrix mat_add(const ModMatrix& x, const ModMatrix& y, int modulus);
std::vector<int> row_mul(std::span<const int> v, const ModMatrix& m, int modulus);

// A two-sorted representation (V, G): V = (Z/m)^d, G a finite group acting
// on V from the right by matrices, M(g)M(h) = M(gh).
struct FiniteRepresentation {
  std::string name;
  int modulus = 2;
  int dim = 0;
  GroupTable group;
  std::vector<ModMatrix> action;  // one d x d matrix per group element

  const ModMatrix& matrix(int g) const { return action[static_cast<std::size_t>(g)]; }
};

// Throws GroupAxiomViolation / ActionNotHomomorphic on invalid data.
void validate_representation(const FiniteRepresentation& rep);

// File format:
//   rep NAME
//   modulus M
//   dim D
//   group N
//   <N*N table entries>
//   action
//   <N matrices of D*D entries, row-major>
FiniteRepresentation load_representation(const std::string& text,
                                         const std::string& path = "<string>");
std::string print_representation(const FiniteRepresentation& rep);

// Standalone group table file: "group N" followed by N*N entries.
GroupTable load_group_table(const std::string& text, const std::string& path = "<string>");

// A word over the group variables y1..y|Y|: letters +j for yj, -j for its
// inverse; the empty word is the group identity.
struct GroupWord {
  std::vector<int> letters;

  bool operator==(const GroupWord&) const = default;
};

struct GroupAlgebraTerm {
  int coeff = 0;
  GroupWord word;
};

// One summand x_i o u with u a Z/m-linear combination of group words.
struct ActionSummand {
  int module_var = 0;  // 1-based index into X
  std::vector<GroupAlgebraTerm> terms;
};

// An action-type equation's left side: sum of summands, read as "== 0".
struct ActionTerm {
  std::vector<ActionSummand> summands;
};

// Syntax: summand ("+"|"-" summand)*, summand := "x<i> * ( c1 w1 +- c2 w2 ... )",
// word := "1" | product of "y<j>" and "y<j>^-1".
ActionTerm parse_action_term(const std::string& text, int size_x, int size_y, int modulus,
                             const std::string& path = "<string>", int line = 0);

// Action system file: one action term per line, '#' comments.
std::vector<ActionTerm> parse_action_system(const std::string& text, int size_x, int size_y,
                                            int modulus, const std::string& path = "<string>");

std::string print_action_term(const ActionTerm& term);

// A point of the affine space over (V, G): module vectors for x1..x|X| and
// group elements for y1..y|Y|.
struct RepPoint {
  std::vector<std::vector<int>> module_values;
  std::vector<int> group_values;

  bool operator==(const RepPoint&) const = default;
  auto operator<=>(const RepPoint&) const = default;
};

std::string print_rep_point(const RepPoint& p);

// Evaluates the term at the point: each word maps through the group
// assignment to a matrix, coefficients weight the matrices, and module
// values multiply from the left.
std::vector<int> evaluate_action_term(const FiniteRepresentation& rep, const ActionTerm& term,
                                      const RepPoint& point);

// All points where every term of the system evaluates to the zero vector.
std::vector<RepPoint> solve_action_system(const FiniteRepresentation& rep, int size_x, int size_y,
                                          std::span<const ActionTerm> system,
                                          const Caps& caps = {});

// True iff w0 vanishes on every solution of the system (action-type closure
// membership).
bool action_closure_membership(const FiniteRepresentation& rep, int size_x, int size_y,
                               std::span<const ActionTerm> system, const ActionTerm& w0,
                               const Caps& caps = {});

// The triangular product: module V1 (+) V2; group elements are triples
// (g1, g2, phi) with phi in Hom(V2, V1) a d2 x d1 matrix, composing like
// block-upper-triangular matrices. V1 acts through g1 alone, and
// b o g = b o g2 + (b phi) o g1 for b in V2.
FiniteRepresentation triangular_product(const FiniteRepresentation& r1,
                                        const FiniteRepresentation& r2, const Caps& caps = {});

// The wreath product (V, H) wr G = (V^G, H wr G): the base group H^G twisted
// by G translating coordinates; a vector-valued function v on G moves by
// (v o (h, g))(g') = v(g' g^-1) o h(g' g^-1).
FiniteRepresentation wreath_product(const FiniteRepresentation& rep, const GroupTable& g,
                                    const Caps& caps = {});

}  // namespace algeo
