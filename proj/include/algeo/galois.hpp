#pragma once

#include <span>
#include <string>
#include <vector>

#include "algeo/algebra.hpp"
#include "algeo/caps.hpp"
#include "algeo/term.hpp"

namespace algeo {

// A point of the affine space H^n: the tuple (mu(x1),...,mu(xn)) of a
// homomorphism mu from the free algebra on n variables into H.
using Point = std::vector<int>;

struct EquationSystem {
  int var_count = 0;
  std::vector<Equation> equations;
};

// A point set together with its ambient dimensions; "candidate" because
// only is_algebraic certifies it as a closure fixpoint. Points are kept
// sorted lexicographically without duplicates.
struct AlgebraicSet {
  int var_count = 0;
  std::vector<Point> points;
};

// All points of H^n in lexicographic order. Throws SizeLimitExceeded when
// |H|^n exceeds caps.max_points.
std::vector<Point> all_points(const FiniteAlgebra& h, int n, const Caps& caps = {});

std::string print_point(const Point& p);
std::string print_point_set(std::span<const Point> points);

// The solution set T' = { mu in H^n : every equation of T holds at mu }.
AlgebraicSet solve_system(const FiniteAlgebra& h, int n, const EquationSystem& system,
                          const Caps& caps = {});

// Membership of a term pair in the congruence A' = intersection of the
// kernels of the points of A: true iff lhs and rhs agree at every point.
// A = {} gives the full relation (vacuously true).
bool congruence_membership(const FiniteAlgebra& h, int n, std::span<const Point> a,
                           const Equation& pair);

// Membership of a pair in the closure T'' = (T')'; decides the
// quasi-identity with premises T and conclusion `pair` exactly for finite H.
bool system_closure_membership(const FiniteAlgebra& h, int n, const EquationSystem& system,
                               const Equation& pair, const Caps& caps = {});

// The least algebraic set A'' containing A, by the diagonal construction:
// the tuples g_i = (mu(x_i))_{mu in A} generate a subalgebra D of the power
// H^A, and A'' = { (h(g_1),...,h(g_n)) : h in Hom(D, H) }. The power is
// never materialized; D is built by tuple saturation. For A = {} the power
// is the one-element algebra and A'' consists of the constant diagonals
// over one-element subalgebras of H. When |H|^|A| exceeds caps.max_product
// the dual route is taken instead: saturate all term functions H^n -> H
// and keep the points respecting every pair of functions agreeing on A.
AlgebraicSet closure_of_set(const FiniteAlgebra& h, int n, std::span<const Point> a,
                            const Caps& caps = {});

bool is_algebraic(const FiniteAlgebra& h, int n, std::span<const Point> a, const Caps& caps = {});

// The dual action of a substitution on points: coordinate j of the result
// is s.images[j] evaluated at nu.
Point apply_substitution_to_point(const Substitution& s, const FiniteAlgebra& h, const Point& nu);

// Membership of a pair over Y in the pulled-back congruence s^{-1}(T''):
// substitutes s into both sides and tests membership in T'' over X.
bool pullback_membership(const FiniteAlgebra& h, const Substitution& s,
                         const EquationSystem& system_over_x, const Equation& pair_over_y,
                         const Caps& caps = {});

// Decidable membership test for a closed congruence, carried by its finite
// solution set (congruences on the free algebra are infinite and never
// materialized).
struct ClosurePredicate {
  const FiniteAlgebra* algebra = nullptr;
  int var_count = 0;
  std::vector<Point> solution_set;

  bool contains(const Equation& pair) const {
    return congruence_membership(*algebra, var_count, solution_set, pair);
  }

  static ClosurePredicate of_system(const FiniteAlgebra& h, int n, const EquationSystem& system,
                                    const Caps& caps = {});
  static ClosurePredicate of_points(const FiniteAlgebra& h, int n, std::span<const Point> a);
};

}  // namespace algeo
