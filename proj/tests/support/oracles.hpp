#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "algeo/galois.hpp"

// Brute-force oracles, independent of the diagonal-construction closure:
// everything here goes through term enumeration and pointwise evaluation
// only.

namespace algeo::test {

// Value table of every enumerated term over H^n, deduplicated: one row per
// distinct function realized by a term of height <= depth.
struct TermClasses {
  std::vector<Point> points;
  std::vector<std::vector<int>> values;  // values[c][p] = class c at point p
};

TermClasses term_classes(const FiniteAlgebra& h, int n, int depth);

// Closure by pair enumeration: points satisfying every depth-bounded pair
// that is valid on `a` (the solution set of A' restricted to enumerated
// pairs). Equals the true closure when the depth suffices.
std::vector<Point> closure_by_pairs(const FiniteAlgebra& h, int n, std::span<const Point> a,
                                    const TermClasses& classes);

// Least superset of `a` among the subsets of H^n that are fixpoints of
// closure_by_pairs, by intersecting all of them.
std::vector<Point> brute_force_least_closed(const FiniteAlgebra& h, int n,
                                            std::span<const Point> a, const TermClasses& classes);

// Deterministic random generators for property tests.
struct Rng {
  std::mt19937 engine;
  explicit Rng(std::uint32_t seed) : engine(seed) {}

  int below(int n) { return static_cast<int>(engine() % static_cast<std::uint32_t>(n)); }
};

Term random_term(Rng& rng, const Signature& sig, int var_count, int max_height);
Equation random_equation(Rng& rng, const Signature& sig, int var_count, int max_height);
EquationSystem random_system(Rng& rng, const Signature& sig, int var_count, int max_height,
                             int max_equations);
Substitution random_substitution(Rng& rng, const Signature& sig, int source_vars, int target_vars,
                                 int max_height);

}  // namespace algeo::test
