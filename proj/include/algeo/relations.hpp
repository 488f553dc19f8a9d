#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algeo/galois.hpp"

namespace algeo {

struct QuasiIdentity {
  int var_count = 0;
  std::vector<Equation> premises;
  Equation conclusion;
};

// All pairs (w, w') of terms enumerated to the given depth, w before w' in
// canonical order, valid at every point of H^n. Listed sorted by (w, w').
std::vector<Equation> identities_up_to(const FiniteAlgebra& h, int n, int depth,
                                       const Caps& caps = {});

// True iff every point satisfying all premises satisfies the conclusion;
// equal to system_closure_membership(premises, conclusion).
bool check_quasi_identity(const FiniteAlgebra& h, const QuasiIdentity& q, const Caps& caps = {});

struct EquivBounds {
  int max_vars = 1;
  int depth = 2;
  int system_limit = 3;
};

struct EquivWitness {
  int var_count = 0;
  std::vector<Equation> system;
  Equation pair;
  int holds_in = 0;  // 1 or 2: the algebra whose closure contains the pair
};

// Result of the bounded geometric-equivalence search. "distinguished" is
// absolute; "equivalent" only relative to the bounds used.
struct EquivalenceVerdict {
  bool distinguished = false;
  std::optional<EquivWitness> witness;
  EquivBounds bounds;
};

// Scans systems T (built from enumerated pairs, at most system_limit
// premises, ordered by total term size then lexicographically) and
// candidate pairs for a pair whose closure membership differs between the
// two algebras. Terms and pairs are deduplicated by their joint semantics
// over both algebras, which preserves both witness existence and the least
// witness. Candidate pairs follow the enumeration order: each newly
// enumerated term is paired against all earlier terms.
EquivalenceVerdict geom_equivalent_bounded(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                           const EquivBounds& bounds, const Caps& caps = {});

// The separation criterion for embedding into a finite power: h1 embeds
// into some power of h2 iff every pair of distinct elements of h1 is
// separated by a homomorphism h1 -> h2.
struct SeparationReport {
  bool forward = false;   // h1 embeds in a power of h2
  bool backward = false;  // h2 embeds in a power of h1
  std::optional<std::pair<int, int>> forward_failure;   // inseparable pair in h1
  std::optional<std::pair<int, int>> backward_failure;  // inseparable pair in h2
  bool equivalent() const { return forward && backward; }
};

SeparationReport separation_equivalence(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                        const Caps& caps = {});

// Greedy elimination: drops an equation whenever the solution set is
// unchanged. The result is an inclusion-minimal subsystem with the same
// solution set.
EquationSystem reduce_system(const FiniteAlgebra& h, int n, const EquationSystem& system,
                             const Caps& caps = {});

std::string equivalence_report(const EquivalenceVerdict& verdict, const Signature& sig);
std::string separation_text(const SeparationReport& report);

}  // namespace algeo
