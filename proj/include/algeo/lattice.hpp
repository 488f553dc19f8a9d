#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algeo/galois.hpp"

namespace algeo {

enum class LatticeMode { automatic, exhaustive, generators };

// The lattice of algebraic sets of H^n, ordered by containment. Elements
// are sorted point lists, listed in lexicographic order; meet is
// intersection, join is the closure of the union.
struct ClosedSetLattice {
  FiniteAlgebra algebra;
  int var_count = 0;
  std::vector<std::vector<Point>> elements;

  std::optional<std::size_t> find(const std::vector<Point>& points) const;
};

// Exhaustive mode tests every subset of H^n (needs 2^(|H|^n) <=
// caps.max_subsets); generator mode closes the singleton closures under
// join and intersection. Both agree where both run.
ClosedSetLattice enumerate_closed_sets(const FiniteAlgebra& h, int n, const Caps& caps = {},
                                       LatticeMode mode = LatticeMode::automatic);

std::size_t lattice_meet(const ClosedSetLattice& lattice, std::size_t a, std::size_t b,
                         const Caps& caps = {});
std::size_t lattice_join(const ClosedSetLattice& lattice, std::size_t a, std::size_t b,
                         const Caps& caps = {});

struct LawVerdict {
  bool holds = true;
  std::optional<std::array<std::size_t, 3>> witness;  // violating (a,b,c)
};

LawVerdict is_distributive(const ClosedSetLattice& lattice, const Caps& caps = {});
LawVerdict is_modular(const ClosedSetLattice& lattice, const Caps& caps = {});

// Longest chain, counted in covering steps.
int lattice_height(const ClosedSetLattice& lattice);

// DOT digraph of the covering relation, edges upward.
std::string export_hasse_dot(const ClosedSetLattice& lattice);

// Plain-text report: elements, atoms, height, law verdicts with witnesses.
std::string lattice_report(const ClosedSetLattice& lattice, const Caps& caps = {});

}  // namespace algeo
