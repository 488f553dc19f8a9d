#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algeo/caps.hpp"
#include "algeo/signature.hpp"
#include "algeo/term.hpp"

namespace algeo {

// A finite algebra: carrier {0..size-1} with one total operation table per
// signature symbol. The table for an arity-k symbol lists values in
// lexicographic order of argument tuples (first argument most significant).
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, Signature sig, int size, std::vector<std::vector<int>> tables);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  int size() const { return size_; }
  const std::vector<int>& table(int symbol) const {
    return tables_[static_cast<std::size_t>(symbol)];
  }

  int apply(int symbol, std::span<const int> args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
    return tables_[static_cast<std::size_t>(symbol)][idx];
  }

 private:
  std::string name_;
  Signature sig_;
  int size_;
  std::vector<std::vector<int>> tables_;
};

// Parses the algebra file format:
//   algebra NAME
//   size M
//   op NAME ARITY
//   <M^ARITY entries>
//   ...
// '#' starts a comment. Throws ParseError / TableError / EmptyCarrier.
FiniteAlgebra load_algebra(const std::string& text, const std::string& path = "<string>");

std::string print_algebra(const FiniteAlgebra& a);

// Evaluates a term bottom-up through the operation tables at the given
// point (point[i] is the value of x(i+1)).
int evaluate(const Term& t, const FiniteAlgebra& algebra, std::span<const int> point);

// Componentwise product with mixed-radix carrier encoding, first factor
// most significant. Factors must share one signature exactly.
FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors, const Caps& caps = {});

// The one-element algebra over `sig` (all tables return 0); the empty
// direct product.
FiniteAlgebra terminal_algebra(const Signature& sig);

// Signature-explicit form covering the empty factor list.
FiniteAlgebra direct_product(const Signature& sig, std::span<const FiniteAlgebra> factors,
                             const Caps& caps = {});

// Least subset of the carrier containing `generators` and all constants,
// closed under every operation.
std::vector<int> generate_subalgebra(const FiniteAlgebra& a, std::span<const int> generators);

using HomMap = std::vector<int>;  // image indexed by source element

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const HomMap& map);

// All homomorphisms a -> b in lexicographic order of their map vectors.
// With |b|^|a| <= caps.max_maps every map is tried; otherwise candidates are
// enumerated over images of `generators` (computed greedily when absent) and
// extended by closure. Throws GeneratorsInsufficient when supplied
// generators do not generate a.
std::vector<HomMap> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                   const std::optional<std::vector<int>>& generators = {},
                                   const Caps& caps = {});

}  // namespace algeo
