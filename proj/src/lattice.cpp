#include "algeo/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "algeo/error.hpp"

namespace algeo {

namespace {

std::vector<Point> intersect(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Point> unite(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::optional<std::size_t> ClosedSetLattice::find(const std::vector<Point>& points) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == points) return i;
  return std::nullopt;
}

ClosedSetLattice enumerate_closed_sets(const FiniteAlgebra& h, int n, const Caps& caps,
                                       LatticeMode mode) {
  std::vector<Point> space = all_points(h, n, caps);
  std::size_t m = space.size();
  std::int64_t subsets = checked_pow(2, static_cast<std::int64_t>(m), caps.max_subsets);
  if (mode == LatticeMode::automatic)
    mode = subsets <= caps.max_subsets ? LatticeMode::exhaustive : LatticeMode::generators;

  std::set<std::vector<Point>> closed;
  if (mode == LatticeMode::exhaustive) {
    if (subsets > caps.max_subsets)
      throw SizeLimitExceeded("max_subsets", "exhaustive lattice mode needs 2^" +
                                                 std::to_string(m) + " subsets");
    for (std::uint64_t mask = 0; mask < static_cast<std::uint64_t>(subsets); ++mask) {
      std::vector<Point> candidate;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1ULL << i)) candidate.push_back(space[i]);
      if (is_algebraic(h, n, candidate, caps)) closed.insert(std::move(candidate));
    }
  } else {
    // Closures of singletons, saturated under join and intersection.
    closed.insert(closure_of_set(h, n, {}, caps).points);
    closed.insert(space);  // the full space is T' for T = {}
    for (const auto& p : space)
      closed.insert(closure_of_set(h, n, std::vector<Point>{p}, caps).points);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<Point>> current(closed.begin(), closed.end());
      for (std::size_t i = 0; i < current.size(); ++i)
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          if (closed.insert(intersect(current[i], current[j])).second) grew = true;
          auto join = closure_of_set(h, n, unite(current[i], current[j]), caps).points;
          if (closed.insert(std::move(join)).second) grew = true;
        }
    }
  }

  ClosedSetLattice lattice{h, n, {closed.begin(), closed.end()}};
  return lattice;
}

std::size_t lattice_meet(const ClosedSetLattice& lattice, std::size_t a, std::size_t b,
                         const Caps& caps) {
  (void)caps;
  if (a >= lattice.elements.size() || b >= lattice.elements.size())
    throw ElementNotInLattice("element index out of range");
  auto meet = intersect(lattice.elements[a], lattice.elements[b]);
  auto idx = lattice.find(meet);
  if (!idx) throw ElementNotInLattice("meet fell outside the lattice (incomplete enumeration)");
  return *idx;
}

std::size_t lattice_join(const ClosedSetLattice& lattice, std::size_t a, std::size_t b,
                         const Caps& caps) {
  if (a >= lattice.elements.size() || b >= lattice.elements.size())
    throw ElementNotInLattice("element index out of range");
  auto join = closure_of_set(lattice.algebra, lattice.var_count,
                             unite(lattice.elements[a], lattice.elements[b]), caps)
                  .points;
  auto idx = lattice.find(join);
  if (!idx) throw ElementNotInLattice("join fell outside the lattice (incomplete enumeration)");
  return *idx;
}

LawVerdict is_distributive(const ClosedSetLattice& lattice, const Caps& caps) {
  std::size_t n = lattice.elements.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t lhs = lattice_meet(lattice, a, lattice_join(lattice, b, c, caps), caps);
        std::size_t rhs = lattice_join(lattice, lattice_meet(lattice, a, b, caps),
                                       lattice_meet(lattice, a, c, caps), caps);
        if (lhs != rhs) return {false, std::array<std::size_t, 3>{a, b, c}};
      }
  return {};
}

LawVerdict is_modular(const ClosedSetLattice& lattice, const Caps& caps) {
  std::size_t n = lattice.elements.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!subset(lattice.elements[a], lattice.elements[c])) continue;
        std::size_t lhs = lattice_join(lattice, a, lattice_meet(lattice, b, c, caps), caps);
        std::size_t rhs = lattice_meet(lattice, lattice_join(lattice, a, b, caps), c, caps);
        if (lhs != rhs) return {false, std::array<std::size_t, 3>{a, b, c}};
      }
  return {};
}

namespace {

// Covering pairs a -> b (b covers a), by element index.
std::vector<std::pair<std::size_t, std::size_t>> covers(const ClosedSetLattice& lattice) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t n = lattice.elements.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !subset(lattice.elements[a], lattice.elements[b])) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (c == a || c == b) continue;
        if (subset(lattice.elements[a], lattice.elements[c]) &&
            subset(lattice.elements[c], lattice.elements[b]))
          covered = false;
      }
      if (covered) out.push_back({a, b});
    }
  return out;
}

}  // namespace

int lattice_height(const ClosedSetLattice& lattice) {
  auto edges = covers(lattice);
  std::size_t n = lattice.elements.size();
  // Longest path over the covering DAG; elements sorted so repeated sweeps
  // converge (the DAG is tiny at desk scale).
  std::vector<int> depth(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges)
      if (depth[b] < depth[a] + 1) {
        depth[b] = depth[a] + 1;
        changed = true;
      }
  }
  int best = 0;
  for (int d : depth) best = std::max(best, d);
  return best;
}

std::string export_hasse_dot(const ClosedSetLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.elements.size(); ++i)
    out << "  n" << i << " [label=\"" << i << " (" << lattice.elements[i].size() << " pts)\"];\n";
  for (auto [a, b] : covers(lattice)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_report(const ClosedSetLattice& lattice, const Caps& caps) {
  std::ostringstream out;
  out << "algebra: " << lattice.algebra.name() << "\n";
  out << "vars: " << lattice.var_count << "\n";
  out << "elements: " << lattice.elements.size() << "\n";

  auto edges = covers(lattice);
  std::vector<Point> bottom = closure_of_set(lattice.algebra, lattice.var_count, {}, caps).points;
  auto bottom_idx = lattice.find(bottom);
  std::size_t atoms = 0;
  for (auto [a, b] : edges)
    if (bottom_idx && a == *bottom_idx) ++atoms;
  out << "atoms: " << atoms << "\n";
  out << "height: " << lattice_height(lattice) << "\n";

  auto show = [&](const char* what, const LawVerdict& v) {
    out << what << ": " << (v.holds ? "true" : "false");
    if (v.witness)
      out << " (witness: " << (*v.witness)[0] << ", " << (*v.witness)[1] << ", "
          << (*v.witness)[2] << ")";
    out << "\n";
  };
  show("distributive", is_distributive(lattice, caps));
  show("modular", is_modular(lattice, caps));

  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    out << "element " << i << ": " << lattice.elements[i].size() << " point"
        << (lattice.elements[i].size() == 1 ? "" : "s") << "\n";
    for (const auto& p : lattice.elements[i]) out << "  " << print_point(p) << "\n";
  }
  return out.str();
}

}  // namespace algeo
