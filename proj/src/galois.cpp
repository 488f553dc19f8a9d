#include "algeo/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "algeo/error.hpp"

namespace algeo {

std::vector<Point> all_points(const FiniteAlgebra& h, int n, const Caps& caps) {
  if (n < 0) throw IndexOutOfRange("negative variable count");
  std::int64_t count = checked_pow(h.size(), n, caps.max_points);
  if (count > caps.max_points)
    throw SizeLimitExceeded("max_points", "point grid |H|^n exceeds " +
                                              std::to_string(caps.max_points));
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  Point p(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(p);
    int pos = n - 1;
    while (pos >= 0 && p[static_cast<std::size_t>(pos)] + 1 == h.size()) {
      p[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++p[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::string print_point(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  out += ')';
  return out;
}

std::string print_point_set(std::span<const Point> points) {
  std::string out;
  for (const auto& p : points) {
    out += print_point(p);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<Point> sorted_unique(std::span<const Point> points) {
  std::vector<Point> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_points(const FiniteAlgebra& h, int n, std::span<const Point> points) {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n)
      throw IndexOutOfRange("point " + print_point(p) + " has length " +
                            std::to_string(p.size()) + ", expected " + std::to_string(n));
    for (int c : p)
      if (c < 0 || c >= h.size())
        throw IndexOutOfRange("point " + print_point(p) + " leaves carrier 0.." +
                              std::to_string(h.size() - 1));
  }
}

bool holds_at(const FiniteAlgebra& h, const Equation& eq, const Point& p) {
  return evaluate(eq.lhs, h, p) == evaluate(eq.rhs, h, p);
}

}  // namespace

AlgebraicSet solve_system(const FiniteAlgebra& h, int n, const EquationSystem& system,
                          const Caps& caps) {
  AlgebraicSet out;
  out.var_count = n;
  for (const auto& p : all_points(h, n, caps)) {
    bool ok = true;
    for (const auto& eq : system.equations)
      if (!holds_at(h, eq, p)) {
        ok = false;
        break;
      }
    if (ok) out.points.push_back(p);
  }
  return out;
}

bool congruence_membership(const FiniteAlgebra& h, int n, std::span<const Point> a,
                           const Equation& pair) {
  check_points(h, n, a);
  for (const auto& p : a)
    if (!holds_at(h, pair, p)) return false;
  return true;
}

bool system_closure_membership(const FiniteAlgebra& h, int n, const EquationSystem& system,
                               const Equation& pair, const Caps& caps) {
  AlgebraicSet solutions = solve_system(h, n, system, caps);
  return congruence_membership(h, n, solutions.points, pair);
}

namespace {

// Fallback for |H|^|A| past the cap: saturate the coordinate projections
// inside H^(H^n) to obtain every term function, then keep the points
// respecting all pairs of functions that agree on A. Exact for finite H,
// independent of |A|.
AlgebraicSet closure_by_term_functions(const FiniteAlgebra& h, int n, std::span<const Point> a,
                                       const Caps& caps) {
  std::vector<Point> grid = all_points(h, n, caps);
  const Signature& sig = h.signature();

  std::vector<std::vector<int>> seeds;
  for (int i = 0; i < n; ++i) {
    std::vector<int> proj(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) proj[p] = grid[p][static_cast<std::size_t>(i)];
    seeds.push_back(std::move(proj));
  }
  auto apply_fn = [&](int f, const std::vector<std::vector<int>>& args) {
    std::vector<int> out(grid.size());
    std::vector<int> call(args.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
      for (std::size_t i = 0; i < args.size(); ++i) call[i] = args[i][p];
      out[p] = h.apply(f, call);
    }
    return out;
  };
  std::set<std::vector<int>> known(seeds.begin(), seeds.end());
  for (int f = 0; f < sig.size(); ++f)
    if (sig.arity(f) == 0) known.insert(apply_fn(f, {}));
  bool grew = !known.empty();
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(known.begin(), known.end());
    for (int f = 0; f < sig.size(); ++f) {
      int arity = sig.arity(f);
      if (arity == 0) continue;
      std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
      while (true) {
        std::vector<std::vector<int>> args;
        for (std::size_t j : idx) args.push_back(current[j]);
        if (known.insert(apply_fn(f, args)).second) {
          grew = true;
          if (static_cast<std::int64_t>(known.size()) > caps.max_product)
            throw SizeLimitExceeded("max_product",
                                    "term-function saturation exceeds " +
                                        std::to_string(caps.max_product) + " functions");
        }
        int pos = arity - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == current.size()) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
      }
    }
  }

  std::vector<std::size_t> members;
  for (const auto& p : a) {
    auto it = std::lower_bound(grid.begin(), grid.end(), p);
    members.push_back(static_cast<std::size_t>(it - grid.begin()));
  }
  std::vector<std::vector<int>> functions(known.begin(), known.end());
  std::vector<bool> keep(grid.size(), true);
  for (std::size_t f = 0; f < functions.size(); ++f)
    for (std::size_t g = f + 1; g < functions.size(); ++g) {
      bool valid_on_a = true;
      for (std::size_t m : members)
        if (functions[f][m] != functions[g][m]) {
          valid_on_a = false;
          break;
        }
      if (!valid_on_a) continue;
      for (std::size_t p = 0; p < grid.size(); ++p)
        if (functions[f][p] != functions[g][p]) keep[p] = false;
    }

  AlgebraicSet out;
  out.var_count = n;
  for (std::size_t p = 0; p < grid.size(); ++p)
    if (keep[p]) out.points.push_back(grid[p]);
  return out;
}

}  // namespace

AlgebraicSet closure_of_set(const FiniteAlgebra& h, int n, std::span<const Point> a,
                            const Caps& caps) {
  check_points(h, n, a);
  std::vector<Point> pts = sorted_unique(a);
  std::int64_t power = checked_pow(h.size(), static_cast<std::int64_t>(pts.size()),
                                   caps.max_product);
  if (power > caps.max_product) return closure_by_term_functions(h, n, pts, caps);

  const Signature& sig = h.signature();
  std::size_t k = pts.size();

  // Generator tuples g_i = (mu(x_i))_{mu in A} inside H^A.
  std::vector<std::vector<int>> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> g(k);
    for (std::size_t j = 0; j < k; ++j) g[j] = pts[j][static_cast<std::size_t>(i)];
    gens.push_back(std::move(g));
  }

  // D = subalgebra of H^A generated by the g_i, built by componentwise
  // saturation without materializing the power's tables.
  auto apply_tuple = [&](int f, const std::vector<std::vector<int>>& args) {
    std::vector<int> out(k);
    std::vector<int> call(args.size());
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < args.size(); ++i) call[i] = args[i][j];
      out[j] = h.apply(f, call);
    }
    return out;
  };
  std::set<std::vector<int>> known(gens.begin(), gens.end());
  for (int f = 0; f < sig.size(); ++f)
    if (sig.arity(f) == 0) known.insert(apply_tuple(f, {}));
  bool grew = !known.empty();
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(known.begin(), known.end());
    for (int f = 0; f < sig.size(); ++f) {
      int arity = sig.arity(f);
      if (arity == 0) continue;
      std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
      while (true) {
        std::vector<std::vector<int>> args;
        args.reserve(static_cast<std::size_t>(arity));
        for (std::size_t j : idx) args.push_back(current[j]);
        if (known.insert(apply_tuple(f, args)).second) grew = true;
        int pos = arity - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == current.size()) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
      }
    }
  }

  // Re-index D as a finite algebra with sorted carrier.
  std::vector<std::vector<int>> elements(known.begin(), known.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index[elements[i]] = static_cast<int>(i);
  int d_size = static_cast<int>(elements.size());

  AlgebraicSet out;
  out.var_count = n;
  if (d_size == 0) return out;  // no constants and A empty: closure is empty

  std::vector<std::vector<int>> tables;
  for (int f = 0; f < sig.size(); ++f) {
    int arity = sig.arity(f);
    std::size_t entries = 1;
    for (int i = 0; i < arity; ++i) entries *= static_cast<std::size_t>(d_size);
    std::vector<int> table(entries);
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    for (std::size_t e = 0; e < entries; ++e) {
      std::size_t rem = e;
      for (std::size_t j = static_cast<std::size_t>(arity); j-- > 0;) {
        idx[j] = rem % static_cast<std::size_t>(d_size);
        rem /= static_cast<std::size_t>(d_size);
      }
      std::vector<std::vector<int>> args;
      args.reserve(static_cast<std::size_t>(arity));
      for (std::size_t j : idx) args.push_back(elements[j]);
      table[e] = index.at(apply_tuple(f, args));
    }
    tables.push_back(std::move(table));
  }
  FiniteAlgebra d("D", sig, d_size, std::move(tables));

  std::vector<int> gen_indices;
  gen_indices.reserve(gens.size());
  for (const auto& g : gens) gen_indices.push_back(index.at(g));

  std::vector<HomMap> homs = enumerate_homs(d, h, gen_indices, caps);
  std::set<Point> closure;
  for (const auto& hom : homs) {
    Point p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      p[static_cast<std::size_t>(i)] = hom[static_cast<std::size_t>(gen_indices[static_cast<std::size_t>(i)])];
    closure.insert(std::move(p));
  }
  out.points.assign(closure.begin(), closure.end());
  return out;
}

bool is_algebraic(const FiniteAlgebra& h, int n, std::span<const Point> a, const Caps& caps) {
  AlgebraicSet closed = closure_of_set(h, n, a, caps);
  return closed.points == sorted_unique(a);
}

Point apply_substitution_to_point(const Substitution& s, const FiniteAlgebra& h, const Point& nu) {
  if (static_cast<int>(nu.size()) != s.target_vars)
    throw IndexOutOfRange("point length " + std::to_string(nu.size()) +
                          " does not match substitution target " + std::to_string(s.target_vars));
  Point out(s.images.size());
  for (std::size_t j = 0; j < s.images.size(); ++j) out[j] = evaluate(s.images[j], h, nu);
  return out;
}

bool pullback_membership(const FiniteAlgebra& h, const Substitution& s,
                         const EquationSystem& system_over_x, const Equation& pair_over_y,
                         const Caps& caps) {
  Equation pulled{substitute(pair_over_y.lhs, s), substitute(pair_over_y.rhs, s)};
  return system_closure_membership(h, s.target_vars, system_over_x, pulled, caps);
}

ClosurePredicate ClosurePredicate::of_system(const FiniteAlgebra& h, int n,
                                             const EquationSystem& system, const Caps& caps) {
  return {&h, n, solve_system(h, n, system, caps).points};
}

ClosurePredicate ClosurePredicate::of_points(const FiniteAlgebra& h, int n,
                                             std::span<const Point> a) {
  check_points(h, n, a);
  return {&h, n, sorted_unique(a)};
}

}  // namespace algeo
