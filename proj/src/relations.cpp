#include "algeo/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "algeo/error.hpp"

namespace algeo {

std::vector<Equation> identities_up_to(const FiniteAlgebra& h, int n, int depth,
                                       const Caps& caps) {
  std::vector<Term> terms = enumerate_terms(h.signature(), n, depth, caps);
  std::vector<Point> points = all_points(h, n, caps);

  // Group terms by value vector over H^n; identities are pairs within a group.
  std::map<std::vector<int>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::vector<int> values;
    values.reserve(points.size());
    for (const auto& p : points) values.push_back(evaluate(terms[i], h, p));
    classes[values].push_back(i);
  }

  std::int64_t count = 0;
  for (const auto& [values, members] : classes) {
    std::int64_t m = static_cast<std::int64_t>(members.size());
    count += m * (m - 1) / 2;
    if (count > caps.max_pairs)
      throw SizeLimitExceeded("max_pairs", "identity listing exceeds " +
                                               std::to_string(caps.max_pairs) + " pairs");
  }

  std::vector<Equation> out;
  out.reserve(static_cast<std::size_t>(count));
  for (const auto& [values, members] : classes)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Term& a = terms[members[i]];
        const Term& b = terms[members[j]];
        if (term_less(a, b))
          out.push_back({a, b});
        else
          out.push_back({b, a});
      }
  std::sort(out.begin(), out.end(), [](const Equation& a, const Equation& b) {
    if (a.lhs != b.lhs) return term_less(a.lhs, b.lhs);
    return term_less(a.rhs, b.rhs);
  });
  return out;
}

bool check_quasi_identity(const FiniteAlgebra& h, const QuasiIdentity& q, const Caps& caps) {
  EquationSystem premises{q.var_count, q.premises};
  return system_closure_membership(h, q.var_count, premises, q.conclusion, caps);
}

namespace {

// A candidate pair with its joint validity signature: the solution sets
// over both algebras, as bitmasks over the respective point grids.
struct CandidatePair {
  Equation equation;
  std::vector<bool> sol1;
  std::vector<bool> sol2;
  int size = 0;
};

std::vector<bool> and_mask(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

bool valid_on(const std::vector<bool>& pair_solutions, const std::vector<bool>& set_mask) {
  for (std::size_t i = 0; i < set_mask.size(); ++i)
    if (set_mask[i] && !pair_solutions[i]) return false;
  return true;
}

}  // namespace

EquivalenceVerdict geom_equivalent_bounded(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                           const EquivBounds& bounds, const Caps& caps) {
  if (h1.signature() != h2.signature())
    throw SignatureMismatch("geometric equivalence between '" + h1.name() + "' and '" +
                            h2.name() + "': signatures differ");
  EquivalenceVerdict verdict;
  verdict.bounds = bounds;

  for (int k = 1; k <= bounds.max_vars; ++k) {
    std::vector<Term> terms = enumerate_terms(h1.signature(), k, bounds.depth, caps);
    std::vector<Point> points1 = all_points(h1, k, caps);
    std::vector<Point> points2 = all_points(h2, k, caps);

    // Deduplicate terms by joint value vectors, keeping the first
    // representative in enumeration order.
    std::vector<std::size_t> reps;
    std::vector<std::vector<int>> rep_values1, rep_values2;
    {
      std::map<std::pair<std::vector<int>, std::vector<int>>, bool> seen;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        std::vector<int> v1, v2;
        v1.reserve(points1.size());
        v2.reserve(points2.size());
        for (const auto& p : points1) v1.push_back(evaluate(terms[i], h1, p));
        for (const auto& p : points2) v2.push_back(evaluate(terms[i], h2, p));
        auto key = std::make_pair(v1, v2);
        if (!seen.emplace(key, true).second) continue;
        reps.push_back(i);
        rep_values1.push_back(std::move(v1));
        rep_values2.push_back(std::move(v2));
      }
    }

    // Candidate pairs in enumeration order: each new representative against
    // all earlier ones; the equation is oriented by the canonical term order.
    std::vector<CandidatePair> candidates;
    for (std::size_t j = 0; j < reps.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        CandidatePair c;
        const Term& a = terms[reps[i]];
        const Term& b = terms[reps[j]];
        c.equation = term_less(a, b) ? Equation{a, b} : Equation{b, a};
        c.size = term_size(a) + term_size(b);
        c.sol1.resize(points1.size());
        c.sol2.resize(points2.size());
        for (std::size_t p = 0; p < points1.size(); ++p)
          c.sol1[p] = rep_values1[i][p] == rep_values1[j][p];
        for (std::size_t p = 0; p < points2.size(); ++p)
          c.sol2[p] = rep_values2[i][p] == rep_values2[j][p];
        candidates.push_back(std::move(c));
      }

    // System building blocks: pairs deduplicated by joint solution sets.
    std::vector<std::size_t> sys_pairs;
    {
      std::map<std::pair<std::vector<bool>, std::vector<bool>>, bool> seen;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (seen.emplace(std::make_pair(candidates[i].sol1, candidates[i].sol2), true).second)
          sys_pairs.push_back(i);
    }

    // Systems: index subsets of size <= system_limit, ordered by total term
    // size then lexicographically.
    std::vector<std::vector<std::size_t>> systems{{}};
    std::vector<std::vector<std::size_t>> frontier{{}};
    for (int round = 1; round <= bounds.system_limit; ++round) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& base : frontier) {
        std::size_t start = base.empty() ? 0 : base.back() + 1;
        for (std::size_t i = start; i < sys_pairs.size(); ++i) {
          auto sys = base;
          sys.push_back(i);
          next.push_back(sys);
          if (static_cast<std::int64_t>(systems.size() + next.size()) >
              caps.max_scanned_systems)
            throw SizeLimitExceeded("max_scanned_systems",
                                    "equivalence search scans too many systems");
        }
      }
      systems.insert(systems.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    auto system_size = [&](const std::vector<std::size_t>& sys) {
      int total = 0;
      for (std::size_t i : sys) total += candidates[sys_pairs[i]].size;
      return total;
    };
    std::stable_sort(systems.begin(), systems.end(),
                     [&](const auto& a, const auto& b) {
                       int sa = system_size(a), sb = system_size(b);
                       if (sa != sb) return sa < sb;
                       return a < b;
                     });

    std::map<std::pair<std::vector<bool>, std::vector<bool>>, bool> solution_seen;
    for (const auto& sys : systems) {
      std::vector<bool> mask1(points1.size(), true), mask2(points2.size(), true);
      for (std::size_t i : sys) {
        mask1 = and_mask(mask1, candidates[sys_pairs[i]].sol1);
        mask2 = and_mask(mask2, candidates[sys_pairs[i]].sol2);
      }
      // Distinct systems with identical joint solution sets test the same
      // memberships; skip repeats.
      if (!solution_seen.emplace(std::make_pair(mask1, mask2), true).second) continue;
      for (const auto& c : candidates) {
        bool v1 = valid_on(c.sol1, mask1);
        bool v2 = valid_on(c.sol2, mask2);
        if (v1 == v2) continue;
        EquivWitness witness;
        witness.var_count = k;
        for (std::size_t i : sys) witness.system.push_back(candidates[sys_pairs[i]].equation);
        witness.pair = c.equation;
        witness.holds_in = v1 ? 1 : 2;
        verdict.distinguished = true;
        verdict.witness = std::move(witness);
        return verdict;
      }
    }
  }
  return verdict;
}

SeparationReport separation_equivalence(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                        const Caps& caps) {
  if (h1.signature() != h2.signature())
    throw SignatureMismatch("separation criterion between '" + h1.name() + "' and '" +
                            h2.name() + "': signatures differ");
  SeparationReport report;
  auto direction = [&](const FiniteAlgebra& a, const FiniteAlgebra& b,
                       std::optional<std::pair<int, int>>& failure) {
    std::vector<HomMap> homs = enumerate_homs(a, b, {}, caps);
    for (int x = 0; x < a.size(); ++x)
      for (int y = x + 1; y < a.size(); ++y) {
        bool separated = false;
        for (const auto& hom : homs)
          if (hom[static_cast<std::size_t>(x)] != hom[static_cast<std::size_t>(y)]) {
            separated = true;
            break;
          }
        if (!separated) {
          failure = {x, y};
          return false;
        }
      }
    return true;
  };
  report.forward = direction(h1, h2, report.forward_failure);
  report.backward = direction(h2, h1, report.backward_failure);
  return report;
}

EquationSystem reduce_system(const FiniteAlgebra& h, int n, const EquationSystem& system,
                             const Caps& caps) {
  AlgebraicSet target = solve_system(h, n, system, caps);
  std::vector<Equation> kept = system.equations;
  // Drop duplicates first so the greedy pass sees each equation once.
  std::vector<Equation> deduped;
  for (const auto& eq : kept) {
    bool dup = false;
    for (const auto& other : deduped)
      if (other == eq) dup = true;
    if (!dup) deduped.push_back(eq);
  }
  kept = std::move(deduped);

  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Equation> trial;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) trial.push_back(kept[j]);
    EquationSystem t{n, trial};
    if (solve_system(h, n, t, caps).points == target.points)
      kept = std::move(trial);  // equation redundant; do not advance
    else
      ++i;
  }
  return {n, kept};
}

std::string equivalence_report(const EquivalenceVerdict& verdict, const Signature& sig) {
  std::ostringstream out;
  out << "status: " << (verdict.distinguished ? "distinguished" : "equivalent-up-to-bound")
      << "\n";
  out << "bounds: vars=" << verdict.bounds.max_vars << " depth=" << verdict.bounds.depth
      << " system-limit=" << verdict.bounds.system_limit << "\n";
  if (verdict.witness) {
    out << "witness vars: " << verdict.witness->var_count << "\n";
    out << "witness system:" << (verdict.witness->system.empty() ? " (empty)" : "") << "\n";
    for (const auto& eq : verdict.witness->system)
      out << "  " << print_equation(eq, sig) << "\n";
    out << "witness pair: " << print_equation(verdict.witness->pair, sig) << "\n";
    out << "holds in: " << (verdict.witness->holds_in == 1 ? "first" : "second") << " algebra only\n";
  }
  return out.str();
}

std::string separation_text(const SeparationReport& report) {
  std::ostringstream out;
  auto show = [&](const char* label, bool ok, const std::optional<std::pair<int, int>>& failure) {
    out << label << ": " << (ok ? "true" : "false");
    if (failure)
      out << " (inseparable pair: " << failure->first << ", " << failure->second << ")";
    out << "\n";
  };
  show("separation first->second", report.forward, report.forward_failure);
  show("separation second->first", report.backward, report.backward_failure);
  out << "separation equivalent: " << (report.equivalent() ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace algeo
