#include "algeo/term.hpp"

#include <algorithm>

#include "algeo/error.hpp"

namespace algeo {

int term_height(const Term& t) {
  if (t.is_variable() || t.args.empty()) return 0;
  int h = 0;
  for (const auto& a : t.args) h = std::max(h, term_height(a));
  return h + 1;
}

int term_size(const Term& t) {
  int n = 1;
  for (const auto& a : t.args) n += term_size(a);
  return n;
}

int max_variable(const Term& t) {
  if (t.is_variable()) return t.var;
  int m = 0;
  for (const auto& a : t.args) m = std::max(m, max_variable(a));
  return m;
}

void check_term(const Term& t, const Signature& sig, int var_count) {
  if (t.is_variable()) {
    if (t.var < 1 || t.var > var_count)
      throw IndexOutOfRange("variable index " + std::to_string(t.var) + " out of range 1.." +
                            std::to_string(var_count));
    return;
  }
  if (t.symbol < 0 || t.symbol >= sig.size())
    throw UnknownSymbol("symbol index " + std::to_string(t.symbol) + " not in signature");
  if (static_cast<int>(t.args.size()) != sig.arity(t.symbol))
    throw ArityMismatch("operation '" + sig.name(t.symbol) + "' expects " +
                        std::to_string(sig.arity(t.symbol)) + " arguments, got " +
                        std::to_string(t.args.size()));
  for (const auto& a : t.args) check_term(a, sig, var_count);
}

bool term_less(const Term& a, const Term& b) {
  if (a.is_variable() != b.is_variable()) return a.is_variable();
  if (a.is_variable()) return a.var < b.var;
  if (a.symbol != b.symbol) return a.symbol < b.symbol;
  return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end(),
                                      term_less);
}

std::string print_term(const Term& t, const Signature& sig) {
  if (t.is_variable()) return "x" + std::to_string(t.var);
  const std::string& name = sig.name(t.symbol);
  if (t.args.empty()) return name;
  std::string out = "(" + name;
  for (const auto& a : t.args) {
    out += ' ';
    out += print_term(a, sig);
  }
  out += ')';
  return out;
}

std::string print_equation(const Equation& eq, const Signature& sig) {
  return print_term(eq.lhs, sig) + " = " + print_term(eq.rhs, sig);
}

Term substitute(const Term& t, const Substitution& s) {
  if (t.is_variable()) {
    if (t.var < 1 || t.var > s.source_vars)
      throw IndexOutOfRange("variable index " + std::to_string(t.var) +
                            " outside substitution source 1.." + std::to_string(s.source_vars));
    return s.images[static_cast<std::size_t>(t.var - 1)];
  }
  Term out;
  out.symbol = t.symbol;
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(substitute(a, s));
  return out;
}

Substitution identity_substitution(int var_count) {
  Substitution s;
  s.source_vars = var_count;
  s.target_vars = var_count;
  for (int i = 1; i <= var_count; ++i) s.images.push_back(Term::variable(i));
  return s;
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  if (s2.target_vars != s1.source_vars)
    throw IndexOutOfRange("substitution composition dimension mismatch: " +
                          std::to_string(s2.target_vars) + " vs " +
                          std::to_string(s1.source_vars));
  Substitution out;
  out.source_vars = s2.source_vars;
  out.target_vars = s1.target_vars;
  out.images.reserve(s2.images.size());
  for (const auto& img : s2.images) out.images.push_back(substitute(img, s1));
  return out;
}

std::vector<Term> enumerate_terms(const Signature& sig, int var_count, int depth,
                                  const Caps& caps) {
  std::vector<Term> out;
  auto push = [&](Term t) {
    if (static_cast<std::int64_t>(out.size()) >= caps.max_terms)
      throw SizeLimitExceeded("max_terms", "term enumeration exceeds " +
                                               std::to_string(caps.max_terms) + " terms");
    out.push_back(std::move(t));
  };

  // Height-0 layer: variables, then constants, already in term_less order.
  for (int i = 1; i <= var_count; ++i) push(Term::variable(i));
  for (int f = 0; f < sig.size(); ++f)
    if (sig.arity(f) == 0) push(Term::apply(f));

  std::size_t layer_begin = 0;  // first index of the previous layer
  for (int h = 1; h <= depth; ++h) {
    std::size_t layer_end = out.size();
    if (layer_begin == layer_end) break;  // previous layer empty: fixpoint
    std::vector<Term> layer;
    for (int f = 0; f < sig.size(); ++f) {
      int k = sig.arity(f);
      if (k == 0) continue;
      // Argument tuples over all terms of height < h, at least one of
      // height exactly h-1 (i.e. index >= layer_begin).
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      while (true) {
        bool fresh = false;
        for (std::size_t j : idx)
          if (j >= layer_begin) fresh = true;
        if (fresh) {
          Term t;
          t.symbol = f;
          for (std::size_t j : idx) t.args.push_back(out[j]);
          if (static_cast<std::int64_t>(out.size() + layer.size()) >= caps.max_terms)
            throw SizeLimitExceeded("max_terms", "term enumeration exceeds " +
                                                     std::to_string(caps.max_terms) + " terms");
          layer.push_back(std::move(t));
        }
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == layer_end) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
      }
    }
    // The tuple sweep runs over out[] in enumeration order, which is not the
    // structural order; each layer is sorted before being appended.
    std::sort(layer.begin(), layer.end(), term_less);
    layer_begin = layer_end;
    for (auto& t : layer) push(std::move(t));
  }
  return out;
}

}  // namespace algeo
