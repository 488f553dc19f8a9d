#include "algeo/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "algeo/error.hpp"

namespace algeo {

FiniteAlgebra::FiniteAlgebra(std::string name, Signature sig, int size,
                             std::vector<std::vector<int>> tables)
    : name_(std::move(name)), sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
  if (size_ < 1) throw EmptyCarrier("algebra '" + name_ + "' has empty carrier");
  if (tables_.size() != static_cast<std::size_t>(sig_.size()))
    throw TableError("algebra '" + name_ + "': expected " + std::to_string(sig_.size()) +
                     " tables, got " + std::to_string(tables_.size()));
  for (int f = 0; f < sig_.size(); ++f) {
    std::size_t expected = 1;
    for (int i = 0; i < sig_.arity(f); ++i) expected *= static_cast<std::size_t>(size_);
    const auto& table = tables_[static_cast<std::size_t>(f)];
    if (table.size() != expected)
      throw TableError("operation '" + sig_.name(f) + "' needs " + std::to_string(expected) +
                       " entries, got " + std::to_string(table.size()));
    for (int v : table)
      if (v < 0 || v >= size_)
        throw TableError("operation '" + sig_.name(f) + "' lists value " + std::to_string(v) +
                         " outside carrier 0.." + std::to_string(size_ - 1));
  }
}

namespace {

struct FileToken {
  std::string text;
  int line;
};

std::vector<FileToken> tokenize_file(const std::string& text) {
  std::vector<FileToken> tokens;
  int line = 1;
  std::string cur;
  bool comment = false;
  auto flush = [&]() {
    if (!cur.empty()) {
      tokens.push_back({cur, line});
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      comment = false;
      ++line;
      continue;
    }
    if (comment) continue;
    if (c == '#') {
      flush();
      comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return tokens;
}

class FileReader {
 public:
  FileReader(const std::string& text, std::string path)
      : tokens_(tokenize_file(text)), path_(std::move(path)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  int line() const {
    if (pos_ < tokens_.size()) return tokens_[pos_].line;
    return tokens_.empty() ? 1 : tokens_.back().line;
  }

  std::string expect_word(const std::string& what) {
    if (done()) throw ParseError(path_, line(), "unexpected end of file, expected " + what);
    return tokens_[pos_++].text;
  }

  void expect_keyword(const std::string& kw) {
    std::string w = expect_word("'" + kw + "'");
    if (w != kw) throw ParseError(path_, line(), "expected '" + kw + "', got '" + w + "'");
  }

  long expect_int(const std::string& what) {
    std::string w = expect_word(what);
    try {
      std::size_t used = 0;
      long v = std::stol(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (const std::exception&) {
      throw ParseError(path_, line(), "expected integer for " + what + ", got '" + w + "'");
    }
  }

  std::optional<std::string> peek() const {
    if (done()) return std::nullopt;
    return tokens_[pos_].text;
  }

  const std::string& path() const { return path_; }

 private:
  std::vector<FileToken> tokens_;
  std::string path_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteAlgebra load_algebra(const std::string& text, const std::string& path) {
  FileReader in(text, path);
  in.expect_keyword("algebra");
  std::string name = in.expect_word("algebra name");
  in.expect_keyword("size");
  long size = in.expect_int("carrier size");
  if (size == 0) throw EmptyCarrier(path + ": size 0 carrier rejected");
  if (size < 0) throw ParseError(path, in.line(), "negative carrier size");

  std::vector<OpSymbol> symbols;
  std::vector<std::vector<int>> tables;
  while (!in.done()) {
    in.expect_keyword("op");
    std::string op_name = in.expect_word("operation name");
    long arity = in.expect_int("arity");
    if (arity < 0) throw ParseError(path, in.line(), "negative arity");
    std::size_t entries = 1;
    for (long i = 0; i < arity; ++i) entries *= static_cast<std::size_t>(size);
    std::vector<int> table;
    table.reserve(entries);
    for (std::size_t i = 0; i < entries; ++i) {
      if (in.done())
        throw TableError(path + ": operation '" + op_name + "' needs " + std::to_string(entries) +
                         " entries, got " + std::to_string(i));
      if (auto w = in.peek(); w && *w == "op")
        throw TableError(path + ": operation '" + op_name + "' needs " + std::to_string(entries) +
                         " entries, got " + std::to_string(i));
      table.push_back(static_cast<int>(in.expect_int("table entry")));
    }
    symbols.push_back({op_name, static_cast<int>(arity)});
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(name, Signature(std::move(symbols)), static_cast<int>(size),
                       std::move(tables));
}

std::string print_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  out << "size " << a.size() << "\n";
  for (int f = 0; f < a.signature().size(); ++f) {
    out << "op " << a.signature().name(f) << ' ' << a.signature().arity(f) << "\n";
    const auto& table = a.table(f);
    for (std::size_t i = 0; i < table.size(); ++i) out << table[i] << (i + 1 < table.size() ? ' ' : '\n');
    if (table.empty()) out << "\n";
  }
  return out.str();
}

int evaluate(const Term& t, const FiniteAlgebra& algebra, std::span<const int> point) {
  if (t.is_variable()) {
    if (t.var < 1 || t.var > static_cast<int>(point.size()))
      throw IndexOutOfRange("variable x" + std::to_string(t.var) + " outside point of length " +
                            std::to_string(point.size()));
    return point[static_cast<std::size_t>(t.var - 1)];
  }
  if (t.symbol < 0 || t.symbol >= algebra.signature().size())
    throw UnknownSymbol("symbol index " + std::to_string(t.symbol) + " not in signature of '" +
                        algebra.name() + "'");
  if (static_cast<int>(t.args.size()) != algebra.signature().arity(t.symbol))
    throw ArityMismatch("operation '" + algebra.signature().name(t.symbol) + "' expects " +
                        std::to_string(algebra.signature().arity(t.symbol)) + " arguments, got " +
                        std::to_string(t.args.size()));
  std::vector<int> vals;
  vals.reserve(t.args.size());
  for (const auto& a : t.args) vals.push_back(evaluate(a, algebra, point));
  return algebra.apply(t.symbol, vals);
}

FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors, const Caps& caps) {
  if (factors.empty())
    throw SignatureMismatch("empty direct product needs an explicit signature");
  return direct_product(factors[0].signature(), factors, caps);
}

FiniteAlgebra terminal_algebra(const Signature& sig) {
  std::vector<std::vector<int>> tables;
  for (int f = 0; f < sig.size(); ++f) tables.emplace_back(1, 0);
  return FiniteAlgebra("1", sig, 1, std::move(tables));
}

FiniteAlgebra direct_product(const Signature& sig, std::span<const FiniteAlgebra> factors,
                             const Caps& caps) {
  if (factors.empty()) return terminal_algebra(sig);
  std::string name;
  std::int64_t size = 1;
  for (const auto& f : factors) {
    if (f.signature() != sig)
      throw SignatureMismatch("direct product factor '" + f.name() + "' has a different signature");
    size *= f.size();
    if (size > caps.max_product)
      throw SizeLimitExceeded("max_product", "direct product carrier exceeds " +
                                                 std::to_string(caps.max_product));
    if (!name.empty()) name += "x";
    name += f.name();
  }
  std::int64_t total_entries = 0;
  for (int f = 0; f < sig.size(); ++f) {
    std::int64_t e = checked_pow(size, sig.arity(f), caps.max_table);
    total_entries += e;
    if (e > caps.max_table || total_entries > caps.max_table)
      throw SizeLimitExceeded("max_table", "direct product tables exceed " +
                                               std::to_string(caps.max_table) + " entries");
  }

  std::size_t n_factors = factors.size();
  auto decode = [&](std::int64_t code) {
    std::vector<int> parts(n_factors);
    for (std::size_t i = n_factors; i-- > 0;) {
      parts[i] = static_cast<int>(code % factors[i].size());
      code /= factors[i].size();
    }
    return parts;
  };
  auto encode = [&](const std::vector<int>& parts) {
    std::int64_t code = 0;
    for (std::size_t i = 0; i < n_factors; ++i) code = code * factors[i].size() + parts[i];
    return code;
  };

  std::vector<std::vector<int>> tables;
  for (int f = 0; f < sig.size(); ++f) {
    int k = sig.arity(f);
    std::size_t entries = 1;
    for (int i = 0; i < k; ++i) entries *= static_cast<std::size_t>(size);
    std::vector<int> table(entries);
    std::vector<std::int64_t> args(static_cast<std::size_t>(k), 0);
    std::vector<std::vector<int>> decoded(static_cast<std::size_t>(k));
    for (std::size_t idx = 0; idx < entries; ++idx) {
      std::int64_t rem = static_cast<std::int64_t>(idx);
      for (std::size_t j = static_cast<std::size_t>(k); j-- > 0;) {
        args[j] = rem % size;
        rem /= size;
      }
      for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) decoded[j] = decode(args[j]);
      std::vector<int> result(n_factors);
      std::vector<int> call(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < n_factors; ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) call[j] = decoded[j][i];
        result[i] = factors[i].apply(f, call);
      }
      table[idx] = static_cast<int>(encode(result));
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(name, sig, static_cast<int>(size), std::move(tables));
}

namespace {

// Saturation to fixpoint, generic over how elements are applied. Seeds are
// the generators plus all constants.
template <typename Elem, typename Apply, typename Constant>
std::vector<Elem> saturate(const Signature& sig, std::vector<Elem> seeds, Apply&& apply,
                           Constant&& constant) {
  std::set<Elem> known(seeds.begin(), seeds.end());
  for (int f = 0; f < sig.size(); ++f)
    if (sig.arity(f) == 0) known.insert(constant(f));

  bool grew = !known.empty();
  while (grew) {
    grew = false;
    std::vector<Elem> current(known.begin(), known.end());
    for (int f = 0; f < sig.size(); ++f) {
      int k = sig.arity(f);
      if (k == 0) continue;
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      while (true) {
        std::vector<Elem> args;
        args.reserve(static_cast<std::size_t>(k));
        for (std::size_t j : idx) args.push_back(current[j]);
        if (known.insert(apply(f, args)).second) grew = true;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == current.size()) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
      }
    }
  }
  return {known.begin(), known.end()};
}

}  // namespace

std::vector<int> generate_subalgebra(const FiniteAlgebra& a, std::span<const int> generators) {
  for (int g : generators)
    if (g < 0 || g >= a.size())
      throw IndexOutOfRange("generator " + std::to_string(g) + " outside carrier 0.." +
                            std::to_string(a.size() - 1));
  std::vector<int> seeds(generators.begin(), generators.end());
  return saturate<int>(
      a.signature(), std::move(seeds),
      [&](int f, const std::vector<int>& args) { return a.apply(f, args); },
      [&](int f) { return a.apply(f, {}); });
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const HomMap& map) {
  if (a.signature() != b.signature()) return false;
  if (map.size() != static_cast<std::size_t>(a.size())) return false;
  for (int v : map)
    if (v < 0 || v >= b.size()) return false;
  const Signature& sig = a.signature();
  for (int f = 0; f < sig.size(); ++f) {
    int k = sig.arity(f);
    std::vector<int> args(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<int> mapped(static_cast<std::size_t>(k));
      for (std::size_t j = 0; j < args.size(); ++j)
        mapped[j] = map[static_cast<std::size_t>(args[j])];
      if (map[static_cast<std::size_t>(a.apply(f, args))] != b.apply(f, mapped)) return false;
      int pos = k - 1;
      while (pos >= 0 && args[static_cast<std::size_t>(pos)] + 1 == a.size()) {
        args[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++args[static_cast<std::size_t>(pos)];
    }
  }
  return true;
}

namespace {

// Greedy small generating set: repeatedly adjoin the least element outside
// the generated subalgebra.
std::vector<int> greedy_generators(const FiniteAlgebra& a) {
  std::vector<int> gens;
  std::vector<int> closed = generate_subalgebra(a, gens);
  while (static_cast<int>(closed.size()) < a.size()) {
    int next = 0;
    std::set<int> have(closed.begin(), closed.end());
    while (have.count(next)) ++next;
    gens.push_back(next);
    closed = generate_subalgebra(a, gens);
  }
  return gens;
}

// Extends generator images to a full map by closure; nullopt on conflict.
std::optional<HomMap> extend_hom(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                 const std::vector<int>& gens, const std::vector<int>& images) {
  HomMap map(static_cast<std::size_t>(a.size()), -1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int& slot = map[static_cast<std::size_t>(gens[i])];
    if (slot != -1 && slot != images[i]) return std::nullopt;
    slot = images[i];
  }
  const Signature& sig = a.signature();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int f = 0; f < sig.size(); ++f) {
      int k = sig.arity(f);
      if (k == 0) {
        int src = a.apply(f, {});
        int tgt = b.apply(f, {});
        int& slot = map[static_cast<std::size_t>(src)];
        if (slot == -1) {
          slot = tgt;
          changed = true;
        } else if (slot != tgt) {
          return std::nullopt;
        }
        continue;
      }
      std::vector<int> domain;
      for (int x = 0; x < a.size(); ++x)
        if (map[static_cast<std::size_t>(x)] != -1) domain.push_back(x);
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      if (domain.empty()) continue;
      while (true) {
        std::vector<int> args(static_cast<std::size_t>(k));
        std::vector<int> mapped(static_cast<std::size_t>(k));
        for (std::size_t j = 0; j < idx.size(); ++j) {
          args[j] = domain[idx[j]];
          mapped[j] = map[static_cast<std::size_t>(args[j])];
        }
        int src = a.apply(f, args);
        int tgt = b.apply(f, mapped);
        int& slot = map[static_cast<std::size_t>(src)];
        if (slot == -1) {
          slot = tgt;
          changed = true;
        } else if (slot != tgt) {
          return std::nullopt;
        }
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == domain.size()) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
      }
    }
  }
  for (int v : map)
    if (v == -1) return std::nullopt;  // generators did not reach everything
  return map;
}

}  // namespace

std::vector<HomMap> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                   const std::optional<std::vector<int>>& generators,
                                   const Caps& caps) {
  if (a.signature() != b.signature())
    throw SignatureMismatch("hom enumeration between '" + a.name() + "' and '" + b.name() +
                            "': signatures differ");
  std::vector<int> gens;
  if (generators) {
    gens = *generators;
    auto closed = generate_subalgebra(a, gens);
    if (static_cast<int>(closed.size()) != a.size())
      throw GeneratorsInsufficient("supplied generators span only " +
                                   std::to_string(closed.size()) + " of " +
                                   std::to_string(a.size()) + " elements");
  }

  std::vector<HomMap> out;
  std::int64_t brute = checked_pow(b.size(), a.size(), caps.max_maps);
  if (!generators && brute <= caps.max_maps) {
    // All-maps brute force in lexicographic order.
    HomMap map(static_cast<std::size_t>(a.size()), 0);
    while (true) {
      if (is_homomorphism(a, b, map)) out.push_back(map);
      int pos = a.size() - 1;
      while (pos >= 0 && map[static_cast<std::size_t>(pos)] + 1 == b.size()) {
        map[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++map[static_cast<std::size_t>(pos)];
    }
    return out;
  }

  if (gens.empty() && !generators) gens = greedy_generators(a);
  std::int64_t candidates = checked_pow(b.size(), static_cast<std::int64_t>(gens.size()),
                                        caps.max_maps);
  if (candidates > caps.max_maps)
    throw SizeLimitExceeded("max_maps", "generator-image search needs " +
                                            std::to_string(candidates) + " candidates");

  std::vector<int> images(gens.size(), 0);
  while (true) {
    if (auto map = extend_hom(a, b, gens, images)) out.push_back(std::move(*map));
    int pos = static_cast<int>(gens.size()) - 1;
    while (pos >= 0 && images[static_cast<std::size_t>(pos)] + 1 == b.size()) {
      images[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++images[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace algeo
