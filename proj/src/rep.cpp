#include "algeo/rep.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "algeo/error.hpp"

namespace algeo {

GroupTable GroupTable::from_mul(int size, std::vector<int> mul) {
  if (size < 1) throw GroupAxiomViolation("group must have at least one element");
  if (mul.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
    throw GroupAxiomViolation("group table needs " + std::to_string(size * size) + " entries");
  for (int v : mul)
    if (v < 0 || v >= size)
      throw GroupAxiomViolation("group table entry " + std::to_string(v) + " outside 0.." +
                                std::to_string(size - 1));
  GroupTable g;
  g.size = size;
  g.mul = std::move(mul);

  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw GroupAxiomViolation("multiplication is not associative at (" + std::to_string(a) +
                                    "," + std::to_string(b) + "," + std::to_string(c) + ")");

  int identity = -1;
  for (int e = 0; e < size; ++e) {
    bool ok = true;
    for (int a = 0; a < size; ++a)
      if (g.op(e, a) != a || g.op(a, e) != a) ok = false;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw GroupAxiomViolation("no identity element");
  g.identity = identity;

  g.inverse.assign(static_cast<std::size_t>(size), -1);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b)
      if (g.op(a, b) == identity && g.op(b, a) == identity) {
        g.inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (g.inverse[static_cast<std::size_t>(a)] < 0)
      throw GroupAxiomViolation("element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

ModMatrix ModMatrix::identity(int n) {
  ModMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ModMatrix mat_mul(const ModMatrix& x, const ModMatrix& y, int modulus) {
  ModMatrix out = ModMatrix::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = (out.at(i, j) + v * y.at(k, j)) % modulus;
    }
  return out;
}

ModMatrix mat_add(const ModMatrix& x, const ModMatrix& y, int modulus) {
  ModMatrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = (out.a[i] + y.a[i]) % modulus;
  return out;
}

std::vector<int> row_mul(std::span<const int> v, const ModMatrix& m, int modulus) {
  std::vector<int> out(static_cast<std::size_t>(m.cols), 0);
  for (int i = 0; i < m.rows; ++i) {
    int x = v[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    for (int j = 0; j < m.cols; ++j)
      out[static_cast<std::size_t>(j)] = (out[static_cast<std::size_t>(j)] + x * m.at(i, j)) % modulus;
  }
  return out;
}

void validate_representation(const FiniteRepresentation& rep) {
  if (rep.modulus < 1) throw ParseError("modulus must be positive");
  if (rep.dim < 0) throw ParseError("dimension must be non-negative");
  GroupTable::from_mul(rep.group.size, rep.group.mul);  // re-checks the axioms
  if (rep.action.size() != static_cast<std::size_t>(rep.group.size))
    throw ActionNotHomomorphic("need one action matrix per group element");
  for (const auto& m : rep.action) {
    if (m.rows != rep.dim || m.cols != rep.dim)
      throw ActionNotHomomorphic("action matrix is not dim x dim");
    for (int v : m.a)
      if (v < 0 || v >= rep.modulus)
        throw ActionNotHomomorphic("matrix entry " + std::to_string(v) + " outside 0.." +
                                   std::to_string(rep.modulus - 1));
  }
  if (rep.matrix(rep.group.identity) != ModMatrix::identity(rep.dim))
    throw ActionNotHomomorphic("identity element must act as the identity matrix");
  for (int g = 0; g < rep.group.size; ++g)
    for (int h = 0; h < rep.group.size; ++h)
      if (mat_mul(rep.matrix(g), rep.matrix(h), rep.modulus) != rep.matrix(rep.group.op(g, h)))
        throw ActionNotHomomorphic("M(g)M(h) != M(gh) at g=" + std::to_string(g) +
                                   ", h=" + std::to_string(h));
}

namespace {

// Same whitespace/comment token model as the algebra files.
std::vector<std::pair<std::string, int>> tokenize(const std::string& text) {
  std::vector<std::pair<std::string, int>> tokens;
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

struct RepReader {
  std::vector<std::pair<std::string, int>> tokens;
  std::string path;
  std::size_t pos = 0;

  int line() const {
    if (pos < tokens.size()) return tokens[pos].second;
    return tokens.empty() ? 1 : tokens.back().second;
  }
  std::string word(const std::string& what) {
    if (pos >= tokens.size())
      throw ParseError(path, line(), "unexpected end of file, expected " + what);
    return tokens[pos++].first;
  }
  void keyword(const std::string& kw) {
    std::string w = word("'" + kw + "'");
    if (w != kw) throw ParseError(path, line(), "expected '" + kw + "', got '" + w + "'");
  }
  long integer(const std::string& what) {
    std::string w = word(what);
    try {
      std::size_t used = 0;
      long v = std::stol(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (const std::exception&) {
      throw ParseError(path, line(), "expected integer for " + what + ", got '" + w + "'");
    }
  }
};

}  // namespace

FiniteRepresentation load_representation(const std::string& text, const std::string& path) {
  RepReader in{tokenize(text), path};
  FiniteRepresentation rep;
  in.keyword("rep");
  rep.name = in.word("representation name");
  in.keyword("modulus");
  rep.modulus = static_cast<int>(in.integer("modulus"));
  if (rep.modulus < 1) throw ParseError(path, in.line(), "modulus must be positive");
  in.keyword("dim");
  rep.dim = static_cast<int>(in.integer("dimension"));
  if (rep.dim < 0) throw ParseError(path, in.line(), "dimension must be non-negative");
  in.keyword("group");
  int n = static_cast<int>(in.integer("group order"));
  if (n < 1) throw ParseError(path, in.line(), "group order must be positive");
  std::vector<int> mul;
  mul.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n * n; ++i) mul.push_back(static_cast<int>(in.integer("group table entry")));
  rep.group = GroupTable::from_mul(n, std::move(mul));
  in.keyword("action");
  for (int g = 0; g < n; ++g) {
    ModMatrix m = ModMatrix::zero(rep.dim, rep.dim);
    for (int i = 0; i < rep.dim * rep.dim; ++i)
      m.a[static_cast<std::size_t>(i)] = static_cast<int>(in.integer("matrix entry"));
    rep.action.push_back(std::move(m));
  }
  if (in.pos != in.tokens.size())
    throw ParseError(path, in.line(), "trailing input after action matrices");
  validate_representation(rep);
  return rep;
}

std::string print_representation(const FiniteRepresentation& rep) {
  std::ostringstream out;
  out << "rep " << rep.name << "\n";
  out << "modulus " << rep.modulus << "\n";
  out << "dim " << rep.dim << "\n";
  out << "group " << rep.group.size << "\n";
  for (int a = 0; a < rep.group.size; ++a) {
    for (int b = 0; b < rep.group.size; ++b)
      out << rep.group.op(a, b) << (b + 1 < rep.group.size ? ' ' : '\n');
  }
  out << "action\n";
  for (const auto& m : rep.action) {
    for (std::size_t i = 0; i < m.a.size(); ++i)
      out << m.a[i] << (i + 1 < m.a.size() ? ' ' : '\n');
    if (m.a.empty()) out << "\n";
  }
  return out.str();
}

GroupTable load_group_table(const std::string& text, const std::string& path) {
  RepReader in{tokenize(text), path};
  in.keyword("group");
  int n = static_cast<int>(in.integer("group order"));
  if (n < 1) throw ParseError(path, in.line(), "group order must be positive");
  std::vector<int> mul;
  for (int i = 0; i < n * n; ++i) mul.push_back(static_cast<int>(in.integer("group table entry")));
  if (in.pos != in.tokens.size()) throw ParseError(path, in.line(), "trailing input after table");
  return GroupTable::from_mul(n, std::move(mul));
}

namespace {

class ActionLexer {
 public:
  ActionLexer(const std::string& text, std::string path, int line)
      : text_(text), path_(std::move(path)), line_(line) {}

  std::string next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return "";
    char c = text_[pos_];
    if (c == '(' || c == ')' || c == '+' || c == '-' || c == '*') {
      ++pos_;
      return std::string(1, c);
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '^') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '^') {
          ++pos_;
          continue;
        }
        // allow the '-' of '^-1' inside a token
        if (d == '-' && pos_ > start && text_[pos_ - 1] == '^') {
          ++pos_;
          continue;
        }
        break;
      }
      return text_.substr(start, pos_ - start);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string peek() {
    std::size_t save = pos_;
    std::string t = next();
    pos_ = save;
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(path_, line_, message);
  }

 private:
  const std::string& text_;
  std::string path_;
  int line_;
  std::size_t pos_ = 0;
};

int parse_index(const std::string& token, char sort, int limit, ActionLexer& lex) {
  if (token.size() < 2 || token[0] != sort) lex.fail("expected " + std::string(1, sort) + "<index>, got '" + token + "'");
  for (std::size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      lex.fail("expected " + std::string(1, sort) + "<index>, got '" + token + "'");
  long idx = std::stol(token.substr(1));
  if (idx < 1 || idx > limit)
    throw IndexOutOfRange("variable " + token + " out of range 1.." + std::to_string(limit));
  return static_cast<int>(idx);
}

// word := "1" | (y<j> | y<j>^-1)+
GroupWord parse_word(ActionLexer& lex, int size_y) {
  GroupWord w;
  std::string t = lex.peek();
  if (t == "1") {
    lex.next();
    return w;
  }
  while (true) {
    t = lex.peek();
    if (t.empty() || t == "+" || t == "-" || t == ")") break;
    t = lex.next();
    bool inverse = false;
    if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
      inverse = true;
      t = t.substr(0, t.size() - 3);
    }
    int idx = parse_index(t, 'y', size_y, lex);
    w.letters.push_back(inverse ? -idx : idx);
  }
  if (w.letters.empty()) lex.fail("expected a group word");
  return w;
}

}  // namespace

ActionTerm parse_action_term(const std::string& text, int size_x, int size_y, int modulus,
                             const std::string& path, int line) {
  ActionLexer lex(text, path, line);
  ActionTerm term;
  int outer_sign = 1;
  while (true) {
    std::string t = lex.next();
    if (t.empty()) lex.fail("expected a summand");
    ActionSummand summand;
    summand.module_var = parse_index(t, 'x', size_x, lex);
    if (lex.next() != "*") lex.fail("expected '*' after module variable");
    if (lex.next() != "(") lex.fail("expected '(' to open the coefficient sum");
    int sign = outer_sign;
    while (true) {
      std::string c = lex.next();
      if (c == "+") {
        sign = outer_sign;
        continue;
      }
      if (c == "-") {
        sign = -outer_sign;
        continue;
      }
      if (c == ")") break;
      long coeff = 0;
      try {
        std::size_t used = 0;
        coeff = std::stol(c, &used);
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        lex.fail("expected a coefficient, got '" + c + "'");
      }
      GroupAlgebraTerm at;
      at.coeff = static_cast<int>(((sign * coeff) % modulus + modulus) % modulus);
      at.word = parse_word(lex, size_y);
      summand.terms.push_back(std::move(at));
      sign = outer_sign;
    }
    term.summands.push_back(std::move(summand));
    std::string sep = lex.next();
    if (sep.empty()) break;
    if (sep == "+")
      outer_sign = 1;
    else if (sep == "-")
      outer_sign = -1;
    else
      lex.fail("expected '+' or '-' between summands, got '" + sep + "'");
  }
  return term;
}

std::vector<ActionTerm> parse_action_system(const std::string& text, int size_x, int size_y,
                                            int modulus, const std::string& path) {
  std::vector<ActionTerm> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.push_back(parse_action_term(line, size_x, size_y, modulus, path, line_no));
  }
  return out;
}

std::string print_action_term(const ActionTerm& term) {
  std::ostringstream out;
  for (std::size_t s = 0; s < term.summands.size(); ++s) {
    if (s) out << " + ";
    const auto& summand = term.summands[s];
    out << "x" << summand.module_var << " * ( ";
    for (std::size_t t = 0; t < summand.terms.size(); ++t) {
      if (t) out << " + ";
      out << summand.terms[t].coeff << ' ';
      const auto& w = summand.terms[t].word;
      if (w.letters.empty()) {
        out << "1";
      } else {
        for (std::size_t l = 0; l < w.letters.size(); ++l) {
          if (l) out << ' ';
          int letter = w.letters[l];
          out << "y" << (letter > 0 ? letter : -letter) << (letter < 0 ? "^-1" : "");
        }
      }
    }
    out << " )";
  }
  return out.str();
}

std::string print_rep_point(const RepPoint& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.module_values.size(); ++i) {
    if (i) out << ',';
    out << '(';
    for (std::size_t j = 0; j < p.module_values[i].size(); ++j) {
      if (j) out << ',';
      out << p.module_values[i][j];
    }
    out << ')';
  }
  out << ';';
  for (std::size_t i = 0; i < p.group_values.size(); ++i) {
    if (i) out << ',';
    out << p.group_values[i];
  }
  out << ')';
  return out.str();
}

namespace {

int word_element(const GroupTable& g, const GroupWord& w, std::span<const int> assignment) {
  int e = g.identity;
  for (int letter : w.letters) {
    int idx = letter > 0 ? letter : -letter;
    if (idx < 1 || idx > static_cast<int>(assignment.size()))
      throw IndexOutOfRange("group variable y" + std::to_string(idx) +
                            " outside assignment of length " + std::to_string(assignment.size()));
    int value = assignment[static_cast<std::size_t>(idx - 1)];
    e = g.op(e, letter > 0 ? value : g.inv(value));
  }
  return e;
}

}  // namespace

std::vector<int> evaluate_action_term(const FiniteRepresentation& rep, const ActionTerm& term,
                                      const RepPoint& point) {
  std::vector<int> out(static_cast<std::size_t>(rep.dim), 0);
  for (const auto& summand : term.summands) {
    if (summand.module_var < 1 ||
        summand.module_var > static_cast<int>(point.module_values.size()))
      throw IndexOutOfRange("module variable x" + std::to_string(summand.module_var) +
                            " outside assignment of length " +
                            std::to_string(point.module_values.size()));
    const auto& x = point.module_values[static_cast<std::size_t>(summand.module_var - 1)];
    for (const auto& at : summand.terms) {
      int g = word_element(rep.group, at.word, point.group_values);
      std::vector<int> moved = row_mul(x, rep.matrix(g), rep.modulus);
      for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = (out[j] + at.coeff * moved[j]) % rep.modulus;
    }
  }
  return out;
}

std::vector<RepPoint> solve_action_system(const FiniteRepresentation& rep, int size_x, int size_y,
                                          std::span<const ActionTerm> system, const Caps& caps) {
  std::int64_t module_points = checked_pow(rep.modulus, static_cast<std::int64_t>(rep.dim) *
                                                            static_cast<std::int64_t>(size_x),
                                           caps.max_points);
  std::int64_t total = module_points;
  if (total <= caps.max_points)
    total = total * checked_pow(rep.group.size, size_y, caps.max_points);
  if (module_points > caps.max_points || total > caps.max_points)
    throw SizeLimitExceeded("max_points", "action point grid exceeds " +
                                              std::to_string(caps.max_points));

  std::vector<int> zero(static_cast<std::size_t>(rep.dim), 0);
  std::vector<RepPoint> out;
  RepPoint p;
  p.module_values.assign(static_cast<std::size_t>(size_x), zero);
  p.group_values.assign(static_cast<std::size_t>(size_y), 0);

  // Odometer over module coordinates (most significant first), then group.
  while (true) {
    bool ok = true;
    for (const auto& term : system)
      if (evaluate_action_term(rep, term, p) != zero) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);

    // increment: group assignment is least significant
    int gpos = size_y - 1;
    while (gpos >= 0 && p.group_values[static_cast<std::size_t>(gpos)] + 1 == rep.group.size) {
      p.group_values[static_cast<std::size_t>(gpos)] = 0;
      --gpos;
    }
    if (gpos >= 0) {
      ++p.group_values[static_cast<std::size_t>(gpos)];
      continue;
    }
    if (size_x == 0 || rep.dim == 0) break;
    int xi = size_x - 1, xj = rep.dim - 1;
    while (xi >= 0) {
      auto& coord = p.module_values[static_cast<std::size_t>(xi)][static_cast<std::size_t>(xj)];
      if (coord + 1 < rep.modulus) {
        ++coord;
        break;
      }
      coord = 0;
      if (--xj < 0) {
        xj = rep.dim - 1;
        --xi;
      }
    }
    if (xi < 0) break;
  }
  return out;
}

bool action_closure_membership(const FiniteRepresentation& rep, int size_x, int size_y,
                               std::span<const ActionTerm> system, const ActionTerm& w0,
                               const Caps& caps) {
  std::vector<int> zero(static_cast<std::size_t>(rep.dim), 0);
  for (const auto& p : solve_action_system(rep, size_x, size_y, system, caps))
    if (evaluate_action_term(rep, w0, p) != zero) return false;
  return true;
}

namespace {

// Encoding of a d2 x d1 matrix over Z/m as a mixed-radix integer, first
// entry most significant.
std::int64_t encode_matrix(const ModMatrix& m, int modulus) {
  std::int64_t code = 0;
  for (int v : m.a) code = code * modulus + v;
  return code;
}

ModMatrix decode_matrix(std::int64_t code, int rows, int cols, int modulus) {
  ModMatrix m = ModMatrix::zero(rows, cols);
  for (std::size_t i = m.a.size(); i-- > 0;) {
    m.a[i] = static_cast<int>(code % modulus);
    code /= modulus;
  }
  return m;
}

}  // namespace

FiniteRepresentation triangular_product(const FiniteRepresentation& r1,
                                        const FiniteRepresentation& r2, const Caps& caps) {
  if (r1.modulus != r2.modulus)
    throw ModulusMismatch("triangular product needs matching moduli: " +
                          std::to_string(r1.modulus) + " vs " + std::to_string(r2.modulus));
  int m = r1.modulus;
  int d1 = r1.dim, d2 = r2.dim;

  std::int64_t phi_count = checked_pow(m, static_cast<std::int64_t>(d1) * d2, caps.max_product);
  std::int64_t order = static_cast<std::int64_t>(r1.group.size) * r2.group.size;
  if (phi_count <= caps.max_product) order *= phi_count;
  if (phi_count > caps.max_product || order > caps.max_product ||
      order * order > caps.max_table)
    throw SizeLimitExceeded("max_product", "triangular product group order exceeds caps");

  // Element (g1, g2, phi) encoded as (idx(g1)*|G2| + idx(g2))*m^(d1*d2) + enc(phi).
  auto encode = [&](int g1, int g2, const ModMatrix& phi) {
    return (static_cast<std::int64_t>(g1) * r2.group.size + g2) * phi_count +
           encode_matrix(phi, m);
  };
  struct Triple {
    int g1, g2;
    ModMatrix phi;
  };
  auto decode = [&](std::int64_t code) {
    Triple t{0, 0, decode_matrix(code % phi_count, d2, d1, m)};
    code /= phi_count;
    t.g2 = static_cast<int>(code % r2.group.size);
    t.g1 = static_cast<int>(code / r2.group.size);
    return t;
  };

  // (g1,g2,phi)(h1,h2,psi) = (g1 h1, g2 h2, phi + M2(g2) psi M1(g1^-1)),
  // read off from composing the block matrices [[g2, phi g1],[0, g1]].
  std::vector<int> mul(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (std::int64_t a = 0; a < order; ++a) {
    Triple x = decode(a);
    for (std::int64_t b = 0; b < order; ++b) {
      Triple y = decode(b);
      int g1h1 = r1.group.op(x.g1, y.g1);
      int g2h2 = r2.group.op(x.g2, y.g2);
      ModMatrix twist = mat_mul(mat_mul(r2.matrix(x.g2), y.phi, m),
                                r1.matrix(r1.group.inv(x.g1)), m);
      ModMatrix phi = mat_add(x.phi, twist, m);
      mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
          static_cast<std::size_t>(b)] = static_cast<int>(encode(g1h1, g2h2, phi));
    }
  }

  FiniteRepresentation out;
  out.name = r1.name + "Tri" + r2.name;
  out.modulus = m;
  out.dim = d1 + d2;
  out.group = GroupTable::from_mul(static_cast<int>(order), std::move(mul));

  // Action on V1 (+) V2 (coordinates V1 first): a o g = a o g1,
  // b o g = b o g2 + (b phi) o g1.
  for (std::int64_t e = 0; e < order; ++e) {
    Triple t = decode(e);
    ModMatrix mat = ModMatrix::zero(out.dim, out.dim);
    const ModMatrix& m1 = r1.matrix(t.g1);
    const ModMatrix& m2 = r2.matrix(t.g2);
    ModMatrix lower = mat_mul(t.phi, m1, m);  // d2 x d1
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j) mat.at(i, j) = m1.at(i, j);
    for (int i = 0; i < d2; ++i) {
      for (int j = 0; j < d1; ++j) mat.at(d1 + i, j) = lower.at(i, j);
      for (int j = 0; j < d2; ++j) mat.at(d1 + i, d1 + j) = m2.at(i, j);
    }
    out.action.push_back(std::move(mat));
  }
  validate_representation(out);
  return out;
}

FiniteRepresentation wreath_product(const FiniteRepresentation& rep, const GroupTable& g,
                                    const Caps& caps) {
  int m = rep.modulus;
  int n = g.size;
  std::int64_t base_count = checked_pow(rep.group.size, n, caps.max_product);
  std::int64_t order = base_count;
  if (order <= caps.max_product) order *= n;
  if (base_count > caps.max_product || order > caps.max_product ||
      order * order > caps.max_table)
    throw SizeLimitExceeded("max_product", "wreath product group order exceeds caps");
  std::int64_t module_size = checked_pow(m, static_cast<std::int64_t>(rep.dim) * n,
                                         caps.max_product);
  if (module_size > caps.max_product)
    throw SizeLimitExceeded("max_product", "wreath product module exceeds caps");

  // Element (f, t): f a |G|-tuple over H (first coordinate most
  // significant), t in G; index = enc(f)*|G| + t.
  auto encode = [&](const std::vector<int>& f, int t) {
    std::int64_t code = 0;
    for (int v : f) code = code * rep.group.size + v;
    return code * n + t;
  };
  auto decode = [&](std::int64_t code) {
    int t = static_cast<int>(code % n);
    code /= n;
    std::vector<int> f(static_cast<std::size_t>(n));
    for (std::size_t i = f.size(); i-- > 0;) {
      f[i] = static_cast<int>(code % rep.group.size);
      code /= rep.group.size;
    }
    return std::make_pair(f, t);
  };

  // (f, s)(f', s') = (y -> f(y) f'(y s), s s'), the twist matching the
  // declared action formula.
  std::vector<int> mul(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (std::int64_t a = 0; a < order; ++a) {
    auto [f, s] = decode(a);
    for (std::int64_t b = 0; b < order; ++b) {
      auto [f2, s2] = decode(b);
      std::vector<int> prod(static_cast<std::size_t>(n));
      for (int y = 0; y < n; ++y)
        prod[static_cast<std::size_t>(y)] =
            rep.group.op(f[static_cast<std::size_t>(y)],
                         f2[static_cast<std::size_t>(g.op(y, s))]);
      mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
          static_cast<std::size_t>(b)] = static_cast<int>(encode(prod, g.op(s, s2)));
    }
  }

  FiniteRepresentation out;
  out.name = rep.name + "Wr";
  out.modulus = m;
  out.dim = rep.dim * n;
  out.group = GroupTable::from_mul(static_cast<int>(order), std::move(mul));

  // (v o (h, t))(y) = v(y t^-1) o h(y t^-1): block (row y t^-1, col y)
  // carries M(h(y t^-1)).
  for (std::int64_t e = 0; e < order; ++e) {
    auto [h, t] = decode(e);
    ModMatrix mat = ModMatrix::zero(out.dim, out.dim);
    for (int y = 0; y < n; ++y) {
      int src = g.op(y, g.inv(t));
      const ModMatrix& block = rep.matrix(h[static_cast<std::size_t>(src)]);
      for (int i = 0; i < rep.dim; ++i)
        for (int j = 0; j < rep.dim; ++j)
          mat.at(src * rep.dim + i, y * rep.dim + j) = block.at(i, j);
    }
    out.action.push_back(std::move(mat));
  }
  validate_representation(out);
  return out;
}

}  // namespace algeo
