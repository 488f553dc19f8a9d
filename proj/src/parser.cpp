#include "algeo/parser.hpp"

#include <cctype>

#include "algeo/error.hpp"

namespace algeo {

namespace {

struct Token {
  enum Kind { LParen, RParen, Ident, End } kind;
  std::string text;
};

class Lexer {
 public:
  Lexer(const std::string& text, std::string path, int line)
      : text_(text), path_(std::move(path)), line_(line) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return {Token::End, ""};
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::LParen, "("};
    }
    if (c == ')') {
      ++pos_;
      return {Token::RParen, ")"};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return {Token::Ident, text_.substr(start, pos_ - start)};
    }
    throw ParseError(path_, line_, std::string("unexpected character '") + c + "'");
  }

  Token peek() {
    std::size_t save = pos_;
    Token t = next();
    pos_ = save;
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(path_, line_, message); }

 private:
  const std::string& text_;
  std::string path_;
  int line_;
  std::size_t pos_ = 0;
};

int variable_index(const std::string& token, int var_count) {
  long idx = 0;
  try {
    idx = std::stol(token.substr(1));
  } catch (const std::out_of_range&) {
    idx = -1;
  }
  if (idx < 1 || idx > var_count)
    throw IndexOutOfRange("variable " + token + " out of range 1.." + std::to_string(var_count));
  return static_cast<int>(idx);
}

Term parse_term_tokens(Lexer& lex, const Signature& sig, int var_count) {
  Token t = lex.next();
  switch (t.kind) {
    case Token::Ident: {
      if (is_variable_token(t.text)) return Term::variable(variable_index(t.text, var_count));
      auto idx = sig.index_of(t.text);
      if (!idx) throw UnknownSymbol("unknown operation '" + t.text + "'");
      if (sig.arity(*idx) != 0)
        throw ArityMismatch("operation '" + t.text + "' of arity " +
                            std::to_string(sig.arity(*idx)) + " needs parenthesized arguments");
      return Term::apply(*idx);
    }
    case Token::LParen: {
      Token head = lex.next();
      if (head.kind != Token::Ident) lex.fail("expected operation name after '('");
      if (is_variable_token(head.text)) lex.fail("variable '" + head.text + "' cannot be applied");
      auto idx = sig.index_of(head.text);
      if (!idx) throw UnknownSymbol("unknown operation '" + head.text + "'");
      std::vector<Term> args;
      while (lex.peek().kind != Token::RParen) {
        if (lex.peek().kind == Token::End) lex.fail("missing ')'");
        args.push_back(parse_term_tokens(lex, sig, var_count));
      }
      lex.next();  // consume ')'
      if (static_cast<int>(args.size()) != sig.arity(*idx))
        throw ArityMismatch("operation '" + head.text + "' expects " +
                            std::to_string(sig.arity(*idx)) + " arguments, got " +
                            std::to_string(args.size()));
      if (args.empty()) lex.fail("'(" + head.text + ")' is not in the grammar; write the constant bare");
      return Term::apply(*idx, std::move(args));
    }
    case Token::RParen:
      lex.fail("unexpected ')'");
    case Token::End:
      lex.fail("unexpected end of input");
  }
  lex.fail("unreachable");
}

// Splits on the first '=' at paren depth 0.
std::pair<std::string, std::string> split_equation(const std::string& text, const std::string& path,
                                                   int line) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '=' && depth == 0) return {text.substr(0, i), text.substr(i + 1)};
  }
  throw ParseError(path, line, "expected 'term = term'");
}

Term parse_term_at(const std::string& text, const Signature& sig, int var_count,
                   const std::string& path, int line) {
  Lexer lex(text, path, line);
  Term t = parse_term_tokens(lex, sig, var_count);
  if (lex.next().kind != Token::End) lex.fail("trailing input after term");
  return t;
}

}  // namespace

Term parse_term(const std::string& text, const Signature& sig, int var_count) {
  return parse_term_at(text, sig, var_count, "<string>", 0);
}

Equation parse_equation(const std::string& text, const Signature& sig, int var_count) {
  auto [l, r] = split_equation(text, "<string>", 0);
  return {parse_term_at(l, sig, var_count, "<string>", 0),
          parse_term_at(r, sig, var_count, "<string>", 0)};
}

std::vector<Equation> parse_system(const std::string& text, const Signature& sig, int var_count,
                                   const std::string& path) {
  std::vector<Equation> out;
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
    auto [l, r] = split_equation(line, path, line_no);
    out.push_back({parse_term_at(l, sig, var_count, path, line_no),
                   parse_term_at(r, sig, var_count, path, line_no)});
  }
  return out;
}

Substitution parse_substitution(const std::string& text, const Signature& sig, int target_vars,
                                const std::string& path) {
  Substitution s;
  s.target_vars = target_vars;
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
    s.images.push_back(parse_term_at(line, sig, target_vars, path, line_no));
  }
  s.source_vars = static_cast<int>(s.images.size());
  return s;
}

}  // namespace algeo
