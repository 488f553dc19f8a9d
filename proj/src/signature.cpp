#include "algeo/signature.hpp"

#include <cctype>
#include <unordered_set>

#include "algeo/error.hpp"

namespace algeo {

Signature::Signature(std::vector<OpSymbol> symbols) : symbols_(std::move(symbols)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw ParseError("empty operation name");
    if (s.arity < 0) throw ParseError("negative arity for operation '" + s.name + "'");
    if (is_variable_token(s.name))
      throw ParseError("operation name '" + s.name + "' shadows variable syntax");
    if (!seen.insert(s.name).second)
      throw ParseError("duplicate operation name '" + s.name + "'");
  }
}

std::optional<int> Signature::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

bool is_variable_token(const std::string& token) {
  if (token.size() < 2) return false;
  if (token[0] != 'x' && token[0] != 'y') return false;
  for (std::size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  return true;
}

}  // namespace algeo
