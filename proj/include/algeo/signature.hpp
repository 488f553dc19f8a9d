#pragma once

#include <optional>
#include <string>
#include <vector>

namespace algeo {

struct OpSymbol {
  std::string name;
  int arity = 0;

  bool operator==(const OpSymbol&) const = default;
};

// An operation signature: named symbols with arities. Symbol order is the
// declaration order and fixes the canonical term order, so two signatures
// match only if they list the same symbols in the same order.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> symbols);

  const std::vector<OpSymbol>& symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  const OpSymbol& symbol(int index) const { return symbols_[static_cast<std::size_t>(index)]; }
  int arity(int index) const { return symbols_[static_cast<std::size_t>(index)].arity; }
  const std::string& name(int index) const { return symbols_[static_cast<std::size_t>(index)].name; }

  std::optional<int> index_of(const std::string& name) const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<OpSymbol> symbols_;
};

// True for identifiers of the form x<digits> or y<digits>, which the term
// grammar reserves for variables.
bool is_variable_token(const std::string& token);

}  // namespace algeo
