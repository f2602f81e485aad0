#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace groundeq {

/// Index of a symbol inside its Signature. Symbol order is index order.
using SymbolId = std::uint32_t;

/// A ranked alphabet with a total symbol order given by declaration order
/// (first declared is smallest).
class Signature {
 public:
  struct Symbol {
    std::string name;
    unsigned rank;
  };

  Signature() = default;

  /// Throws Error on a duplicate name or a name reserved for variables.
  SymbolId add(std::string name, unsigned rank);

  std::optional<SymbolId> find(std::string_view name) const;

  const std::string& name(SymbolId id) const { return symbols_[id].name; }
  unsigned rank(SymbolId id) const { return symbols_[id].rank; }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  /// Rank-0 symbols in symbol order.
  std::vector<SymbolId> constants() const;
  bool has_constant() const;
  unsigned max_rank() const;

  bool operator==(const Signature& other) const;

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
};

/// True for names of the form x<digits>, which always denote variables.
bool is_variable_name(std::string_view name);

}  // namespace groundeq
