#include "groundeq/signature.hpp"

#include <algorithm>
#include <cctype>

#include "groundeq/error.hpp"

namespace groundeq {

bool is_variable_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

SymbolId Signature::add(std::string name, unsigned rank) {
  if (name.empty()) throw Error("empty symbol name");
  if (is_variable_name(name))
    throw Error("symbol name '" + name + "' is reserved for variables");
  if (index_.count(name) != 0) throw Error("duplicate symbol '" + name + "'");
  auto id = static_cast<SymbolId>(symbols_.size());
  index_.emplace(name, id);
  symbols_.push_back({std::move(name), rank});
  return id;
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<SymbolId> Signature::constants() const {
  std::vector<SymbolId> out;
  for (SymbolId i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].rank == 0) out.push_back(i);
  return out;
}

bool Signature::has_constant() const {
  return std::any_of(symbols_.begin(), symbols_.end(),
                     [](const Symbol& s) { return s.rank == 0; });
}

unsigned Signature::max_rank() const {
  unsigned r = 0;
  for (const auto& s : symbols_) r = std::max(r, s.rank);
  return r;
}

bool Signature::operator==(const Signature& other) const {
  if (symbols_.size() != other.symbols_.size()) return false;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name != other.symbols_[i].name ||
        symbols_[i].rank != other.symbols_[i].rank)
      return false;
  return true;
}

}  // namespace groundeq
