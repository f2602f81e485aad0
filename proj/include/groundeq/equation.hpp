#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "groundeq/term.hpp"

namespace groundeq {

/// An equation l = r of a term equation system, with variables renumbered
/// so that the k shared variables are x1..xk, the m left-only variables are
/// x(k+1)..x(k+m) and the right-only variables are x(k+m+1)..x(k+m+l).
struct Equation {
  TermId lhs;
  TermId rhs;
  unsigned shared = 0;
  unsigned left_only = 0;
  unsigned right_only = 0;

  bool variable_preserving() const { return left_only == 0 && right_only == 0; }
  bool operator==(const Equation&) const = default;
};

/// Renumbers the variables of l = r into the canonical layout above.
/// Shared variables are ordered by first occurrence in l, left-only by first
/// occurrence in l, right-only by first occurrence in r.
Equation make_equation(TermStore& store, TermId lhs, TermId rhs);

struct Tes {
  std::vector<Equation> equations;
};

bool is_variable_preserving(const Tes& tes);

/// Throws NotVariablePreserving naming the first offending equation.
void require_variable_preserving(const Tes& tes);

struct GroundEquation {
  TermId lhs;
  TermId rhs;
  friend auto operator<=>(const GroundEquation&, const GroundEquation&) = default;
};

struct GroundEquationHash {
  std::size_t operator()(const GroundEquation& e) const noexcept {
    return (static_cast<std::size_t>(e.lhs.value) << 32) ^ e.rhs.value;
  }
};

/// A finite set of ordered ground equations. Iteration follows insertion
/// order; equality is set equality of the ordered pairs.
class Gtes {
 public:
  Gtes() = default;
  Gtes(std::initializer_list<GroundEquation> eqs) {
    for (const auto& e : eqs) insert(e);
  }

  /// Returns false if the pair was already present.
  bool insert(GroundEquation e);
  bool contains(GroundEquation e) const { return index_.count(e) != 0; }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }
  const std::vector<GroundEquation>& equations() const { return order_; }

  /// this is a subset of other
  bool subset_of(const Gtes& other) const;
  bool operator==(const Gtes& other) const;

 private:
  std::vector<GroundEquation> order_;
  std::unordered_set<GroundEquation, GroundEquationHash> index_;
};

/// Sort key used in traces: lhs alphabetically, then rhs.
void sort_equations(const TermStore& store, std::vector<GroundEquation>& eqs);

std::string to_string(const TermStore& store, const GroundEquation& e,
                      const char* sep = " = ");

}  // namespace groundeq
