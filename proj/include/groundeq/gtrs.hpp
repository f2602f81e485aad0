#pragma once

#include <unordered_map>
#include <vector>

#include "groundeq/equation.hpp"
#include "groundeq/term.hpp"

namespace groundeq {

/// One application of an equation of `tes` to a ground term.
struct StepResult {
  TermId term;
  std::size_t equation;
  bool left_to_right;
};

/// All s with t <=>_S s in one step, in both directions. Variables that occur
/// only on the side being introduced range over ground terms of height at
/// most `hbound`. Sorted alphabetically by result term; each result term is
/// reported once with the first (equation, direction) producing it.
std::vector<StepResult> one_step_with_origin(TermStore& store, const Tes& tes, TermId t,
                                             unsigned hbound);
std::vector<TermId> one_step(TermStore& store, const Tes& tes, TermId t, unsigned hbound);

/// As above with an explicit pool for the introduced variables.
std::vector<StepResult> one_step_with_origin(TermStore& store, const Tes& tes, TermId t,
                                             const std::vector<TermId>& pool);

/// True if s rewrites to t by one application of `eq` in the given direction
/// (extra variables unconstrained).
bool is_single_step(TermStore& store, const Equation& eq, bool left_to_right, TermId s,
                    TermId t);

/// True if every rule's lhs is irreducible by the other rules and every rhs
/// is irreducible by all rules.
bool is_reduced(const TermStore& store, const std::vector<GroundEquation>& rules);

class ReducedGtrs;
ReducedGtrs reduce_gtes(TermStore& store, const Gtes& eqs);

/// A reduced, hence convergent, ground rewrite system.
class ReducedGtrs {
 public:
  ReducedGtrs() = default;
  /// Throws Error if the rules are not reduced.
  static ReducedGtrs from_rules(const TermStore& store, std::vector<GroundEquation> rules);

  const std::vector<GroundEquation>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  const TermId* rewrite(TermId lhs) const {
    auto it = by_lhs_.find(lhs);
    return it == by_lhs_.end() ? nullptr : &it->second;
  }

 private:
  friend ReducedGtrs reduce_gtes(TermStore& store, const Gtes& eqs);
  std::vector<GroundEquation> rules_;
  std::unordered_map<TermId, TermId> by_lhs_;
};

/// An equivalent reduced GTRS with at most |E| rules. Rules are sorted
/// alphabetically by lhs.
ReducedGtrs reduce_gtes(TermStore& store, const Gtes& eqs);

TermId normalize(TermStore& store, const ReducedGtrs& r, TermId t);

/// s <=>*_E t
bool gtes_equiv(TermStore& store, const Gtes& eqs, TermId s, TermId t);

}  // namespace groundeq
