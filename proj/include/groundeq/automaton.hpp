#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "groundeq/equation.hpp"
#include "groundeq/term.hpp"

namespace groundeq {

struct State {
  StateId id;
  /// Smallest (alphabetically) known member of the class, when known.
  std::optional<TermId> representative;
};

/// f(a1,...,am) -> a
struct Rule {
  SymbolId symbol;
  std::vector<StateId> args;
  StateId target;
  bool operator==(const Rule&) const = default;
};

/// Bottom-up tree automaton whose rules all have the flat shape
/// f(a1,...,am) -> a. State ids double as the state order: a smaller id is a
/// smaller state, and every state is larger than every signature symbol.
class TreeAutomaton {
 public:
  TreeAutomaton() = default;
  /// Rules are stored in rule order (symbol, then argument states).
  TreeAutomaton(std::vector<State> states, std::vector<Rule> rules);

  std::size_t state_count() const { return states_.size(); }
  const std::vector<State>& states() const { return states_; }
  const std::vector<Rule>& rules() const { return rules_; }
  /// The rules whose left-hand side has root `symbol`.
  std::span<const Rule> rules_for(SymbolId symbol) const;

  /// Target of the first rule with left-hand side f(args), if any.
  std::optional<StateId> lookup(SymbolId symbol, std::span<const StateId> args) const;

  /// "[rep]" using the representative, "[#k]" otherwise.
  std::string label(const TermStore& store, StateId s) const;
  StateLabeler labeler(const TermStore& store) const;

  bool operator==(const TreeAutomaton& other) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept;
  };
  std::vector<State> states_;
  std::vector<Rule> rules_;
  std::unordered_map<std::vector<std::uint32_t>, StateId, KeyHash> lookup_;
};

/// The congruence-class-computing automaton of a GTES and target terms,
/// together with the class assignment of its subterm universe.
struct CctaResult {
  TreeAutomaton automaton;
  /// Subterms of the equations and targets, in discovery order.
  std::vector<TermId> universe;
  std::unordered_map<TermId, StateId> class_of;
  std::vector<std::pair<TermId, StateId>> targets;

  StateId state_of(TermId t) const { return class_of.at(t); }
};

/// States are the equivalence classes of the subterm universe under the
/// congruence generated by `eqs`, ordered by their alphabetically smallest
/// member. Accepts an empty target list (used by reduce_gtes).
CctaResult build_ccta(TermStore& store, const Gtes& eqs, std::span<const TermId> targets);

/// Innermost normal form over the signature plus states.
TermId nf_mixed(TermStore& store, const TreeAutomaton& a, TermId t);

/// The state t rewrites to, if its normal form is a single state.
std::optional<StateId> evaluate(const TermStore& store, const TreeAutomaton& a, TermId t);

/// REACH_0 = {c}, REACH_{i+1} = REACH_i plus targets of rules with an
/// argument in REACH_i. Element i of the result is REACH_i, stopping at the
/// first fixpoint, so the result never has more than state_count() elements.
std::vector<std::set<StateId>> reach_levels(const TreeAutomaton& a, StateId c);
std::set<StateId> reach_set(const TreeAutomaton& a, StateId c);
bool reaches(const TreeAutomaton& a, StateId from, StateId to);

/// Marks every state b with some goal in REACH(b), computed backwards from
/// the goals in one pass instead of one fixpoint per state.
std::vector<bool> states_reaching(const TreeAutomaton& a, std::span<const StateId> goals);

/// Witness trees, one per state, computed by repeated passes over the rules
/// in rule order. Throws NotConnected if some state is unreachable.
std::vector<TermId> trees_of_states(TermStore& store, const TreeAutomaton& a);

bool is_deterministic(const TreeAutomaton& a);
bool is_totally_defined(const Signature& sig, const TreeAutomaton& a);
bool is_connected(TermStore& store, const TreeAutomaton& a);

/// The automaton's rules as ground rewrite rules over the signature plus states.
std::vector<GroundEquation> rules_as_terms(TermStore& store, const TreeAutomaton& a);

}  // namespace groundeq
