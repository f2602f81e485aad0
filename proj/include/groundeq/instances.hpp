#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "groundeq/automaton.hpp"
#include "groundeq/equation.hpp"
#include "groundeq/term.hpp"

namespace groundeq {

/// Which equation sides are matched when generating instances. LhsOnly
/// reproduces the hand-worked example sets; only Both carries the
/// completeness argument behind 'no' verdicts.
enum class MatchSides { Both, LhsOnly };

/// The three GTES sequences: W follows both targets, P only p, Q only q.
enum class SystemKind { W, P, Q };

const char* to_string(SystemKind kind);

struct Seeds {
  Gtes w;
  Gtes p;
  Gtes q;
};

/// Ground instances of `tes` whose matched side occurs as a subterm of one of
/// `targets`. Variables of the unmatched side that the match does not bind
/// range over the constants of the signature.
Gtes seed_instances(TermStore& store, const Tes& tes, std::span<const TermId> targets,
                    MatchSides sides);

Seeds seed_all(TermStore& store, const Tes& tes, TermId p, TermId q, MatchSides sides);

/// One way a pattern evaluates to a state: the state bound to each variable
/// (indexed by variable number, kNoState when absent) and the result state.
struct PatternRun {
  static constexpr StateId kNoState = static_cast<StateId>(-1);
  std::vector<StateId> binding;
  StateId state;
};

/// Every state assignment a of the pattern's variables and state s with
/// pattern[a] ->* s. Throws BudgetExceeded past `budget` partial runs.
std::vector<PatternRun> pattern_runs(const TermStore& store, const TreeAutomaton& a,
                                     TermId pattern, std::size_t budget);

/// Height-stratified automaton normal forms: layers[j] holds the normal
/// forms of all ground terms of height <= j. Each layer is sorted
/// alphabetically.
struct NormSets {
  std::vector<std::vector<TermId>> layers;
  const std::vector<TermId>& top() const { return layers.back(); }
};

/// Throws BudgetExceeded when a layer grows past `budget` terms.
NormSets norm_sets(TermStore& store, const TreeAutomaton& a, unsigned i, std::size_t budget);

/// Replaces every state occurrence by its witness tree.
TermId expand_states(TermStore& store, TermId t, const std::vector<TermId>& trees);

/// Witness-tree expansion of the top NORM layer, sorted alphabetically.
std::vector<TermId> rep_set(TermStore& store, const NormSets& norm,
                            const std::vector<TermId>& trees);

/// Everything the step from X_i to X_{i+1} needs about X_i.
struct StepInputs {
  const CctaResult* ccta;
  const std::vector<TermId>* trees;
  /// States from which a goal target class is reachable.
  std::vector<bool> reaches_goal;
  /// Instantiation pool for variables of the unmatched side (REP_i).
  const std::vector<TermId>* reps;
};

/// The additions to `cur` for one step: instances l[tree(a..)] = r[tree(a..), v..]
/// for each state run of a matched side into a state that reaches a goal,
/// skipping those already equivalent under `cur`. Sorted for tracing.
std::vector<GroundEquation> step_additions(TermStore& store, const Tes& tes,
                                           const StepInputs& in, MatchSides sides,
                                           std::size_t budget);

/// Goal classes of a system kind inside a CCTA built for targets (p, q).
std::vector<StateId> goal_states(const CctaResult& ccta, SystemKind kind);

/// True if some equation of the system has a variable on one side only.
bool needs_reps(const Tes& tes);

}  // namespace groundeq
