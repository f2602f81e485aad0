#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "groundeq/automaton.hpp"
#include "groundeq/equation.hpp"
#include "groundeq/instances.hpp"

namespace groundeq {

struct Verdict {
  enum class Kind { Yes, No, Exhausted };
  Kind kind;
  unsigned step;

  static Verdict yes(unsigned step) { return {Kind::Yes, step}; }
  static Verdict no(unsigned step) { return {Kind::No, step}; }
  static Verdict exhausted(unsigned step) { return {Kind::Exhausted, step}; }
  bool operator==(const Verdict&) const = default;
};

/// "yes (step 2)", "no (step 2)" or "unknown (step 6)".
std::string to_string(const Verdict& v);

struct ProcedureOptions {
  unsigned max_steps = 10;
  MatchSides sides = MatchSides::Both;
  /// Replace each system by an equivalent reduced GTRS after every step.
  bool reduce = false;
  /// Per-step limit on enumerated instances and normal-form candidates.
  std::size_t budget = 100000;
};

/// One of W_i, P_i, Q_i together with everything derived from it.
struct SystemRecord {
  SystemKind kind;
  Gtes equations;
  /// Equations new in this step, sorted (the seed itself for step 1).
  std::vector<GroundEquation> added;
  CctaResult ccta;
  std::vector<TermId> trees;
  bool totally_defined = false;
  /// Filled in only when the general procedure takes a further step that
  /// needs instantiation pools.
  std::optional<NormSets> norm;
  std::vector<TermId> reps;
};

struct StepRecord {
  unsigned index;
  std::array<SystemRecord, 3> systems;  // W, P, Q
  /// p and q share a class in the W automaton.
  bool equivalent;
};

struct RunResult {
  Verdict verdict;
  std::vector<StepRecord> steps;
  /// Why a run ended early, e.g. the budget message.
  std::string note;
};

/// Builds the CCTA of `eqs` for targets (p, q) and its witness trees.
SystemRecord analyze_system(TermStore& store, SystemKind kind, Gtes eqs, TermId p, TermId q);

/// The general procedure's step when `general` is set, the variable-preserving
/// step otherwise. Computes `prev.norm` and `prev.reps` when instantiation
/// pools are needed. Throws BudgetExceeded.
std::vector<GroundEquation> next_additions(TermStore& store, const Tes& tes, SystemRecord& prev,
                                           unsigned i, bool general,
                                           const ProcedureOptions& opts);

/// The shared iteration loop. The 'no' rule requires a totally defined
/// previous automaton when `general` is set.
RunResult run_procedure(TermStore& store, const Tes& tes, TermId p, TermId q,
                        const ProcedureOptions& opts, bool general);

}  // namespace groundeq
