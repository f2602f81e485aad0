#pragma once

#include "groundeq/procedure.hpp"

namespace groundeq {

/// W_1, P_1, Q_1 for a variable-preserving system. Throws NotVariablePreserving.
Seeds seed_vp(TermStore& store, const Tes& tes, TermId p, TermId q,
              MatchSides sides = MatchSides::Both);

/// cur extended by one step: instances l[tree(a..)] = r[tree(a..)] for state
/// runs of a matched side into a state from which a goal class of `kind` is
/// reachable, unless already equivalent under cur.
Gtes step_vp(TermStore& store, const Tes& tes, const Gtes& cur, TermId p, TermId q,
             SystemKind kind, MatchSides sides = MatchSides::Both);

/// Iterates until p and q meet in W_i (yes), some system stops growing (no),
/// or max_steps is reached. Throws NotVariablePreserving.
RunResult run_vp(TermStore& store, const Tes& tes, TermId p, TermId q,
                 const ProcedureOptions& opts = {});

}  // namespace groundeq
