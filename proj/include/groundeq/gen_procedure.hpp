#pragma once

#include "groundeq/procedure.hpp"

namespace groundeq {

/// W_1, P_1, Q_1 for an arbitrary system. Variables of the unmatched side
/// that the match leaves free range over the constants.
Seeds seed_gen(TermStore& store, const Tes& tes, TermId p, TermId q,
               MatchSides sides = MatchSides::Both);

/// cur extended by one step of the general construction, with free
/// variables of the unmatched side drawn from REP_i.
Gtes step_gen(TermStore& store, const Tes& tes, const Gtes& cur, TermId p, TermId q,
              SystemKind kind, unsigned i, const ProcedureOptions& opts = {});

/// Like run_vp, but a stabilized system only yields 'no' when its previous
/// automaton is totally defined.
RunResult run_gen(TermStore& store, const Tes& tes, TermId p, TermId q,
                  const ProcedureOptions& opts = {});

}  // namespace groundeq
