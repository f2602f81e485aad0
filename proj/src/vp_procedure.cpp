#include "groundeq/vp_procedure.hpp"

namespace groundeq {

Seeds seed_vp(TermStore& store, const Tes& tes, TermId p, TermId q, MatchSides sides) {
  require_variable_preserving(tes);
  return seed_all(store, tes, p, q, sides);
}

Gtes step_vp(TermStore& store, const Tes& tes, const Gtes& cur, TermId p, TermId q,
             SystemKind kind, MatchSides sides) {
  SystemRecord prev = analyze_system(store, kind, cur, p, q);
  ProcedureOptions opts;
  opts.sides = sides;
  Gtes next = cur;
  for (const auto& e : next_additions(store, tes, prev, 1, false, opts)) next.insert(e);
  return next;
}

RunResult run_vp(TermStore& store, const Tes& tes, TermId p, TermId q,
                 const ProcedureOptions& opts) {
  require_variable_preserving(tes);
  return run_procedure(store, tes, p, q, opts, false);
}

}  // namespace groundeq
