#include "groundeq/gen_procedure.hpp"

namespace groundeq {

Seeds seed_gen(TermStore& store, const Tes& tes, TermId p, TermId q, MatchSides sides) {
  return seed_all(store, tes, p, q, sides);
}

Gtes step_gen(TermStore& store, const Tes& tes, const Gtes& cur, TermId p, TermId q,
              SystemKind kind, unsigned i, const ProcedureOptions& opts) {
  SystemRecord prev = analyze_system(store, kind, cur, p, q);
  Gtes next = cur;
  for (const auto& e : next_additions(store, tes, prev, i, true, opts)) next.insert(e);
  return next;
}

RunResult run_gen(TermStore& store, const Tes& tes, TermId p, TermId q,
                  const ProcedureOptions& opts) {
  return run_procedure(store, tes, p, q, opts, true);
}

}  // namespace groundeq
