#pragma once

#include <iosfwd>

#include "groundeq/automaton.hpp"
#include "groundeq/procedure.hpp"

namespace groundeq {

/// States with their labels, then rules in rule order, one per line.
void write_automaton(std::ostream& out, const TermStore& store, const TreeAutomaton& a);

/// One block per step. Each system lists its added equations and its
/// automaton. Normal-form layer sizes and the REP set follow when computed.
/// Ends with the verdict. The output depends only on the run.
void write_trace(std::ostream& out, const TermStore& store, const RunResult& run);

}  // namespace groundeq
