#include "groundeq/trace.hpp"

#include <ostream>

namespace groundeq {

void write_automaton(std::ostream& out, const TermStore& store, const TreeAutomaton& a) {
  const StateLabeler label = a.labeler(store);
  const Signature& sig = store.signature();
  out << "    states";
  for (StateId s = 0; s < a.state_count(); ++s) out << " " << label(s);
  out << "\n";
  for (const Rule& r : a.rules()) {
    out << "    " << sig.name(r.symbol);
    if (!r.args.empty()) {
      out << "(";
      for (std::size_t k = 0; k < r.args.size(); ++k) out << (k ? "," : "") << label(r.args[k]);
      out << ")";
    }
    out << " -> " << label(r.target) << "\n";
  }
}

void write_trace(std::ostream& out, const TermStore& store, const RunResult& run) {
  for (const StepRecord& step : run.steps) {
    out << "step " << step.index << "\n";
    for (const SystemRecord& sys : step.systems) {
      const char* name = to_string(sys.kind);
      out << "  " << name << " size " << sys.equations.size() << ", added " << sys.added.size()
          << "\n";
      for (const GroundEquation& e : sys.added) out << "    + " << to_string(store, e) << "\n";
      const TreeAutomaton& a = sys.ccta.automaton;
      out << "  " << name << " automaton: " << a.state_count() << " states, " << a.rules().size()
          << " rules, " << (sys.totally_defined ? "totally defined" : "partial") << "\n";
      write_automaton(out, store, a);
      if (sys.norm) {
        const StateLabeler label = a.labeler(store);
        out << "  " << name << " norm layers";
        for (const auto& layer : sys.norm->layers) out << " " << layer.size();
        out << "\n  " << name << " rep";
        for (TermId t : sys.reps) out << " " << to_string(store, t, label);
        out << "\n";
      }
    }
    out << "  p ~ q in W: " << (step.equivalent ? "yes" : "no") << "\n";
  }
  out << "verdict " << to_string(run.verdict) << "\n";
  if (!run.note.empty()) out << "note " << run.note << "\n";
}

}  // namespace groundeq
