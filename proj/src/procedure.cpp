#include "groundeq/procedure.hpp"

#include "groundeq/error.hpp"
#include "groundeq/gtrs.hpp"

namespace groundeq {

std::string to_string(const Verdict& v) {
  const char* word = v.kind == Verdict::Kind::Yes  ? "yes"
                     : v.kind == Verdict::Kind::No ? "no"
                                                   : "unknown";
  return std::string(word) + " (step " + std::to_string(v.step) + ")";
}

SystemRecord analyze_system(TermStore& store, SystemKind kind, Gtes eqs, TermId p, TermId q) {
  SystemRecord r;
  r.kind = kind;
  r.equations = std::move(eqs);
  const TermId targets[] = {p, q};
  r.ccta = build_ccta(store, r.equations, targets);
  r.trees = trees_of_states(store, r.ccta.automaton);
  r.totally_defined = is_totally_defined(store.signature(), r.ccta.automaton);
  return r;
}

std::vector<GroundEquation> next_additions(TermStore& store, const Tes& tes, SystemRecord& prev,
                                           unsigned i, bool general,
                                           const ProcedureOptions& opts) {
  const std::vector<StateId> goals = goal_states(prev.ccta, prev.kind);
  StepInputs in{&prev.ccta, &prev.trees, states_reaching(prev.ccta.automaton, goals), nullptr};
  if (general && needs_reps(tes)) {
    prev.norm = norm_sets(store, prev.ccta.automaton, i, opts.budget);
    prev.reps = rep_set(store, *prev.norm, prev.trees);
    in.reps = &prev.reps;
  }
  return step_additions(store, tes, in, opts.sides, opts.budget);
}

namespace {

Gtes reduced(TermStore& store, const Gtes& eqs) {
  Gtes out;
  const ReducedGtrs r = reduce_gtes(store, eqs);
  for (const auto& rule : r.rules()) out.insert(rule);
  return out;
}

StepRecord make_step(TermStore& store, unsigned index, std::array<Gtes, 3> systems,
                     std::array<std::vector<GroundEquation>, 3> added, TermId p, TermId q) {
  static constexpr SystemKind kinds[] = {SystemKind::W, SystemKind::P, SystemKind::Q};
  StepRecord step{index, {}, false};
  for (int k = 0; k < 3; ++k) {
    step.systems[k] = analyze_system(store, kinds[k], std::move(systems[k]), p, q);
    step.systems[k].added = std::move(added[k]);
  }
  const auto& w = step.systems[0].ccta;
  step.equivalent = w.targets[0].second == w.targets[1].second;
  return step;
}

}  // namespace

RunResult run_procedure(TermStore& store, const Tes& tes, TermId p, TermId q,
                        const ProcedureOptions& opts, bool general) {
  if (opts.max_steps == 0) throw Error("max_steps must be at least 1");
  RunResult run{Verdict::exhausted(opts.max_steps), {}, {}};

  Seeds seeds = seed_all(store, tes, p, q, opts.sides);
  std::array<Gtes, 3> first{std::move(seeds.w), std::move(seeds.p), std::move(seeds.q)};
  std::array<std::vector<GroundEquation>, 3> first_added;
  for (int k = 0; k < 3; ++k) {
    first_added[k] = first[k].equations();
    sort_equations(store, first_added[k]);
    if (opts.reduce) first[k] = reduced(store, first[k]);
  }
  run.steps.push_back(make_step(store, 1, std::move(first), std::move(first_added), p, q));
  if (run.steps.back().equivalent) {
    run.verdict = Verdict::yes(1);
    return run;
  }

  for (unsigned i = 2; i <= opts.max_steps; ++i) {
    std::array<Gtes, 3> next;
    std::array<std::vector<GroundEquation>, 3> added;
    try {
      for (int k = 0; k < 3; ++k) {
        SystemRecord& prev = run.steps.back().systems[k];
        added[k] = next_additions(store, tes, prev, i - 1, general, opts);
        next[k] = prev.equations;
        for (const auto& e : added[k]) next[k].insert(e);
        if (opts.reduce) next[k] = reduced(store, next[k]);
      }
    } catch (const BudgetExceeded& e) {
      run.verdict = Verdict::exhausted(i);
      run.note = e.what();
      return run;
    }
    run.steps.push_back(make_step(store, i, std::move(next), std::move(added), p, q));

    const StepRecord& cur = run.steps.back();
    if (cur.equivalent) {
      run.verdict = Verdict::yes(i);
      return run;
    }
    const StepRecord& before = run.steps[run.steps.size() - 2];
    for (int k = 0; k < 3; ++k) {
      bool stable = cur.systems[k].equations == before.systems[k].equations;
      if (general) stable = stable && before.systems[k].totally_defined;
      if (stable) {
        run.verdict = Verdict::no(i);
        return run;
      }
    }
  }
  return run;
}

}  // namespace groundeq
