#include "groundeq/instances.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "groundeq/error.hpp"

namespace groundeq {

const char* to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::W:
      return "W";
    case SystemKind::P:
      return "P";
    case SystemKind::Q:
      return "Q";
  }
  return "?";
}

namespace {

/// Free variables of `side` not bound by `bound`.
std::vector<unsigned> unbound_vars(const TermStore& store, TermId side,
                                   const Assignment& bound) {
  std::vector<unsigned> out;
  for (unsigned v : vars(store, side))
    if (!bound.count(v)) out.push_back(v);
  return out;
}

template <typename Emit>
void for_each_extension(const Assignment& base, const std::vector<unsigned>& free,
                        const std::vector<TermId>& pool, Emit&& emit) {
  if (free.empty()) {
    emit(base);
    return;
  }
  if (pool.empty()) return;
  Assignment a = base;
  std::vector<std::size_t> idx(free.size(), 0);
  while (true) {
    for (std::size_t j = 0; j < free.size(); ++j) a[free[j]] = pool[idx[j]];
    emit(a);
    std::size_t j = 0;
    while (j < free.size() && ++idx[j] == pool.size()) idx[j++] = 0;
    if (j == free.size()) return;
  }
}

}  // namespace

Gtes seed_instances(TermStore& store, const Tes& tes, std::span<const TermId> targets,
                    MatchSides sides) {
  std::vector<TermId> constants;
  for (SymbolId c : store.signature().constants()) constants.push_back(store.constant(c));

  std::vector<TermId> universe;
  std::unordered_set<TermId> seen;
  for (TermId t : targets)
    for (TermId s : subterms(store, t))
      if (seen.insert(s).second) universe.push_back(s);

  Gtes out;
  for (const Equation& eq : tes.equations) {
    for (TermId s : universe) {
      for (bool lhs_side : {true, false}) {
        if (!lhs_side && sides == MatchSides::LhsOnly) continue;
        TermId matched = lhs_side ? eq.lhs : eq.rhs;
        TermId other = lhs_side ? eq.rhs : eq.lhs;
        Assignment a;
        if (!match(store, matched, s, a)) continue;
        for_each_extension(a, unbound_vars(store, other, a), constants,
                           [&](const Assignment& full) {
                             out.insert({substitute(store, eq.lhs, full),
                                         substitute(store, eq.rhs, full)});
                           });
      }
    }
  }
  return out;
}

Seeds seed_all(TermStore& store, const Tes& tes, TermId p, TermId q, MatchSides sides) {
  const TermId both[] = {p, q};
  return {seed_instances(store, tes, both, sides),
          seed_instances(store, tes, std::span<const TermId>(&p, 1), sides),
          seed_instances(store, tes, std::span<const TermId>(&q, 1), sides)};
}

namespace {

void pattern_runs_rec(const TermStore& store, const TreeAutomaton& a, TermId pattern,
                      std::size_t width, std::size_t budget, std::vector<PatternRun>& out) {
  constexpr StateId none = PatternRun::kNoState;
  if (store.kind(pattern) == NodeKind::Var) {
    for (StateId s = 0; s < a.state_count(); ++s) {
      PatternRun r{std::vector<StateId>(width, none), s};
      r.binding[store.var_index(pattern)] = s;
      out.push_back(std::move(r));
    }
    return;
  }
  if (store.kind(pattern) == NodeKind::State) {
    out.push_back({std::vector<StateId>(width, none), store.state_id(pattern)});
    return;
  }

  auto kids = store.children(pattern);
  std::vector<std::map<StateId, std::vector<std::vector<StateId>>>> by_state(kids.size());
  for (std::size_t j = 0; j < kids.size(); ++j) {
    std::vector<PatternRun> child;
    pattern_runs_rec(store, a, kids[j], width, budget, child);
    if (child.empty()) return;
    for (auto& r : child) by_state[j][r.state].push_back(std::move(r.binding));
  }

  std::size_t work = 0;
  for (const Rule& rule : a.rules_for(store.symbol(pattern))) {
    std::vector<std::vector<StateId>> partial{std::vector<StateId>(width, none)};
    for (std::size_t j = 0; j < kids.size() && !partial.empty(); ++j) {
      auto it = by_state[j].find(rule.args[j]);
      if (it == by_state[j].end()) {
        partial.clear();
        break;
      }
      std::vector<std::vector<StateId>> next;
      for (const auto& p : partial)
        for (const auto& c : it->second) {
          std::vector<StateId> merged = p;
          bool ok = true;
          for (std::size_t v = 0; v < width && ok; ++v) {
            if (c[v] == none) continue;
            if (merged[v] == none)
              merged[v] = c[v];
            else
              ok = merged[v] == c[v];
          }
          if (!ok) continue;
          next.push_back(std::move(merged));
          if (++work > budget)
            throw BudgetExceeded("pattern evaluation exceeded " + std::to_string(budget) +
                                 " partial runs");
        }
      partial = std::move(next);
    }
    for (auto& b : partial) out.push_back({std::move(b), rule.target});
  }
}

}  // namespace

std::vector<PatternRun> pattern_runs(const TermStore& store, const TreeAutomaton& a,
                                     TermId pattern, std::size_t budget) {
  std::size_t width = 1;
  for (unsigned v : vars(store, pattern)) width = std::max<std::size_t>(width, v + 1);
  std::vector<PatternRun> out;
  pattern_runs_rec(store, a, pattern, width, budget, out);
  return out;
}

NormSets norm_sets(TermStore& store, const TreeAutomaton& a, unsigned i, std::size_t budget) {
  const Signature& sig = store.signature();
  NormSets out;
  std::vector<TermId> layer;
  {
    std::unordered_set<TermId> seen;
    for (SymbolId c : sig.constants()) {
      TermId nf = nf_mixed(store, a, store.constant(c));
      if (seen.insert(nf).second) layer.push_back(nf);
    }
  }
  sort_alph(store, layer);
  out.layers.push_back(layer);

  for (unsigned j = 1; j <= i; ++j) {
    const std::vector<TermId>& prev = out.layers.back();
    std::vector<TermId> next = prev;
    std::unordered_set<TermId> seen(prev.begin(), prev.end());
    std::size_t work = 0;
    for (SymbolId f = 0; f < sig.size() && !prev.empty(); ++f) {
      const unsigned m = sig.rank(f);
      if (m == 0) continue;
      std::vector<std::size_t> idx(m, 0);
      std::vector<TermId> args(m);
      std::vector<StateId> states;
      while (true) {
        if (++work > budget)
          throw BudgetExceeded("normal-form layer " + std::to_string(j) + " exceeded " +
                               std::to_string(budget) + " candidate terms");
        states.clear();
        for (unsigned k = 0; k < m; ++k) {
          args[k] = prev[idx[k]];
          if (store.kind(args[k]) == NodeKind::State) states.push_back(store.state_id(args[k]));
        }
        // Arguments are already normal, so only the root can still reduce.
        std::optional<StateId> target;
        if (states.size() == m) target = a.lookup(f, states);
        TermId nf = target ? store.state(*target) : store.app(f, args);
        if (seen.insert(nf).second) next.push_back(nf);
        unsigned k = 0;
        while (k < m && ++idx[k] == prev.size()) idx[k++] = 0;
        if (k == m) break;
      }
    }
    sort_alph(store, next);
    out.layers.push_back(std::move(next));
  }
  return out;
}

TermId expand_states(TermStore& store, TermId t, const std::vector<TermId>& trees) {
  if (!store.has_state(t)) return t;
  if (store.kind(t) == NodeKind::State) return trees.at(store.state_id(t));
  const std::size_t n = store.children(t).size();
  std::vector<TermId> kids(n);
  for (std::size_t i = 0; i < n; ++i) kids[i] = expand_states(store, store.children(t)[i], trees);
  return store.app(store.symbol(t), kids);
}

std::vector<TermId> rep_set(TermStore& store, const NormSets& norm,
                            const std::vector<TermId>& trees) {
  std::vector<TermId> out;
  std::unordered_set<TermId> seen;
  for (TermId w : norm.top()) {
    TermId t = expand_states(store, w, trees);
    if (seen.insert(t).second) out.push_back(t);
  }
  sort_alph(store, out);
  return out;
}

std::vector<GroundEquation> step_additions(TermStore& store, const Tes& tes,
                                           const StepInputs& in, MatchSides sides,
                                           std::size_t budget) {
  const TreeAutomaton& a = in.ccta->automaton;
  const std::vector<TermId>& trees = *in.trees;
  static const std::vector<TermId> kNoReps;
  const std::vector<TermId>& reps = in.reps ? *in.reps : kNoReps;

  std::vector<GroundEquation> added;
  std::unordered_set<GroundEquation, GroundEquationHash> seen;
  std::size_t considered = 0;
  for (const Equation& eq : tes.equations) {
    for (bool lhs_side : {true, false}) {
      if (!lhs_side && sides == MatchSides::LhsOnly) continue;
      TermId matched = lhs_side ? eq.lhs : eq.rhs;
      TermId other = lhs_side ? eq.rhs : eq.lhs;
      for (const PatternRun& run : pattern_runs(store, a, matched, budget)) {
        if (!in.reaches_goal[run.state]) continue;
        Assignment base;
        for (std::size_t v = 0; v < run.binding.size(); ++v)
          if (run.binding[v] != PatternRun::kNoState)
            base[static_cast<unsigned>(v)] = trees[run.binding[v]];
        for_each_extension(base, unbound_vars(store, other, base), reps,
                           [&](const Assignment& full) {
                             if (++considered > budget)
                               throw BudgetExceeded("step exceeded " + std::to_string(budget) +
                                                    " instances");
                             GroundEquation e{substitute(store, eq.lhs, full),
                                              substitute(store, eq.rhs, full)};
                             if (seen.count(e)) return;
                             if (nf_mixed(store, a, e.lhs) == nf_mixed(store, a, e.rhs)) return;
                             seen.insert(e);
                             added.push_back(e);
                           });
      }
    }
  }
  sort_equations(store, added);
  return added;
}

std::vector<StateId> goal_states(const CctaResult& ccta, SystemKind kind) {
  StateId p = ccta.targets.at(0).second;
  StateId q = ccta.targets.at(1).second;
  switch (kind) {
    case SystemKind::W:
      return {p, q};
    case SystemKind::P:
      return {p};
    case SystemKind::Q:
      return {q};
  }
  return {};
}

bool needs_reps(const Tes& tes) {
  return std::any_of(tes.equations.begin(), tes.equations.end(),
                     [](const Equation& e) { return !e.variable_preserving(); });
}

}  // namespace groundeq
