#include "groundeq/gtrs.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "groundeq/automaton.hpp"
#include "groundeq/error.hpp"

namespace groundeq {

namespace {

constexpr std::size_t kGroundTermLimit = 1'000'000;

/// Calls `emit` for every extension of `base` binding each of `free` to a
/// term of `pool`.
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

/// Subterm of t at the position of the hole of `context`, if t has the
/// context's shape around it.
std::optional<TermId> at_hole(const TermStore& store, TermId context, TermId t) {
  if (store.kind(context) == NodeKind::Var) return t;
  if (store.kind(t) != NodeKind::App || store.symbol(t) != store.symbol(context))
    return std::nullopt;
  auto ck = store.children(context);
  auto tk = store.children(t);
  std::optional<TermId> found;
  for (std::size_t i = 0; i < ck.size(); ++i) {
    if (store.is_ground(ck[i])) {
      if (ck[i] != tk[i]) return std::nullopt;
    } else {
      found = at_hole(store, ck[i], tk[i]);
      if (!found) return std::nullopt;
    }
  }
  return found;
}

}  // namespace

std::vector<StepResult> one_step_with_origin(TermStore& store, const Tes& tes, TermId t,
                                             const std::vector<TermId>& pool) {
  std::map<TermId, StepResult> found;
  for (std::size_t i = 0; i < tes.equations.size(); ++i) {
    const Equation& eq = tes.equations[i];
    for (bool ltr : {true, false}) {
      TermId from = ltr ? eq.lhs : eq.rhs;
      TermId to = ltr ? eq.rhs : eq.lhs;
      for (const MatchInstance& mi : match_instances(store, from, t)) {
        std::vector<unsigned> free;
        for (unsigned v : vars(store, to))
          if (!mi.assignment.count(v)) free.push_back(v);
        for_each_extension(mi.assignment, free, pool, [&](const Assignment& a) {
          TermId s = plug(store, mi.context, substitute(store, to, a));
          found.emplace(s, StepResult{s, i, ltr});
        });
      }
    }
  }
  std::vector<StepResult> out;
  out.reserve(found.size());
  for (auto& [_, r] : found) out.push_back(r);
  std::sort(out.begin(), out.end(), [&](const StepResult& a, const StepResult& b) {
    return compare_alph(store, a.term, b.term) < 0;
  });
  return out;
}

std::vector<StepResult> one_step_with_origin(TermStore& store, const Tes& tes, TermId t,
                                             unsigned hbound) {
  std::vector<TermId> pool;
  if (!is_variable_preserving(tes)) pool = ground_terms_up_to(store, hbound, kGroundTermLimit);
  return one_step_with_origin(store, tes, t, pool);
}

std::vector<TermId> one_step(TermStore& store, const Tes& tes, TermId t, unsigned hbound) {
  std::vector<TermId> out;
  for (const auto& r : one_step_with_origin(store, tes, t, hbound)) out.push_back(r.term);
  return out;
}

bool is_single_step(TermStore& store, const Equation& eq, bool left_to_right, TermId s,
                    TermId t) {
  TermId from = left_to_right ? eq.lhs : eq.rhs;
  TermId to = left_to_right ? eq.rhs : eq.lhs;
  for (MatchInstance& mi : match_instances(store, from, s)) {
    auto sub = at_hole(store, mi.context, t);
    if (!sub) continue;
    Assignment a = mi.assignment;
    if (match(store, to, *sub, a)) return true;
  }
  return false;
}

bool is_reduced(const TermStore& store, const std::vector<GroundEquation>& rules) {
  std::unordered_map<TermId, std::size_t> lhs_count;
  for (const auto& r : rules) ++lhs_count[r.lhs];
  auto count = [&](TermId t) {
    auto it = lhs_count.find(t);
    return it == lhs_count.end() ? std::size_t{0} : it->second;
  };
  for (const auto& r : rules) {
    for (TermId s : subterms(store, r.lhs)) {
      std::size_t others = count(s) - (s == r.lhs ? 1 : 0);
      if (others > 0) return false;
    }
    for (TermId s : subterms(store, r.rhs))
      if (count(s) > 0) return false;
  }
  return true;
}

ReducedGtrs ReducedGtrs::from_rules(const TermStore& store, std::vector<GroundEquation> rules) {
  if (!is_reduced(store, rules)) throw Error("rule set is not reduced");
  ReducedGtrs out;
  out.rules_ = std::move(rules);
  for (const auto& r : out.rules_) out.by_lhs_.emplace(r.lhs, r.rhs);
  return out;
}

ReducedGtrs reduce_gtes(TermStore& store, const Gtes& eqs) {
  // Orient every congruence-automaton rule f(a1..am) -> a into
  // f(tree(a1)..tree(am)) -> tree(a); the rule that defined tree(a) becomes
  // trivial and is dropped, the rest form a reduced system.
  CctaResult ccta = build_ccta(store, eqs, {});
  std::vector<TermId> tree = trees_of_states(store, ccta.automaton);
  std::vector<GroundEquation> rules;
  for (const Rule& r : ccta.automaton.rules()) {
    std::vector<TermId> kids;
    for (StateId s : r.args) kids.push_back(tree[s]);
    TermId lhs = store.app(r.symbol, kids);
    if (lhs != tree[r.target]) rules.push_back({lhs, tree[r.target]});
  }
  sort_equations(store, rules);
  ReducedGtrs out;
  out.rules_ = std::move(rules);
  for (const auto& r : out.rules_) out.by_lhs_.emplace(r.lhs, r.rhs);
  return out;
}

namespace {

TermId normalize_rec(TermStore& store, const ReducedGtrs& r, TermId t,
                     std::unordered_map<TermId, TermId>& memo) {
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  TermId cur = t;
  if (store.kind(t) == NodeKind::App && !store.children(t).empty()) {
    const std::size_t n = store.children(t).size();
    std::vector<TermId> kids(n);
    for (std::size_t i = 0; i < n; ++i)
      kids[i] = normalize_rec(store, r, store.children(t)[i], memo);
    cur = store.app(store.symbol(t), kids);
  }
  TermId result = cur;
  if (const TermId* rhs = r.rewrite(cur)) result = normalize_rec(store, r, *rhs, memo);
  memo.emplace(t, result);
  return result;
}

}  // namespace

TermId normalize(TermStore& store, const ReducedGtrs& r, TermId t) {
  std::unordered_map<TermId, TermId> memo;
  return normalize_rec(store, r, t, memo);
}

bool gtes_equiv(TermStore& store, const Gtes& eqs, TermId s, TermId t) {
  if (s == t) return true;
  ReducedGtrs r = reduce_gtes(store, eqs);
  return normalize(store, r, s) == normalize(store, r, t);
}

}  // namespace groundeq
