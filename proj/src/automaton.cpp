#include "groundeq/automaton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "groundeq/error.hpp"

namespace groundeq {

namespace {

std::vector<std::uint32_t> rule_key(SymbolId symbol, std::span<const StateId> args) {
  std::vector<std::uint32_t> key;
  key.reserve(args.size() + 1);
  key.push_back(symbol);
  key.insert(key.end(), args.begin(), args.end());
  return key;
}

bool rule_less(const Rule& a, const Rule& b) {
  if (a.symbol != b.symbol) return a.symbol < b.symbol;
  if (a.args != b.args) return a.args < b.args;
  return a.target < b.target;
}

}  // namespace

std::size_t TreeAutomaton::KeyHash::operator()(const std::vector<std::uint32_t>& k) const noexcept {
  std::size_t h = k.size();
  for (auto v : k) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

TreeAutomaton::TreeAutomaton(std::vector<State> states, std::vector<Rule> rules)
    : states_(std::move(states)), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i].id != i) throw Error("state ids must be 0..n-1 in order");
  for (const Rule& r : rules_) {
    if (r.target >= states_.size()) throw Error("rule target out of range");
    for (StateId s : r.args)
      if (s >= states_.size()) throw Error("rule argument out of range");
  }
  std::sort(rules_.begin(), rules_.end(), rule_less);
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  for (const Rule& r : rules_) lookup_.emplace(rule_key(r.symbol, r.args), r.target);
}

std::optional<StateId> TreeAutomaton::lookup(SymbolId symbol,
                                             std::span<const StateId> args) const {
  auto it = lookup_.find(rule_key(symbol, args));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const Rule> TreeAutomaton::rules_for(SymbolId symbol) const {
  auto lo = std::lower_bound(rules_.begin(), rules_.end(), symbol,
                             [](const Rule& r, SymbolId f) { return r.symbol < f; });
  auto hi = std::upper_bound(rules_.begin(), rules_.end(), symbol,
                             [](SymbolId f, const Rule& r) { return f < r.symbol; });
  return {rules_.data() + (lo - rules_.begin()), static_cast<std::size_t>(hi - lo)};
}

std::string TreeAutomaton::label(const TermStore& store, StateId s) const {
  if (s < states_.size() && states_[s].representative)
    return "[" + to_string(store, *states_[s].representative) + "]";
  return "[#" + std::to_string(s) + "]";
}

StateLabeler TreeAutomaton::labeler(const TermStore& store) const {
  return [this, &store](StateId s) { return label(store, s); };
}

bool TreeAutomaton::operator==(const TreeAutomaton& other) const {
  if (states_.size() != other.states_.size() || rules_ != other.rules_) return false;
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i].representative != other.states_[i].representative) return false;
  return true;
}

namespace {

/// Union-find congruence closure over a fixed, subterm-closed universe.
/// Each merge re-signs the parents of the absorbed class; a signature
/// collision between different classes queues a congruence merge.
class CongruenceClosure {
 public:
  CongruenceClosure(const TermStore& store, std::vector<TermId> universe)
      : store_(store), terms_(std::move(universe)) {
    const std::size_t n = terms_.size();
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0u);
    class_size_.assign(n, 1);
    uses_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) index_.emplace(terms_[i], i);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (TermId c : store_.children(terms_[i])) uses_[index_.at(c)].push_back(i);
      signatures_.emplace(signature(i), i);
    }
  }

  void merge(TermId a, TermId b) {
    pending_.emplace_back(index_.at(a), index_.at(b));
    propagate();
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::uint32_t index(TermId t) const { return index_.at(t); }
  const std::vector<TermId>& terms() const { return terms_; }

 private:
  std::vector<std::uint32_t> signature(std::uint32_t i) {
    std::vector<std::uint32_t> key;
    key.push_back(store_.symbol(terms_[i]));
    for (TermId c : store_.children(terms_[i])) key.push_back(find(index_.at(c)));
    return key;
  }

  void propagate() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      std::uint32_t ra = find(a), rb = find(b);
      if (ra == rb) continue;
      if (class_size_[ra] > class_size_[rb]) std::swap(ra, rb);
      parent_[ra] = rb;
      class_size_[rb] += class_size_[ra];
      for (std::uint32_t p : uses_[ra]) {
        auto key = signature(p);
        auto [it, inserted] = signatures_.emplace(std::move(key), p);
        if (!inserted && find(it->second) != find(p)) pending_.emplace_back(p, it->second);
      }
      uses_[rb].insert(uses_[rb].end(), uses_[ra].begin(), uses_[ra].end());
      uses_[ra].clear();
    }
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept {
      std::size_t h = k.size();
      for (auto v : k) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  const TermStore& store_;
  std::vector<TermId> terms_;
  std::unordered_map<TermId, std::uint32_t> index_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> class_size_;
  std::vector<std::vector<std::uint32_t>> uses_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> signatures_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

}  // namespace

CctaResult build_ccta(TermStore& store, const Gtes& eqs, std::span<const TermId> targets) {
  std::vector<TermId> universe;
  std::unordered_set<TermId> seen;
  auto add = [&](TermId t) {
    for (TermId s : subterms(store, t))
      if (seen.insert(s).second) universe.push_back(s);
  };
  for (const auto& e : eqs) {
    add(e.lhs);
    add(e.rhs);
  }
  for (TermId t : targets) add(t);

  CongruenceClosure cc(store, universe);
  for (const auto& e : eqs) cc.merge(e.lhs, e.rhs);

  // Group members by root, pick the alphabetically smallest member of each
  // class, and number the classes in that order.
  std::unordered_map<std::uint32_t, TermId> smallest;
  for (std::uint32_t i = 0; i < universe.size(); ++i) {
    std::uint32_t root = cc.find(i);
    auto [it, inserted] = smallest.emplace(root, universe[i]);
    if (!inserted && compare_alph(store, universe[i], it->second) < 0) it->second = universe[i];
  }
  std::vector<std::pair<TermId, std::uint32_t>> classes;
  classes.reserve(smallest.size());
  for (auto [root, rep] : smallest) classes.emplace_back(rep, root);
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    return compare_alph(store, a.first, b.first) < 0;
  });
  std::unordered_map<std::uint32_t, StateId> state_of_root;
  std::vector<State> states;
  for (StateId s = 0; s < classes.size(); ++s) {
    state_of_root.emplace(classes[s].second, s);
    states.push_back({s, classes[s].first});
  }

  CctaResult out;
  for (std::uint32_t i = 0; i < universe.size(); ++i)
    out.class_of.emplace(universe[i], state_of_root.at(cc.find(i)));

  std::vector<Rule> rules;
  rules.reserve(universe.size());
  for (TermId t : universe) {
    Rule r{store.symbol(t), {}, out.class_of.at(t)};
    for (TermId c : store.children(t)) r.args.push_back(out.class_of.at(c));
    rules.push_back(std::move(r));
  }
  out.automaton = TreeAutomaton(std::move(states), std::move(rules));
  out.universe = std::move(universe);
  for (TermId t : targets) out.targets.emplace_back(t, out.class_of.at(t));
  return out;
}

namespace {

TermId nf_rec(TermStore& store, const TreeAutomaton& a, TermId t,
              std::unordered_map<TermId, TermId>& memo) {
  if (store.kind(t) != NodeKind::App) return t;
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  const std::size_t n = store.children(t).size();
  std::vector<TermId> kids(n);
  std::vector<StateId> states;
  states.reserve(n);
  bool all_states = true;
  for (std::size_t i = 0; i < n; ++i) {
    kids[i] = nf_rec(store, a, store.children(t)[i], memo);
    if (store.kind(kids[i]) == NodeKind::State)
      states.push_back(store.state_id(kids[i]));
    else
      all_states = false;
  }
  TermId result;
  std::optional<StateId> target;
  if (all_states) target = a.lookup(store.symbol(t), states);
  result = target ? store.state(*target) : store.app(store.symbol(t), kids);
  memo.emplace(t, result);
  return result;
}

std::optional<StateId> eval_rec(const TermStore& store, const TreeAutomaton& a, TermId t,
                                std::unordered_map<TermId, std::optional<StateId>>& memo) {
  if (store.kind(t) == NodeKind::State) return store.state_id(t);
  if (store.kind(t) == NodeKind::Var) return std::nullopt;
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  std::vector<StateId> states;
  std::optional<StateId> result;
  bool ok = true;
  for (TermId c : store.children(t)) {
    auto s = eval_rec(store, a, c, memo);
    if (!s) {
      ok = false;
      break;
    }
    states.push_back(*s);
  }
  if (ok) result = a.lookup(store.symbol(t), states);
  memo.emplace(t, result);
  return result;
}

}  // namespace

TermId nf_mixed(TermStore& store, const TreeAutomaton& a, TermId t) {
  std::unordered_map<TermId, TermId> memo;
  return nf_rec(store, a, t, memo);
}

std::optional<StateId> evaluate(const TermStore& store, const TreeAutomaton& a, TermId t) {
  std::unordered_map<TermId, std::optional<StateId>> memo;
  return eval_rec(store, a, t, memo);
}

std::vector<std::set<StateId>> reach_levels(const TreeAutomaton& a, StateId c) {
  std::vector<std::set<StateId>> levels{{c}};
  while (true) {
    std::set<StateId> next = levels.back();
    for (const Rule& r : a.rules())
      for (StateId arg : r.args)
        if (levels.back().count(arg)) {
          next.insert(r.target);
          break;
        }
    if (next == levels.back()) return levels;
    levels.push_back(std::move(next));
  }
}

std::set<StateId> reach_set(const TreeAutomaton& a, StateId c) {
  return reach_levels(a, c).back();
}

bool reaches(const TreeAutomaton& a, StateId from, StateId to) {
  return reach_set(a, from).count(to) != 0;
}

std::vector<bool> states_reaching(const TreeAutomaton& a, std::span<const StateId> goals) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<StateId>> preds(n);
  for (const Rule& r : a.rules())
    for (StateId arg : r.args) preds[r.target].push_back(arg);
  std::vector<bool> mark(n, false);
  std::vector<StateId> work;
  for (StateId g : goals)
    if (!mark[g]) {
      mark[g] = true;
      work.push_back(g);
    }
  while (!work.empty()) {
    StateId s = work.back();
    work.pop_back();
    for (StateId p : preds[s])
      if (!mark[p]) {
        mark[p] = true;
        work.push_back(p);
      }
  }
  return mark;
}

std::vector<TermId> trees_of_states(TermStore& store, const TreeAutomaton& a) {
  const std::size_t n = a.state_count();
  std::vector<TermId> tree(n);
  std::vector<bool> flag(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    bool progress = false;
    for (const Rule& r : a.rules()) {
      if (flag[r.target]) continue;
      if (!std::all_of(r.args.begin(), r.args.end(), [&](StateId s) { return flag[s]; }))
        continue;
      std::vector<TermId> kids;
      kids.reserve(r.args.size());
      for (StateId s : r.args) kids.push_back(tree[s]);
      tree[r.target] = store.app(r.symbol, kids);
      flag[r.target] = true;
      --remaining;
      progress = true;
    }
    if (!progress) {
      std::ostringstream msg;
      msg << "unreachable states:";
      for (StateId s = 0; s < n; ++s)
        if (!flag[s]) msg << ' ' << a.label(store, s);
      throw NotConnected(msg.str());
    }
  }
  return tree;
}

bool is_deterministic(const TreeAutomaton& a) {
  const auto& rules = a.rules();
  for (std::size_t i = 1; i < rules.size(); ++i)
    if (rules[i].symbol == rules[i - 1].symbol && rules[i].args == rules[i - 1].args)
      return false;
  return true;
}

bool is_totally_defined(const Signature& sig, const TreeAutomaton& a) {
  const auto& rules = a.rules();
  const std::size_t n = a.state_count();
  for (SymbolId f = 0; f < sig.size(); ++f) {
    // Rules are sorted, so distinct left-hand sides for f are adjacent.
    std::size_t distinct = 0;
    const std::vector<StateId>* prev = nullptr;
    for (const Rule& r : rules) {
      if (r.symbol != f) continue;
      if (!prev || *prev != r.args) ++distinct;
      prev = &r.args;
    }
    std::size_t needed = 1;
    for (unsigned j = 0; j < sig.rank(f); ++j) {
      needed *= n;
      if (needed > distinct) return false;
    }
    if (distinct < needed) return false;
  }
  return true;
}

bool is_connected(TermStore& store, const TreeAutomaton& a) {
  try {
    trees_of_states(store, a);
    return true;
  } catch (const NotConnected&) {
    return false;
  }
}

std::vector<GroundEquation> rules_as_terms(TermStore& store, const TreeAutomaton& a) {
  std::vector<GroundEquation> out;
  for (const Rule& r : a.rules()) {
    std::vector<TermId> kids;
    for (StateId s : r.args) kids.push_back(store.state(s));
    out.push_back({store.app(r.symbol, kids), store.state(r.target)});
  }
  return out;
}

}  // namespace groundeq
