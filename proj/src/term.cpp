#include "groundeq/term.hpp"

#include <algorithm>
#include <unordered_set>

#include "groundeq/error.hpp"

namespace groundeq {

std::size_t TermStore::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ULL;
  h ^= k.payload + 0x9e3779b9 + (h << 6) + (h >> 2);
  for (TermId c : k.children) h ^= c.value + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

TermStore::TermStore(Signature signature) : signature_(std::move(signature)) {}

TermId TermStore::intern(Key key) {
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;

  Node n{};
  n.kind = key.kind;
  n.payload = key.payload;
  n.first_child = static_cast<std::uint32_t>(children_.size());
  n.arity = static_cast<std::uint32_t>(key.children.size());
  n.ground = key.kind != NodeKind::Var;
  n.has_state = key.kind == NodeKind::State;
  n.height = 0;
  n.size = 1;
  for (TermId c : key.children) {
    const Node& cn = nodes_[c.value];
    n.ground = n.ground && cn.ground;
    n.has_state = n.has_state || cn.has_state;
    n.height = std::max(n.height, cn.height + 1);
    n.size += cn.size;
  }
  children_.insert(children_.end(), key.children.begin(), key.children.end());

  TermId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(n);
  index_.emplace(std::move(key), id);
  return id;
}

TermId TermStore::app(SymbolId symbol, std::span<const TermId> children) {
  if (symbol >= signature_.size()) throw Error("unknown symbol id");
  if (signature_.rank(symbol) != children.size())
    throw Error("symbol '" + signature_.name(symbol) + "' has rank " +
                std::to_string(signature_.rank(symbol)) + " but got " +
                std::to_string(children.size()) + " arguments");
  return intern({NodeKind::App, symbol, {children.begin(), children.end()}});
}

TermId TermStore::var(unsigned index) {
  if (index == 0) throw Error("variables are numbered from 1");
  return intern({NodeKind::Var, index, {}});
}

TermId TermStore::state(StateId state) { return intern({NodeKind::State, state, {}}); }

namespace {

void render(const TermStore& store, TermId t, const StateLabeler& label,
            std::string& out) {
  switch (store.kind(t)) {
    case NodeKind::Var:
      out += 'x';
      out += std::to_string(store.var_index(t));
      return;
    case NodeKind::State:
      if (label) {
        out += label(store.state_id(t));
      } else {
        out += "[#";
        out += std::to_string(store.state_id(t));
        out += ']';
      }
      return;
    case NodeKind::App:
      break;
  }
  out += store.signature().name(store.symbol(t));
  auto kids = store.children(t);
  if (kids.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i != 0) out += ',';
    render(store, kids[i], label, out);
  }
  out += ')';
}

}  // namespace

std::string to_string(const TermStore& store, TermId t, const StateLabeler& label_state) {
  std::string out;
  render(store, t, label_state, out);
  return out;
}

std::vector<TermId> subterms(const TermStore& store, TermId t) {
  std::vector<TermId> out;
  std::unordered_set<TermId> seen;
  // Iterative post-order so deep terms do not exhaust the stack.
  std::vector<std::pair<TermId, std::size_t>> stack{{t, 0}};
  while (!stack.empty()) {
    auto& [cur, next] = stack.back();
    auto kids = store.children(cur);
    if (next < kids.size()) {
      TermId child = kids[next++];
      if (!seen.count(child)) stack.push_back({child, 0});
      continue;
    }
    TermId done = cur;
    stack.pop_back();
    if (seen.insert(done).second) out.push_back(done);
  }
  return out;
}

std::set<unsigned> vars(const TermStore& store, TermId t) {
  std::set<unsigned> out;
  if (store.is_ground(t)) return out;
  for (TermId s : subterms(store, t))
    if (store.kind(s) == NodeKind::Var) out.insert(store.var_index(s));
  return out;
}

TermId substitute(TermStore& store, TermId t, const Assignment& assignment) {
  if (store.is_ground(t)) return t;
  if (store.kind(t) == NodeKind::Var) {
    auto it = assignment.find(store.var_index(t));
    if (it == assignment.end()) throw MissingBinding(store.var_index(t));
    return it->second;
  }
  auto kids = store.children(t);
  std::vector<TermId> out;
  out.reserve(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i)
    out.push_back(substitute(store, store.children(t)[i], assignment));
  return store.app(store.symbol(t), out);
}

std::strong_ordering compare_alph(const TermStore& store, TermId s, TermId t) {
  if (s == t) return std::strong_ordering::equal;
  auto ks = store.kind(s);
  auto kt = store.kind(t);
  if (ks != kt) return static_cast<int>(ks) <=> static_cast<int>(kt);
  if (store.symbol(s) != store.symbol(t)) return store.symbol(s) <=> store.symbol(t);
  auto cs = store.children(s);
  auto ct = store.children(t);
  for (std::size_t i = 0; i < cs.size() && i < ct.size(); ++i) {
    auto c = compare_alph(store, cs[i], ct[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return cs.size() <=> ct.size();
}

void sort_alph(const TermStore& store, std::vector<TermId>& terms) {
  std::sort(terms.begin(), terms.end(), AlphLess{&store});
}

bool match(const TermStore& store, TermId pattern, TermId t, Assignment& assignment) {
  if (store.kind(pattern) == NodeKind::Var) {
    auto [it, inserted] = assignment.emplace(store.var_index(pattern), t);
    return inserted || it->second == t;
  }
  if (store.is_ground(pattern)) return pattern == t;
  if (store.kind(t) != NodeKind::App || store.symbol(t) != store.symbol(pattern))
    return false;
  auto pk = store.children(pattern);
  auto tk = store.children(t);
  for (std::size_t i = 0; i < pk.size(); ++i)
    if (!match(store, pk[i], tk[i], assignment)) return false;
  return true;
}

namespace {

void collect_matches(TermStore& store, TermId pattern, TermId t,
                     std::vector<std::size_t>& path, TermId root,
                     std::vector<MatchInstance>& out);

TermId context_at(TermStore& store, TermId t, std::span<const std::size_t> path) {
  if (path.empty()) return store.var(1);
  std::vector<TermId> kids(store.children(t).begin(), store.children(t).end());
  kids[path.front()] = context_at(store, kids[path.front()], path.subspan(1));
  return store.app(store.symbol(t), kids);
}

void collect_matches(TermStore& store, TermId pattern, TermId t,
                     std::vector<std::size_t>& path, TermId root,
                     std::vector<MatchInstance>& out) {
  Assignment a;
  if (match(store, pattern, t, a)) out.push_back({context_at(store, root, path), std::move(a)});
  auto n = store.children(t).size();
  for (std::size_t i = 0; i < n; ++i) {
    path.push_back(i);
    collect_matches(store, pattern, store.children(t)[i], path, root, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<MatchInstance> match_instances(TermStore& store, TermId pattern, TermId t) {
  std::vector<MatchInstance> out;
  std::vector<std::size_t> path;
  collect_matches(store, pattern, t, path, t, out);
  return out;
}

TermId plug(TermStore& store, TermId context, TermId s) {
  return substitute(store, context, Assignment{{1, s}});
}

std::vector<TermId> ground_terms_up_to(TermStore& store, unsigned max_height,
                                       std::size_t limit) {
  const Signature& sig = store.signature();
  std::vector<TermId> level;
  for (SymbolId c : sig.constants()) level.push_back(store.constant(c));
  for (unsigned h = 1; h <= max_height; ++h) {
    std::vector<TermId> next = level;
    std::unordered_set<TermId> seen(level.begin(), level.end());
    for (SymbolId f = 0; f < sig.size(); ++f) {
      unsigned m = sig.rank(f);
      if (m == 0) continue;
      if (level.empty()) continue;
      std::vector<std::size_t> idx(m, 0);
      std::vector<TermId> args(m);
      while (true) {
        for (unsigned j = 0; j < m; ++j) args[j] = level[idx[j]];
        TermId t = store.app(f, args);
        if (seen.insert(t).second) {
          next.push_back(t);
          if (next.size() > limit)
            throw BudgetExceeded("more than " + std::to_string(limit) +
                                 " ground terms of height <= " + std::to_string(max_height));
        }
        unsigned j = 0;
        while (j < m && ++idx[j] == level.size()) idx[j++] = 0;
        if (j == m) break;
      }
    }
    level = std::move(next);
  }
  sort_alph(store, level);
  return level;
}

}  // namespace groundeq
