#include "groundeq/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "groundeq/error.hpp"

namespace groundeq {

Verdict trivial_vp(TermStore& store, const Tes& tes, TermId p, TermId q, unsigned max_steps,
                   std::size_t frontier_cap) {
  require_variable_preserving(tes);
  if (p == q) return Verdict::yes(0);
  const std::vector<TermId> no_pool;
  std::unordered_set<TermId> u{p}, v{q};
  std::vector<TermId> u_new{p}, v_new{q};

  // Grows `set` by the one-step successors of its newest members.
  // Returns false once the two sets together exceed the cap.
  auto expand = [&](std::unordered_set<TermId>& set, std::vector<TermId>& fresh) {
    std::vector<TermId> next;
    for (TermId t : fresh) {
      for (const StepResult& r : one_step_with_origin(store, tes, t, no_pool))
        if (set.insert(r.term).second) next.push_back(r.term);
      if (u.size() + v.size() > frontier_cap) return false;
    }
    fresh = std::move(next);
    return true;
  };
  auto meets = [&](const std::vector<TermId>& fresh, const std::unordered_set<TermId>& other) {
    return std::any_of(fresh.begin(), fresh.end(), [&](TermId t) { return other.count(t); });
  };

  for (unsigned i = 1; i <= max_steps; ++i) {
    if (!expand(u, u_new) || !expand(v, v_new)) return Verdict::exhausted(i);
    if (meets(u_new, v) || meets(v_new, u)) return Verdict::yes(i);
    if (u_new.empty() || v_new.empty()) return Verdict::no(i);
  }
  return Verdict::exhausted(max_steps);
}

BfsResult bounded_bfs(TermStore& store, const Tes& tes, TermId p, TermId q, unsigned depth,
                      unsigned hbound, std::size_t frontier_cap) {
  BfsResult result;
  if (p == q) {
    result.connected = true;
    result.chain.push_back({p});
    return result;
  }
  std::vector<TermId> pool;
  if (!is_variable_preserving(tes)) pool = ground_terms_up_to(store, hbound, frontier_cap);

  // parent[t] = (predecessor, equation, direction of predecessor => t).
  struct Parent {
    TermId from;
    std::size_t equation;
    bool left_to_right;
  };
  std::unordered_map<TermId, Parent> fwd{{p, {p, 0, true}}}, bwd{{q, {q, 0, true}}};
  std::vector<TermId> fwd_layer{p}, bwd_layer{q};
  std::optional<TermId> meet;

  for (unsigned d = 0; d < depth && !meet; ++d) {
    const bool forward = fwd_layer.size() <= bwd_layer.size();
    auto& seen = forward ? fwd : bwd;
    auto& other = forward ? bwd : fwd;
    auto& layer = forward ? fwd_layer : bwd_layer;
    std::vector<TermId> next;
    for (TermId t : layer) {
      for (const StepResult& r : one_step_with_origin(store, tes, t, pool)) {
        if (!seen.emplace(r.term, Parent{t, r.equation, r.left_to_right}).second) continue;
        next.push_back(r.term);
        if (other.count(r.term)) {
          meet = r.term;
          break;
        }
      }
      if (meet) break;
      if (fwd.size() + bwd.size() > frontier_cap) {
        result.capped = true;
        return result;
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  if (!meet) return result;

  std::vector<ChainLink> head;
  for (TermId t = *meet; t != p;) {
    const Parent& par = fwd.at(t);
    head.push_back({t, par.equation, par.left_to_right});
    t = par.from;
  }
  head.push_back({p});
  std::reverse(head.begin(), head.end());
  // Backward parents record from => t in search direction; the chain runs t => from.
  for (TermId t = *meet; t != q;) {
    const Parent& par = bwd.at(t);
    head.push_back({par.from, par.equation, !par.left_to_right});
    t = par.from;
  }
  result.connected = true;
  result.chain = std::move(head);
  return result;
}

bool verify_chain(TermStore& store, const Tes& tes, TermId p, TermId q,
                  const std::vector<ChainLink>& chain) {
  if (chain.empty() || chain.front().term != p || chain.back().term != q) return false;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const ChainLink& link = chain[k];
    if (link.equation >= tes.equations.size()) return false;
    if (!is_single_step(store, tes.equations[link.equation], link.left_to_right,
                        chain[k - 1].term, link.term))
      return false;
  }
  return true;
}

std::string format_chain(const TermStore& store, const std::vector<ChainLink>& chain) {
  std::string out;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k == 0)
      out += "start  ";
    else
      out += std::to_string(chain[k].equation + 1) + (chain[k].left_to_right ? " ->  " : " <-  ");
    out += to_string(store, chain[k].term) + "\n";
  }
  return out;
}

Gtes ground_instances(TermStore& store, const Tes& tes, unsigned h, std::size_t limit) {
  const std::vector<TermId> pool = ground_terms_up_to(store, h, limit);
  Gtes out;
  for (const Equation& eq : tes.equations) {
    std::set<unsigned> vs = vars(store, eq.lhs);
    for (unsigned v : vars(store, eq.rhs)) vs.insert(v);
    const std::vector<unsigned> free(vs.begin(), vs.end());
    if (!free.empty() && pool.empty()) continue;
    Assignment a;
    std::vector<std::size_t> idx(free.size(), 0);
    while (true) {
      for (std::size_t j = 0; j < free.size(); ++j) a[free[j]] = pool[idx[j]];
      out.insert({substitute(store, eq.lhs, a), substitute(store, eq.rhs, a)});
      if (out.size() > limit)
        throw BudgetExceeded("more than " + std::to_string(limit) + " ground instances");
      std::size_t j = 0;
      while (j < free.size() && ++idx[j] == pool.size()) idx[j++] = 0;
      if (j == free.size()) break;
    }
  }
  return out;
}

}  // namespace groundeq
