#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <unordered_set>

#include "groundeq/error.hpp"
#include "groundeq/problem.hpp"

namespace groundeq::testing {

const char* const kUnaryCollapse = R"(sig $/0 h/1 g/1 f/1 e/1
eq e(h(x1)) = h(x1)
eq f(h(x1)) = h(x1)
eq g(h(x1)) = h(x1)
eq f(f(x1)) = g(g(x1))
pair e(f(g(h($)))) e(h($))
)";

const char* const kXorParity = R"(sig 0/0 1/0 f/2
eq f(x1,x1) = 0
eq f(0,x1) = x1
eq f(x1,0) = x1
pair 0 f(0,1)
)";

Problem load(std::string_view text) {
  try {
    return parse_problem(text);
  } catch (const Error& e) {
    std::cerr << "bad test problem: " << e.what() << "\n";
    std::abort();
  }
}

TermId T(TermStore& store, std::string_view text) {
  try {
    return parse_term(store, text);
  } catch (const Error& e) {
    std::cerr << "bad test term '" << text << "': " << e.what() << "\n";
    std::abort();
  }
}

Signature random_signature(std::mt19937& rng, unsigned max_symbols, unsigned max_rank) {
  std::uniform_int_distribution<unsigned> count(1, max_symbols);
  std::uniform_int_distribution<unsigned> rank(0, max_rank);
  const unsigned n = count(rng);
  std::vector<unsigned> ranks(n);
  for (auto& r : ranks) r = rank(rng);
  ranks[std::uniform_int_distribution<unsigned>(0, n - 1)(rng)] = 0;
  Signature sig;
  for (unsigned i = 0; i < n; ++i) sig.add(std::string(1, static_cast<char>('a' + i)), ranks[i]);
  return sig;
}

namespace {

TermId random_tree(TermStore& store, std::mt19937& rng, unsigned max_height, unsigned num_vars) {
  const Signature& sig = store.signature();
  std::vector<SymbolId> constants = sig.constants();
  std::vector<SymbolId> functions;
  for (SymbolId f = 0; f < sig.size(); ++f)
    if (sig.rank(f) > 0) functions.push_back(f);
  const bool leaf = max_height == 0 || functions.empty() ||
                    std::bernoulli_distribution(0.35)(rng);
  if (leaf) {
    if (num_vars > 0 && std::bernoulli_distribution(0.5)(rng))
      return store.var(std::uniform_int_distribution<unsigned>(1, num_vars)(rng));
    return store.constant(
        constants[std::uniform_int_distribution<std::size_t>(0, constants.size() - 1)(rng)]);
  }
  SymbolId f = functions[std::uniform_int_distribution<std::size_t>(0, functions.size() - 1)(rng)];
  std::vector<TermId> kids;
  for (unsigned k = 0; k < sig.rank(f); ++k)
    kids.push_back(random_tree(store, rng, max_height - 1, num_vars));
  return store.app(f, kids);
}

}  // namespace

TermId random_ground_term(TermStore& store, std::mt19937& rng, unsigned max_height) {
  return random_tree(store, rng, max_height, 0);
}

TermId random_term(TermStore& store, std::mt19937& rng, unsigned max_height, unsigned num_vars) {
  return random_tree(store, rng, max_height, num_vars);
}

Gtes random_gtes(TermStore& store, std::mt19937& rng, unsigned max_equations,
                 unsigned max_height) {
  Gtes out;
  const unsigned n = std::uniform_int_distribution<unsigned>(0, max_equations)(rng);
  for (unsigned i = 0; i < n; ++i)
    out.insert({random_ground_term(store, rng, max_height),
                random_ground_term(store, rng, max_height)});
  return out;
}

Tes random_tes(TermStore& store, std::mt19937& rng, unsigned max_equations,
               unsigned max_height, unsigned max_vars, bool variable_preserving) {
  Tes tes;
  const unsigned n = std::uniform_int_distribution<unsigned>(1, max_equations)(rng);
  // Tiny signatures may admit no valid equation, so attempts are bounded.
  for (int attempt = 0; attempt < 1000 && tes.equations.size() < n; ++attempt) {
    const unsigned k = std::uniform_int_distribution<unsigned>(0, max_vars)(rng);
    TermId l = random_term(store, rng, max_height, k);
    TermId r = random_term(store, rng, max_height, k);
    if (l == r) continue;
    if (variable_preserving && vars(store, l) != vars(store, r)) continue;
    tes.equations.push_back(make_equation(store, l, r));
  }
  return tes;
}

std::vector<TermId> closed_universe(TermStore& store, const Gtes& eqs, unsigned h,
                                    const std::vector<TermId>& extra) {
  std::vector<TermId> out = ground_terms_up_to(store, h, 1'000'000);
  std::unordered_set<TermId> seen(out.begin(), out.end());
  auto add = [&](TermId t) {
    for (TermId s : subterms(store, t))
      if (seen.insert(s).second) out.push_back(s);
  };
  for (const auto& e : eqs) {
    add(e.lhs);
    add(e.rhs);
  }
  for (TermId t : extra) add(t);
  return out;
}

SaturationOracle::SaturationOracle(const TermStore& store, const Gtes& eqs,
                                   const std::vector<TermId>& universe) {
  parent_.resize(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    parent_[i] = i;
    index_.emplace(universe[i], i);
  }
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  };
  for (const auto& e : eqs) unite(index_.at(e.lhs), index_.at(e.rhs));

  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      std::vector<std::size_t> key{store.symbol(universe[i])};
      for (TermId c : store.children(universe[i])) key.push_back(find(index_.at(c)));
      auto [it, fresh] = seen.emplace(std::move(key), i);
      if (!fresh && unite(it->second, i)) changed = true;
    }
  }
}

std::size_t SaturationOracle::find(std::size_t x) const {
  while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
  return x;
}

std::size_t SaturationOracle::class_of(TermId t) const { return find(index_.at(t)); }

bool SaturationOracle::equivalent(TermId s, TermId t) const { return class_of(s) == class_of(t); }

namespace {

/// Congruence closure that keeps, per merge, the edge that caused it.
class ProofForest {
 public:
  ProofForest(TermStore& store, const Gtes& eqs, std::vector<TermId> universe)
      : store_(store), universe_(std::move(universe)) {
    parent_.resize(universe_.size());
    adjacent_.resize(universe_.size());
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      parent_[i] = i;
      index_.emplace(universe_[i], i);
    }
    for (const auto& e : eqs) link(index_.at(e.lhs), index_.at(e.rhs), false);
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::vector<std::size_t>, std::size_t> seen;
      for (std::size_t i = 0; i < universe_.size(); ++i) {
        if (store_.kind(universe_[i]) != NodeKind::App) continue;
        std::vector<std::size_t> key{store_.symbol(universe_[i])};
        for (TermId c : store_.children(universe_[i])) key.push_back(find(index_.at(c)));
        auto [it, fresh] = seen.emplace(std::move(key), i);
        if (!fresh && link(it->second, i, true)) changed = true;
      }
    }
  }

  std::optional<std::vector<TermId>> explain(TermId s, TermId t) {
    const std::size_t a = index_.at(s), b = index_.at(t);
    if (find(a) != find(b)) return std::nullopt;
    std::vector<TermId> out{s};
    explain_into(a, b, out);
    return out;
  }

 private:
  struct Edge {
    std::size_t to;
    bool congruence;
  };

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool link(std::size_t a, std::size_t b, bool congruence) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent_[std::max(ra, rb)] = std::min(ra, rb);
    adjacent_[a].push_back({b, congruence});
    adjacent_[b].push_back({a, congruence});
    return true;
  }

  // Appends the terms after universe_[a] on the way to universe_[b].
  void explain_into(std::size_t a, std::size_t b, std::vector<TermId>& out) {
    std::map<std::size_t, std::pair<std::size_t, bool>> from{{a, {a, false}}};
    std::vector<std::size_t> queue{a};
    for (std::size_t head = 0; head < queue.size() && !from.count(b); ++head)
      for (const Edge& e : adjacent_[queue[head]])
        if (from.emplace(e.to, std::pair{queue[head], e.congruence}).second) queue.push_back(e.to);
    std::vector<std::pair<std::size_t, bool>> path;
    for (std::size_t x = b; x != a; x = from.at(x).first) path.push_back({x, from.at(x).second});
    std::reverse(path.begin(), path.end());

    std::size_t cur = a;
    for (const auto& [next, congruence] : path) {
      if (!congruence) {
        out.push_back(universe_[next]);
      } else {
        const std::vector<TermId> target(store_.children(universe_[next]).begin(),
                                         store_.children(universe_[next]).end());
        std::vector<TermId> args(store_.children(universe_[cur]).begin(),
                                 store_.children(universe_[cur]).end());
        const SymbolId f = store_.symbol(universe_[cur]);
        for (std::size_t k = 0; k < args.size(); ++k) {
          std::vector<TermId> sub{args[k]};
          explain_into(index_.at(args[k]), index_.at(target[k]), sub);
          for (std::size_t j = 1; j < sub.size(); ++j) {
            args[k] = sub[j];
            out.push_back(store_.app(f, args));
          }
        }
      }
      cur = next;
    }
  }

  TermStore& store_;
  std::vector<TermId> universe_;
  std::unordered_map<TermId, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<Edge>> adjacent_;
};

}  // namespace

std::optional<std::vector<TermId>> ground_proof(TermStore& store, const Gtes& eqs, TermId s,
                                                TermId t) {
  std::vector<TermId> universe;
  std::unordered_set<TermId> seen;
  auto add = [&](TermId x) {
    for (TermId u : subterms(store, x))
      if (seen.insert(u).second) universe.push_back(u);
  };
  for (const auto& e : eqs) {
    add(e.lhs);
    add(e.rhs);
  }
  add(s);
  add(t);
  return ProofForest(store, eqs, std::move(universe)).explain(s, t);
}

std::vector<TermId> rewrite_once(TermStore& store, const std::vector<GroundEquation>& rules,
                                 TermId t) {
  std::vector<TermId> out;
  for (const auto& r : rules)
    if (r.lhs == t) out.push_back(r.rhs);
  const std::vector<TermId> kids(store.children(t).begin(), store.children(t).end());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    for (TermId sub : rewrite_once(store, rules, kids[i])) {
      std::vector<TermId> k = kids;
      k[i] = sub;
      out.push_back(store.app(store.symbol(t), k));
    }
  }
  return out;
}

bool is_instance(const TermStore& store, const Tes& tes, const GroundEquation& e) {
  for (const Equation& eq : tes.equations) {
    Assignment a;
    if (match(store, eq.lhs, e.lhs, a) && match(store, eq.rhs, e.rhs, a)) return true;
  }
  return false;
}

}  // namespace groundeq::testing
