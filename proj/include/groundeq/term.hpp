#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "groundeq/signature.hpp"

namespace groundeq {

/// Handle to an interned term. Two handles from the same store are equal
/// iff the terms are structurally equal.
struct TermId {
  std::uint32_t value = 0;
  friend auto operator<=>(TermId, TermId) = default;
};

/// Index of an automaton state. Only meaningful relative to one automaton.
using StateId = std::uint32_t;

enum class NodeKind : std::uint8_t { App, Var, State };

/// Variable index -> term. Variables are numbered from 1.
using Assignment = std::map<unsigned, TermId>;

}  // namespace groundeq

template <>
struct std::hash<groundeq::TermId> {
  std::size_t operator()(groundeq::TermId t) const noexcept {
    return std::hash<std::uint32_t>{}(t.value);
  }
};

namespace groundeq {

/// Hash-consing store for terms over a signature, variables x1, x2, ...
/// and automaton states (rank-0 symbols outside the signature).
///
/// Nodes are immutable once created. The store itself is not synchronized;
/// use one store per thread.
class TermStore {
 public:
  explicit TermStore(Signature signature);

  const Signature& signature() const { return signature_; }

  /// Throws Error if the child count does not match the symbol's rank.
  TermId app(SymbolId symbol, std::span<const TermId> children);
  TermId app(SymbolId symbol, std::initializer_list<TermId> children) {
    return app(symbol, std::span<const TermId>(children.begin(), children.size()));
  }
  TermId constant(SymbolId symbol) { return app(symbol, std::span<const TermId>{}); }
  TermId var(unsigned index);
  TermId state(StateId state);

  NodeKind kind(TermId t) const { return nodes_[t.value].kind; }
  SymbolId symbol(TermId t) const { return nodes_[t.value].payload; }
  unsigned var_index(TermId t) const { return nodes_[t.value].payload; }
  StateId state_id(TermId t) const { return nodes_[t.value].payload; }
  std::span<const TermId> children(TermId t) const {
    const Node& n = nodes_[t.value];
    return {children_.data() + n.first_child, n.arity};
  }

  /// No variables occur (states may).
  bool is_ground(TermId t) const { return nodes_[t.value].ground; }
  /// Ground and free of states: an element of T_Sigma.
  bool is_pure(TermId t) const { return nodes_[t.value].ground && !nodes_[t.value].has_state; }
  bool has_state(TermId t) const { return nodes_[t.value].has_state; }
  unsigned height(TermId t) const { return nodes_[t.value].height; }
  std::size_t size(TermId t) const { return nodes_[t.value].size; }

  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    NodeKind kind;
    bool ground;
    bool has_state;
    std::uint32_t payload;
    std::uint32_t first_child;
    std::uint32_t arity;
    unsigned height;
    std::size_t size;
  };

  struct Key {
    NodeKind kind;
    std::uint32_t payload;
    std::vector<TermId> children;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  TermId intern(Key key);

  Signature signature_;
  std::vector<Node> nodes_;
  std::vector<TermId> children_;
  std::unordered_map<Key, TermId, KeyHash> index_;
};

using StateLabeler = std::function<std::string(StateId)>;

/// Prefix-parenthesis rendering: f(0,1), h($), x1. States print as [#k]
/// unless a labeler is given.
std::string to_string(const TermStore& store, TermId t,
                      const StateLabeler& label_state = {});

/// Distinct subterms of t (t included), children before parents.
std::vector<TermId> subterms(const TermStore& store, TermId t);

/// Variable indices occurring in t.
std::set<unsigned> vars(const TermStore& store, TermId t);

/// Replaces each variable by its binding. Throws MissingBinding.
TermId substitute(TermStore& store, TermId t, const Assignment& assignment);

/// Alphabetical order: root symbols first (signature order, then states by
/// id, then variables), then children left to right.
std::strong_ordering compare_alph(const TermStore& store, TermId s, TermId t);

struct AlphLess {
  const TermStore* store;
  bool operator()(TermId a, TermId b) const {
    return compare_alph(*store, a, b) == std::strong_ordering::less;
  }
};

void sort_alph(const TermStore& store, std::vector<TermId>& terms);

/// Syntactic matching of a (possibly nonlinear) pattern against t,
/// extending `assignment`. On failure the assignment is left unspecified.
bool match(const TermStore& store, TermId pattern, TermId t, Assignment& assignment);

struct MatchInstance {
  TermId context;  // contains x1 exactly once, as the hole
  Assignment assignment;
};

/// Every (u, sigma) with u[pattern sigma] == t, over all positions of t.
std::vector<MatchInstance> match_instances(TermStore& store, TermId pattern, TermId t);

/// u[s]: fills the x1 hole of a context.
TermId plug(TermStore& store, TermId context, TermId s);

/// Every ground term of height <= max_height, sorted alphabetically.
/// Throws BudgetExceeded if more than `limit` terms would be produced.
std::vector<TermId> ground_terms_up_to(TermStore& store, unsigned max_height,
                                       std::size_t limit);

}  // namespace groundeq
