#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "groundeq/equation.hpp"
#include "groundeq/gtrs.hpp"
#include "groundeq/procedure.hpp"
#include "groundeq/term.hpp"

namespace groundeq {

/// Forward closure from p and backward closure from q, one rewrite step per
/// round. Yes(0) when p == q; no when either side stops growing while the
/// two sides are still disjoint. Throws NotVariablePreserving.
Verdict trivial_vp(TermStore& store, const Tes& tes, TermId p, TermId q, unsigned max_steps,
                   std::size_t frontier_cap = 1'000'000);

/// One link of a rewrite chain: `term` is obtained from the previous link's
/// term by applying equation `equation` in the given direction. The first
/// link holds the start term and no equation.
struct ChainLink {
  TermId term;
  std::size_t equation = 0;
  bool left_to_right = true;
};

struct BfsResult {
  bool connected = false;
  /// Set when the search stopped at the frontier cap instead of the depth.
  bool capped = false;
  std::vector<ChainLink> chain;
};

/// Bidirectional breadth-first search for a chain p <=>_S ... <=>_S q of at
/// most `depth` steps. Introduced variables range over ground terms of
/// height <= hbound. Never proves non-equivalence.
BfsResult bounded_bfs(TermStore& store, const Tes& tes, TermId p, TermId q, unsigned depth,
                      unsigned hbound, std::size_t frontier_cap = 1'000'000);

/// Checks that the chain runs from p to q. Each link must be one application
/// of the named equation in the named direction.
bool verify_chain(TermStore& store, const Tes& tes, TermId p, TermId q,
                  const std::vector<ChainLink>& chain);

/// One term per line: "start  t" for the first, "k ->  t" or "k <-  t" after,
/// with k the 1-based equation index.
std::string format_chain(const TermStore& store, const std::vector<ChainLink>& chain);

/// All ground instances of the equations with variables ranging over ground
/// terms of height <= h. Throws BudgetExceeded past `limit` instances.
Gtes ground_instances(TermStore& store, const Tes& tes, unsigned h, std::size_t limit);

}  // namespace groundeq
