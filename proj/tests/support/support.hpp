#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "groundeq/equation.hpp"
#include "groundeq/problem.hpp"
#include "groundeq/term.hpp"

namespace groundeq::testing {

/// The unary-collapse system over $ < h < g < f < e with
/// p = e(f(g(h($)))) and q = e(h($)).
extern const char* const kUnaryCollapse;
/// Exclusive or over 0 < 1 < f with p = 0 and q = f(0,1).
extern const char* const kXorParity;

Problem load(std::string_view text);

/// Parses a term in the store's signature; aborts the test on error.
TermId T(TermStore& store, std::string_view text);

/// 1..max_symbols symbols named a, b, c, ..., ranks in 0..max_rank, at least
/// one constant.
Signature random_signature(std::mt19937& rng, unsigned max_symbols, unsigned max_rank);

TermId random_ground_term(TermStore& store, std::mt19937& rng, unsigned max_height);

/// Leaves are variables x1..x{num_vars} or constants.
TermId random_term(TermStore& store, std::mt19937& rng, unsigned max_height, unsigned num_vars);

/// 0..max_equations ground equations of height <= max_height.
Gtes random_gtes(TermStore& store, std::mt19937& rng, unsigned max_equations,
                 unsigned max_height);

/// Up to `max_equations` equations (at least one when the signature allows) with at most
/// `max_vars` variables each.
Tes random_tes(TermStore& store, std::mt19937& rng, unsigned max_equations,
               unsigned max_height, unsigned max_vars, bool variable_preserving);

/// Ground terms of height <= h plus all subterms of the equations and extras.
std::vector<TermId> closed_universe(TermStore& store, const Gtes& eqs, unsigned h,
                                    const std::vector<TermId>& extra = {});

/// Congruence generated by a GTES restricted to a subterm-closed universe,
/// computed by naive rounds: merge equation sides, then repeatedly merge
/// applications whose symbols and argument classes agree until nothing changes.
class SaturationOracle {
 public:
  SaturationOracle(const TermStore& store, const Gtes& eqs, const std::vector<TermId>& universe);
  bool equivalent(TermId s, TermId t) const;
  std::size_t class_of(TermId t) const;

 private:
  std::size_t find(std::size_t x) const;
  mutable std::vector<std::size_t> parent_;
  std::unordered_map<TermId, std::size_t> index_;
};

/// Terms s = t0, ..., tn = t where each neighbor pair differs by replacing
/// one occurrence of an equation side by the other side, or nullopt when s
/// and t are not congruent. Read off an explained congruence closure over the
/// subterms of the equations and of s and t.
std::optional<std::vector<TermId>> ground_proof(TermStore& store, const Gtes& eqs, TermId s,
                                                TermId t);

/// All results of rewriting one position of t with a ground rule lhs -> rhs.
std::vector<TermId> rewrite_once(TermStore& store, const std::vector<GroundEquation>& rules,
                                 TermId t);

/// e is l[sigma] = r[sigma] for some equation l = r of tes.
bool is_instance(const TermStore& store, const Tes& tes, const GroundEquation& e);

}  // namespace groundeq::testing
