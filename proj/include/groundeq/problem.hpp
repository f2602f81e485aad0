#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groundeq/equation.hpp"
#include "groundeq/procedure.hpp"
#include "groundeq/term.hpp"

namespace groundeq {

/// A word problem instance: equations over a signature plus the pair to compare.
///
/// Text format, one directive per line, `#` starts a comment:
///
///     sig $/0 h/1 g/1        symbols in increasing order, may repeat
///     eq g(h(x1)) = h(x1)    an equation; x1, x2, ... are variables
///     pair e(f(g(h($)))) e(h($))
///     opt max-steps 4        optional run settings
struct Problem {
  std::shared_ptr<TermStore> store;
  Tes tes;
  TermId p;
  TermId q;
  std::vector<std::pair<std::string, std::string>> options;
};

/// Throws ParseError with line and column on any malformed input. Unknown
/// symbols and arity mismatches are reported at the offending symbol.
Problem parse_problem(std::string_view text);

/// Parses a single term over the store's signature. Throws ParseError.
TermId parse_term(TermStore& store, std::string_view text);

/// Canonical text form; parse_problem(print_problem(x)) reproduces x.
std::string print_problem(const Problem& problem);

enum class ProcedureKind { Vp, General, TrivialVp, Bfs };

struct RunConfig {
  ProcedureKind procedure = ProcedureKind::General;
  ProcedureOptions options;
  bool trace = false;
  unsigned depth = 8;
  unsigned hbound = 2;
};

std::optional<ProcedureKind> parse_procedure_kind(std::string_view name);

/// Applies the problem's `opt` lines on top of `base`. Throws Error on an
/// unknown key or malformed value.
RunConfig apply_options(const Problem& problem, RunConfig base);

/// Exit codes of a run.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitUnknown = 2, kExitInputError = 3 };

/// Runs the configured procedure, prints the verdict line to `out` and, with
/// tracing on, the per-step trace to `trace`. Throws Error on invalid input
/// such as a non-variable-preserving system for the vp procedure.
int run_problem(const Problem& problem, const RunConfig& config, std::ostream& out,
                std::ostream* trace);

}  // namespace groundeq
