#include "groundeq/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

#include "groundeq/error.hpp"
#include "groundeq/gen_procedure.hpp"
#include "groundeq/oracle.hpp"
#include "groundeq/trace.hpp"
#include "groundeq/vp_procedure.hpp"

namespace groundeq {

namespace {

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' &&
         c != '=' && c != '#';
}

/// Scanner over a single line. Columns are 1-based.
class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what, std::size_t column = 0) const {
    throw ParseError(line_, column ? column : pos_ + 1, what);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  /// A whitespace-delimited word.
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a value");
    return text_.substr(start, pos_ - start);
  }

  TermId term(TermStore& store) {
    skip_space();
    const std::size_t col = column();
    std::string_view n = name();
    if (is_variable_name(n)) {
      if (accept('(')) fail("variable '" + std::string(n) + "' cannot take arguments", col);
      unsigned index = 0;
      std::from_chars(n.data() + 1, n.data() + n.size(), index);
      if (index == 0) fail("variable indices start at 1", col);
      return store.var(index);
    }
    auto sym = store.signature().find(n);
    if (!sym) fail("unknown symbol '" + std::string(n) + "'", col);
    std::vector<TermId> kids;
    if (accept('(')) {
      if (!accept(')')) {
        do kids.push_back(term(store));
        while (accept(','));
        expect(')');
      }
    }
    const unsigned rank = store.signature().rank(*sym);
    if (kids.size() != rank)
      fail("symbol '" + std::string(n) + "' has rank " + std::to_string(rank) + " but " +
               std::to_string(kids.size()) + " arguments were given",
           col);
    return store.app(*sym, kids);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Problem parse_problem(std::string_view text) {
  Signature sig;
  Problem problem;
  bool have_pair = false;
  std::size_t line_no = 0;

  auto ensure_store = [&](const LineScanner& sc) {
    if (problem.store) return;
    if (!sig.has_constant()) sc.fail("signature has no constant symbol", 1);
    problem.store = std::make_shared<TermStore>(sig);
  };

  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner sc(line, line_no);
    if (sc.at_end()) continue;
    const std::size_t directive_col = sc.column();
    const std::string_view directive = sc.word();

    if (directive == "sig") {
      if (problem.store) sc.fail("'sig' must come before 'eq' and 'pair'", directive_col);
      while (!sc.at_end()) {
        const std::size_t col = sc.column();
        std::string_view decl = sc.word();
        const std::size_t slash = decl.rfind('/');
        if (slash == std::string_view::npos || slash == 0)
          sc.fail("expected name/rank", col);
        std::string_view name = decl.substr(0, slash);
        std::string_view rank_text = decl.substr(slash + 1);
        unsigned rank = 0;
        auto [ptr, ec] = std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), rank);
        if (ec != std::errc{} || ptr != rank_text.data() + rank_text.size() || rank_text.empty())
          sc.fail("invalid rank '" + std::string(rank_text) + "'", col + slash + 1);
        if (!std::all_of(name.begin(), name.end(), is_name_char))
          sc.fail("invalid symbol name '" + std::string(name) + "'", col);
        try {
          sig.add(std::string(name), rank);
        } catch (const Error& e) {
          sc.fail(e.what(), col);
        }
      }
    } else if (directive == "eq") {
      ensure_store(sc);
      TermId l = sc.term(*problem.store);
      sc.expect('=');
      TermId r = sc.term(*problem.store);
      sc.expect_end();
      problem.tes.equations.push_back(make_equation(*problem.store, l, r));
    } else if (directive == "pair") {
      ensure_store(sc);
      if (have_pair) sc.fail("duplicate 'pair'", directive_col);
      const std::size_t pcol = sc.column();
      problem.p = sc.term(*problem.store);
      sc.skip_space();
      const std::size_t qcol = sc.column();
      problem.q = sc.term(*problem.store);
      sc.expect_end();
      if (!problem.store->is_ground(problem.p)) sc.fail("pair terms must be ground", pcol);
      if (!problem.store->is_ground(problem.q)) sc.fail("pair terms must be ground", qcol);
      have_pair = true;
    } else if (directive == "opt") {
      std::string key(sc.word());
      std::string value(sc.word());
      sc.expect_end();
      problem.options.emplace_back(std::move(key), std::move(value));
    } else {
      sc.fail("unknown directive '" + std::string(directive) + "'", directive_col);
    }
  }
  if (!problem.store) {
    LineScanner end("", line_no + 1);
    if (!sig.has_constant()) end.fail("signature has no constant symbol");
    end.fail("missing 'pair'");
  }
  if (!have_pair) LineScanner("", line_no + 1).fail("missing 'pair'");
  return problem;
}

TermId parse_term(TermStore& store, std::string_view text) {
  LineScanner sc(text, 1);
  TermId t = sc.term(store);
  sc.expect_end();
  return t;
}

std::string print_problem(const Problem& problem) {
  const TermStore& store = *problem.store;
  std::string out = "sig";
  for (const auto& s : store.signature().symbols())
    out += " " + s.name + "/" + std::to_string(s.rank);
  out += "\n";
  for (const Equation& eq : problem.tes.equations)
    out += "eq " + to_string(store, eq.lhs) + " = " + to_string(store, eq.rhs) + "\n";
  out += "pair " + to_string(store, problem.p) + " " + to_string(store, problem.q) + "\n";
  for (const auto& [k, v] : problem.options) out += "opt " + k + " " + v + "\n";
  return out;
}

std::optional<ProcedureKind> parse_procedure_kind(std::string_view name) {
  if (name == "vp") return ProcedureKind::Vp;
  if (name == "general") return ProcedureKind::General;
  if (name == "trivial-vp") return ProcedureKind::TrivialVp;
  if (name == "bfs") return ProcedureKind::Bfs;
  return std::nullopt;
}

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw Error("option '" + key + "': invalid number '" + value + "'");
  return out;
}

}  // namespace

RunConfig apply_options(const Problem& problem, RunConfig base) {
  for (const auto& [key, value] : problem.options) {
    if (key == "procedure") {
      auto kind = parse_procedure_kind(value);
      if (!kind) throw Error("option 'procedure': unknown procedure '" + value + "'");
      base.procedure = *kind;
    } else if (key == "max-steps") {
      base.options.max_steps = parse_number<unsigned>(key, value);
    } else if (key == "sides") {
      if (value == "both")
        base.options.sides = MatchSides::Both;
      else if (value == "lhs-only")
        base.options.sides = MatchSides::LhsOnly;
      else
        throw Error("option 'sides': expected both or lhs-only");
    } else if (key == "reduce") {
      if (value != "true" && value != "false")
        throw Error("option 'reduce': expected true or false");
      base.options.reduce = value == "true";
    } else if (key == "depth") {
      base.depth = parse_number<unsigned>(key, value);
    } else if (key == "hbound") {
      base.hbound = parse_number<unsigned>(key, value);
    } else if (key == "budget") {
      base.options.budget = parse_number<std::size_t>(key, value);
    } else {
      throw Error("unknown option '" + key + "'");
    }
  }
  return base;
}

int run_problem(const Problem& problem, const RunConfig& config, std::ostream& out,
                std::ostream* trace) {
  if (config.options.max_steps == 0) throw Error("--max-steps must be at least 1");
  TermStore& store = *problem.store;
  Verdict verdict = Verdict::exhausted(0);
  std::string note;

  switch (config.procedure) {
    case ProcedureKind::Vp:
    case ProcedureKind::General: {
      RunResult r = config.procedure == ProcedureKind::Vp
                        ? run_vp(store, problem.tes, problem.p, problem.q, config.options)
                        : run_gen(store, problem.tes, problem.p, problem.q, config.options);
      if (trace) write_trace(*trace, store, r);
      verdict = r.verdict;
      note = r.note;
      break;
    }
    case ProcedureKind::TrivialVp:
      verdict = trivial_vp(store, problem.tes, problem.p, problem.q, config.options.max_steps);
      break;
    case ProcedureKind::Bfs: {
      BfsResult b = bounded_bfs(store, problem.tes, problem.p, problem.q, config.depth,
                                config.hbound);
      if (b.connected) {
        verdict = Verdict::yes(static_cast<unsigned>(b.chain.size() - 1));
        if (trace) *trace << format_chain(store, b.chain);
      } else {
        verdict = Verdict::exhausted(config.depth);
        if (b.capped) note = "frontier cap reached";
      }
      break;
    }
  }

  out << to_string(verdict) << "\n";
  if (!note.empty()) out << "note: " << note << "\n";
  switch (verdict.kind) {
    case Verdict::Kind::Yes:
      return kExitYes;
    case Verdict::Kind::No:
      return kExitNo;
    case Verdict::Kind::Exhausted:
      return kExitUnknown;
  }
  return kExitUnknown;
}

}  // namespace groundeq
