// Command-line front end: groundeq run FILE [options], groundeq print FILE.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "groundeq/error.hpp"
#include "groundeq/problem.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw groundeq::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump_trace(const std::string& problem_path, const std::string& trace) {
  const char* dir = std::getenv("GROUNDEQ_TRACE_DIR");
  if (!dir || !*dir) return;
  std::filesystem::path out = std::filesystem::path(dir) /
                              (std::filesystem::path(problem_path).stem().string() + ".trace");
  std::filesystem::create_directories(dir);
  std::ofstream f(out, std::ios::binary);
  if (!f) throw groundeq::Error("cannot write trace file '" + out.string() + "'");
  f << trace;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace groundeq;
  CLI::App app{"Ground word problem for term equation systems"};
  app.require_subcommand(1);

  std::string file;
  std::string procedure = "general";
  unsigned max_steps = 10;
  std::string sides = "both";
  bool reduce = false;
  bool trace = false;
  unsigned depth = 8;
  unsigned hbound = 2;
  std::size_t budget = 100000;

  CLI::App* run = app.add_subcommand("run", "Decide whether the pair is equivalent");
  run->add_option("file", file, "Problem file")->required();
  CLI::Option* o_proc = run->add_option("--procedure", procedure, "vp, general, trivial-vp or bfs")
                            ->check(CLI::IsMember({"vp", "general", "trivial-vp", "bfs"}));
  CLI::Option* o_steps = run->add_option("--max-steps", max_steps, "Step limit");
  CLI::Option* o_sides = run->add_option("--sides", sides, "Matched sides: both or lhs-only")
                             ->check(CLI::IsMember({"both", "lhs-only"}));
  CLI::Option* o_reduce = run->add_flag("--reduce", reduce, "Reduce systems after each step");
  run->add_flag("--trace", trace, "Print the per-step trace");
  CLI::Option* o_depth = run->add_option("--depth", depth, "Search depth for bfs");
  CLI::Option* o_hbound = run->add_option("--hbound", hbound, "Instance height for bfs");
  CLI::Option* o_budget = run->add_option("--budget", budget, "Instances per step");

  CLI::App* print = app.add_subcommand("print", "Print the problem in canonical form");
  print->add_option("file", file, "Problem file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    Problem problem = parse_problem(read_file(file));
    if (print->parsed()) {
      std::cout << print_problem(problem);
      return 0;
    }

    RunConfig config = apply_options(problem, RunConfig{});
    if (o_proc->count()) config.procedure = *parse_procedure_kind(procedure);
    if (o_steps->count()) config.options.max_steps = max_steps;
    if (o_sides->count())
      config.options.sides = sides == "both" ? MatchSides::Both : MatchSides::LhsOnly;
    if (o_reduce->count()) config.options.reduce = reduce;
    if (o_depth->count()) config.depth = depth;
    if (o_hbound->count()) config.hbound = hbound;
    if (o_budget->count()) config.options.budget = budget;
    config.trace = trace;

    std::ostringstream trace_text;
    std::ostringstream verdict_text;
    int code = run_problem(problem, config, verdict_text, trace ? &trace_text : nullptr);
    if (trace) {
      std::cout << trace_text.str();
      dump_trace(file, trace_text.str());
    }
    std::cout << verdict_text.str();
    return code;
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
