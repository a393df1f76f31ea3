// ncsat command-line front end. Talks to the engine only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ncsat/ncsat.h"

namespace {

enum Exit : int {
  exit_ok = 0,
  exit_error = 1,
  exit_sat = 10,
  exit_unsat = 20,
  exit_mismatch = 30,
  exit_budget = 40,
  exit_usage = 64,
  exit_parse = 65,
  exit_no_input = 66,
};

struct FormulaDeleter {
  void operator()(ncsat_formula *f) const { ncsat_formula_free(f); }
};
struct CountDeleter {
  void operator()(ncsat_count_report *r) const { ncsat_count_report_free(r); }
};
struct StructureDeleter {
  void operator()(ncsat_structure_report *r) const {
    ncsat_structure_report_free(r);
  }
};
struct StringDeleter {
  void operator()(char *s) const { ncsat_string_free(s); }
};

using Formula = std::unique_ptr<ncsat_formula, FormulaDeleter>;
using CountReport = std::unique_ptr<ncsat_count_report, CountDeleter>;
using StructureReport =
    std::unique_ptr<ncsat_structure_report, StructureDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

// Carries a finished exit code out of a subcommand.
struct Failure {
  int code;
};

int exit_code_of(ncsat_status status) {
  switch (status) {
  case NCSAT_OK:
    return exit_ok;
  case NCSAT_ERR_PARSE:
    return exit_parse;
  case NCSAT_ERR_IO:
    return exit_no_input;
  case NCSAT_ERR_TERM_BUDGET:
    return exit_budget;
  case NCSAT_ERR_INVALID_ARGUMENT:
    return exit_usage;
  default:
    return exit_error;
  }
}

void check(ncsat_status status) {
  if (status == NCSAT_OK)
    return;
  std::cerr << "ncsat: " << ncsat_status_name(status) << ": "
            << ncsat_last_error() << "\n";
  throw Failure{exit_code_of(status)};
}

struct Globals {
  std::uint64_t term_budget = 0;
  unsigned threads = 1;
  bool quiet = false;

  ncsat_count_options options() const {
    ncsat_count_options opts;
    ncsat_count_options_init(&opts);
    if (term_budget != 0)
      opts.term_budget = term_budget;
    opts.threads = threads;
    return opts;
  }
};

Formula load(const std::string &path, const Globals &globals) {
  ncsat_formula *raw = nullptr;
  check(ncsat_formula_read_file(path.c_str(), &raw));
  Formula formula(raw);
  if (!globals.quiet)
    for (size_t i = 0; i < ncsat_formula_num_warnings(formula.get()); ++i)
      std::cerr << "c warning: " << path << ": "
                << ncsat_formula_warning(formula.get(), i) << "\n";
  return formula;
}

CountReport count(const ncsat_formula *formula, const Globals &globals) {
  const ncsat_count_options opts = globals.options();
  ncsat_count_report *raw = nullptr;
  check(ncsat_count(formula, &opts, &raw));
  return CountReport(raw);
}

int run_decide(const std::string &path, const Globals &globals) {
  Formula formula = load(path, globals);
  const ncsat_count_options opts = globals.options();
  int satisfiable = 0;
  check(ncsat_decide(formula.get(), &opts, &satisfiable));
  if (!globals.quiet)
    std::cout << (satisfiable ? "YES" : "NO") << "\n";
  return satisfiable ? exit_sat : exit_unsat;
}

int run_count(const std::string &path, bool json, const Globals &globals) {
  Formula formula = load(path, globals);
  CountReport report = count(formula.get(), globals);
  if (json) {
    char *raw = nullptr;
    check(ncsat_count_report_json(report.get(), &raw));
    std::cout << String(raw).get() << "\n";
    return exit_ok;
  }
  const ncsat_count_report *r = report.get();
  std::cout << "n: " << ncsat_formula_num_vars(formula.get()) << "\n"
            << "m: " << ncsat_formula_num_clauses(formula.get())
            << " (declared " << ncsat_formula_declared_clauses(formula.get())
            << ")\n"
            << "falsifying: " << ncsat_count_report_falsifying(r) << "\n"
            << "models: " << ncsat_count_report_models(r) << "\n"
            << "satisfiable: "
            << (ncsat_count_report_satisfiable(r) ? "YES" : "NO") << "\n"
            << "path: "
            << (ncsat_count_report_path(r) == NCSAT_PATH_CLOSED_FORM
                    ? "closed_form"
                    : "inclusion_exclusion")
            << "\n"
            << "terms_evaluated: " << ncsat_count_report_terms_evaluated(r)
            << "\n"
            << "subtrees_pruned: " << ncsat_count_report_subtrees_pruned(r)
            << "\n";
  return exit_ok;
}

int run_analyze(const std::string &path, bool json, const Globals &globals) {
  Formula formula = load(path, globals);
  ncsat_structure_report *raw = nullptr;
  check(ncsat_analyze(formula.get(), &raw));
  StructureReport report(raw);
  if (json) {
    char *text = nullptr;
    check(ncsat_structure_report_json(report.get(), &text));
    std::cout << String(text).get() << "\n";
    return exit_ok;
  }
  const ncsat_structure_report *r = report.get();
  std::cout << "m: " << ncsat_structure_report_m(r) << "\n"
            << "all_pairwise_alternative: "
            << (ncsat_structure_report_all_alternative(r) ? "yes" : "no")
            << "\n"
            << "nonalternative_components:";
  for (size_t i = 0; i < ncsat_structure_report_num_components(r); ++i)
    std::cout << " " << ncsat_structure_report_component_size(r, i);
  std::cout << "\n"
            << "p_max: " << ncsat_structure_report_p_max(r) << "\n"
            << "predicted_terms_upper_bound: "
            << ncsat_structure_report_predicted_terms(r) << "\n";
  return exit_ok;
}

int run_oracle(const std::string &path, const std::string &table,
               const Globals &globals) {
  Formula formula = load(path, globals);
  std::uint64_t models = 0, falsifying = 0;
  check(ncsat_oracle_models(formula.get(), &models));
  check(ncsat_oracle_falsifying(formula.get(), &falsifying));
  std::cout << "falsifying: " << falsifying << "\n"
            << "models: " << models << "\n";
  if (!table.empty()) {
    char *raw = nullptr;
    check(ncsat_truth_table_csv(formula.get(), &raw));
    String csv(raw);
    std::ofstream out(table, std::ios::binary);
    if (!(out << csv.get())) {
      std::cerr << "ncsat: cannot write '" << table << "'\n";
      return exit_error;
    }
  }
  return exit_ok;
}

int run_verify(const std::string &path, const Globals &globals) {
  Formula formula = load(path, globals);
  CountReport report = count(formula.get(), globals);
  std::uint64_t oracle = 0;
  check(ncsat_oracle_models(formula.get(), &oracle));
  const std::string engine = ncsat_count_report_models(report.get());
  const bool agree = engine == std::to_string(oracle);
  if (!globals.quiet || !agree)
    std::cout << "engine models: " << engine << "\n"
              << "oracle models: " << oracle << "\n"
              << (agree ? "agree" : "MISMATCH") << "\n";
  return agree ? exit_ok : exit_mismatch;
}

struct GenArgs {
  std::uint32_t vars = 0;
  std::size_t clauses = 0;
  std::uint32_t width = 0;
  std::string mode;
  std::size_t chain_p = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const GenArgs &args) {
  ncsat_gen_spec spec{};
  spec.n = args.vars;
  spec.m = args.clauses;
  spec.width = args.width;
  spec.chain_p = args.chain_p;
  spec.seed = args.seed;
  if (args.mode == "random")
    spec.mode = NCSAT_GEN_RANDOM;
  else if (args.mode == "alternative")
    spec.mode = NCSAT_GEN_ALTERNATIVE;
  else
    spec.mode = NCSAT_GEN_CHAIN;

  ncsat_formula *raw = nullptr;
  ncsat_status status = ncsat_generate(&spec, &raw);
  if (status == NCSAT_ERR_GENERATION) {
    std::cerr << "ncsat: " << ncsat_last_error() << "\n";
    return exit_error;
  }
  check(status);
  Formula formula(raw);
  char *text = nullptr;
  check(ncsat_formula_write_dimacs(formula.get(), &text));
  String dimacs(text);
  if (args.output.empty()) {
    std::cout << dimacs.get();
    return exit_ok;
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!(out << dimacs.get())) {
    std::cerr << "ncsat: cannot write '" << args.output << "'\n";
    return exit_error;
  }
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decides and counts CNF satisfiability by counting the tuples "
               "that falsify some clause."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ncsat_version()));

  Globals globals;
  app.add_option("--term-budget", globals.term_budget,
                 "Abort inclusion-exclusion after this many terms "
                 "(default 2^26)");
  app.add_option("--threads", globals.threads,
                 "Worker threads for counting (never changes the output)")
      ->check(CLI::PositiveNumber);
  app.add_flag("-q,--quiet", globals.quiet, "Suppress warnings and answers");

  std::string file;
  bool json = false;
  std::string table;
  GenArgs gen;

  auto *decide = app.add_subcommand(
      "decide", "Print YES or NO; exit 10 if satisfiable, 20 if not");
  decide->add_option("file", file, "DIMACS CNF file")->required();

  auto *count_cmd =
      app.add_subcommand("count", "Count falsifying tuples and models");
  count_cmd->add_option("file", file, "DIMACS CNF file")->required();
  count_cmd->add_flag("--json", json, "Emit the report as JSON");

  auto *analyze = app.add_subcommand(
      "analyze", "Report the alternative/non-alternative structure");
  analyze->add_option("file", file, "DIMACS CNF file")->required();
  analyze->add_flag("--json", json, "Emit the report as JSON");

  auto *oracle =
      app.add_subcommand("oracle", "Brute-force counts (n <= 24)");
  oracle->add_option("file", file, "DIMACS CNF file")->required();
  oracle->add_option("--table", table,
                     "Write the per-clause truth table as CSV (n <= 16)");

  auto *verify = app.add_subcommand(
      "verify", "Compare engine and brute-force model counts; exit 30 on "
                "mismatch");
  verify->add_option("file", file, "DIMACS CNF file")->required();

  auto *gen_cmd = app.add_subcommand("gen", "Generate a DIMACS instance");
  gen_cmd->add_option("--vars", gen.vars, "Variable count")->required();
  gen_cmd->add_option("--clauses", gen.clauses, "Clause count")->required();
  gen_cmd->add_option("--width", gen.width, "Literals per clause")
      ->required();
  gen_cmd->add_option("--mode", gen.mode, "random, alternative or chain")
      ->required()
      ->check(CLI::IsMember({"random", "alternative", "chain"}));
  gen_cmd->add_option("--chain-p", gen.chain_p,
                      "Size of the non-alternative group (chain mode)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*decide)
      return run_decide(file, globals);
    if (*count_cmd)
      return run_count(file, json, globals);
    if (*analyze)
      return run_analyze(file, json, globals);
    if (*oracle)
      return run_oracle(file, table, globals);
    if (*verify)
      return run_verify(file, globals);
    if (*gen_cmd)
      return run_gen(gen);
  } catch (const Failure &failure) {
    return failure.code;
  }
  return exit_usage;
}
