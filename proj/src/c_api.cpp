#include "ncsat/ncsat.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "ncsat/analysis.hpp"
#include "ncsat/counting.hpp"
#include "ncsat/dimacs.hpp"
#include "ncsat/error.hpp"
#include "ncsat/generator.hpp"
#include "ncsat/oracle.hpp"
#include "ncsat/report_json.hpp"

struct ncsat_formula {
  ncsat::CnfFormula formula;
  std::uint64_t declared_clauses = 0;
  std::vector<std::string> warnings;
};

struct ncsat_count_report {
  ncsat::CountReport report;
  std::uint64_t declared_clauses = 0;
  std::string falsifying;
  std::string models;
};

struct ncsat_structure_report {
  ncsat::StructureReport report;
  std::string predicted_terms;
};

namespace {

thread_local std::string last_error;

ncsat_status fail(ncsat_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

ncsat_status status_of(ncsat::ErrorKind kind) {
  using ncsat::ErrorKind;
  switch (kind) {
  case ErrorKind::parse:
    return NCSAT_ERR_PARSE;
  case ErrorKind::cap_exceeded:
    return NCSAT_ERR_CAP_EXCEEDED;
  case ErrorKind::term_budget:
    return NCSAT_ERR_TERM_BUDGET;
  case ErrorKind::generation:
    return NCSAT_ERR_GENERATION;
  case ErrorKind::malformed_input:
  case ErrorKind::contract:
    return NCSAT_ERR_INVALID_ARGUMENT;
  }
  return NCSAT_ERR_INTERNAL;
}

template <class F> ncsat_status guarded(F &&body) {
  try {
    body();
    return NCSAT_OK;
  } catch (const ncsat::Error &e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(NCSAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(NCSAT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NCSAT_ERR_INTERNAL, "unknown error");
  }
}

ncsat_status null_argument(const char *function) {
  return fail(NCSAT_ERR_INVALID_ARGUMENT,
              std::string(function) + ": null argument");
}

char *copy_out(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ncsat::CountOptions options_of(const ncsat_count_options *options) {
  ncsat::CountOptions out;
  if (options) {
    out.term_budget = options->term_budget;
    out.threads = options->threads;
    out.prune_clashes = options->prune_clashes != 0;
  }
  return out;
}

ncsat_formula *wrap(ncsat::DimacsInput input) {
  return new ncsat_formula{std::move(input.formula), input.declared_clauses,
                           std::move(input.warnings)};
}

ncsat_formula *wrap(ncsat::CnfFormula formula) {
  const std::uint64_t m = formula.num_clauses();
  return new ncsat_formula{std::move(formula), m, {}};
}

} // namespace

extern "C" {

const char *ncsat_version(void) { return "1.0.0"; }

const char *ncsat_last_error(void) { return last_error.c_str(); }

const char *ncsat_status_name(ncsat_status status) {
  switch (status) {
  case NCSAT_OK:
    return "ok";
  case NCSAT_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case NCSAT_ERR_PARSE:
    return "parse error";
  case NCSAT_ERR_IO:
    return "i/o error";
  case NCSAT_ERR_CAP_EXCEEDED:
    return "size cap exceeded";
  case NCSAT_ERR_TERM_BUDGET:
    return "term budget exceeded";
  case NCSAT_ERR_GENERATION:
    return "generation failed";
  case NCSAT_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

void ncsat_string_free(char *s) { delete[] s; }

void ncsat_count_options_init(ncsat_count_options *options) {
  if (!options)
    return;
  options->term_budget = ncsat::default_term_budget;
  options->threads = 1;
  options->prune_clashes = 1;
}

ncsat_status ncsat_formula_parse(const char *text, size_t length,
                                 ncsat_formula **out) {
  if ((!text && length > 0) || !out)
    return null_argument("ncsat_formula_parse");
  return guarded([&] {
    *out = wrap(ncsat::parse_dimacs(std::string_view(text ? text : "", length)));
  });
}

ncsat_status ncsat_formula_read_file(const char *path, ncsat_formula **out) {
  if (!path || !out)
    return null_argument("ncsat_formula_read_file");
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return fail(NCSAT_ERR_IO, std::string("cannot open '") + path + "'");
  return guarded([&] { *out = wrap(ncsat::parse_dimacs(in)); });
}

ncsat_status ncsat_formula_from_literals(uint32_t n, const int64_t *literals,
                                         size_t length, ncsat_formula **out) {
  if ((!literals && length > 0) || !out)
    return null_argument("ncsat_formula_from_literals");
  return guarded([&] {
    std::vector<std::vector<std::int64_t>> clauses;
    std::vector<std::int64_t> current;
    for (size_t i = 0; i < length; ++i) {
      if (literals[i] == 0) {
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(literals[i]);
      }
    }
    if (!current.empty())
      throw ncsat::Error(ncsat::ErrorKind::malformed_input,
                         "last clause not terminated by 0");
    *out = wrap(ncsat::CnfFormula::from_ints(n, clauses));
  });
}

ncsat_status ncsat_generate(const ncsat_gen_spec *spec, ncsat_formula **out) {
  if (!spec || !out)
    return null_argument("ncsat_generate");
  return guarded([&] {
    ncsat::GenSpec gen;
    gen.n = spec->n;
    gen.m = spec->m;
    gen.width = spec->width;
    gen.chain_p = spec->chain_p;
    gen.seed = spec->seed;
    switch (spec->mode) {
    case NCSAT_GEN_RANDOM:
      gen.mode = ncsat::GenMode::random;
      break;
    case NCSAT_GEN_ALTERNATIVE:
      gen.mode = ncsat::GenMode::alternative;
      break;
    case NCSAT_GEN_CHAIN:
      gen.mode = ncsat::GenMode::chain;
      break;
    default:
      throw ncsat::Error(ncsat::ErrorKind::malformed_input,
                         "unknown generator mode");
    }
    *out = wrap(ncsat::generate(gen));
  });
}

void ncsat_formula_free(ncsat_formula *formula) { delete formula; }

uint32_t ncsat_formula_num_vars(const ncsat_formula *formula) {
  return formula ? formula->formula.num_vars() : 0;
}

size_t ncsat_formula_num_clauses(const ncsat_formula *formula) {
  return formula ? formula->formula.num_clauses() : 0;
}

uint64_t ncsat_formula_declared_clauses(const ncsat_formula *formula) {
  return formula ? formula->declared_clauses : 0;
}

size_t ncsat_formula_num_warnings(const ncsat_formula *formula) {
  return formula ? formula->warnings.size() : 0;
}

const char *ncsat_formula_warning(const ncsat_formula *formula, size_t index) {
  if (!formula || index >= formula->warnings.size())
    return nullptr;
  return formula->warnings[index].c_str();
}

ncsat_status ncsat_formula_write_dimacs(const ncsat_formula *formula,
                                        char **out) {
  if (!formula || !out)
    return null_argument("ncsat_formula_write_dimacs");
  return guarded([&] { *out = copy_out(ncsat::write_dimacs(formula->formula)); });
}

ncsat_status ncsat_count(const ncsat_formula *formula,
                         const ncsat_count_options *options,
                         ncsat_count_report **out) {
  if (!formula || !out)
    return null_argument("ncsat_count");
  return guarded([&] {
    auto report =
        ncsat::count_falsifying(formula->formula, options_of(options));
    std::string falsifying = report.falsifying.get_str();
    std::string models = report.models.get_str();
    *out = new ncsat_count_report{std::move(report), formula->declared_clauses,
                                  std::move(falsifying), std::move(models)};
  });
}

ncsat_status ncsat_decide(const ncsat_formula *formula,
                          const ncsat_count_options *options,
                          int *satisfiable) {
  if (!formula || !satisfiable)
    return null_argument("ncsat_decide");
  return guarded([&] {
    *satisfiable = ncsat::decide(formula->formula, options_of(options)) ? 1 : 0;
  });
}

void ncsat_count_report_free(ncsat_count_report *report) { delete report; }

const char *ncsat_count_report_falsifying(const ncsat_count_report *report) {
  return report ? report->falsifying.c_str() : nullptr;
}

const char *ncsat_count_report_models(const ncsat_count_report *report) {
  return report ? report->models.c_str() : nullptr;
}

int ncsat_count_report_satisfiable(const ncsat_count_report *report) {
  return report && report->report.satisfiable ? 1 : 0;
}

ncsat_path ncsat_count_report_path(const ncsat_count_report *report) {
  return report && report->report.path == ncsat::CountPath::inclusion_exclusion
             ? NCSAT_PATH_INCLUSION_EXCLUSION
             : NCSAT_PATH_CLOSED_FORM;
}

uint64_t ncsat_count_report_terms_evaluated(const ncsat_count_report *report) {
  return report ? report->report.terms_evaluated : 0;
}

uint64_t ncsat_count_report_subtrees_pruned(const ncsat_count_report *report) {
  return report ? report->report.subtrees_pruned : 0;
}

ncsat_status ncsat_count_report_json(const ncsat_count_report *report,
                                     char **out) {
  if (!report || !out)
    return null_argument("ncsat_count_report_json");
  return guarded([&] {
    *out = copy_out(ncsat::to_json(report->report, report->declared_clauses));
  });
}

ncsat_status ncsat_analyze(const ncsat_formula *formula,
                           ncsat_structure_report **out) {
  if (!formula || !out)
    return null_argument("ncsat_analyze");
  return guarded([&] {
    auto report = ncsat::analyze_structure(ncsat::negate_cnf(formula->formula));
    std::string predicted = report.predicted_terms_upper_bound.get_str();
    *out = new ncsat_structure_report{std::move(report), std::move(predicted)};
  });
}

void ncsat_structure_report_free(ncsat_structure_report *report) {
  delete report;
}

size_t ncsat_structure_report_m(const ncsat_structure_report *report) {
  return report ? report->report.m : 0;
}

int ncsat_structure_report_all_alternative(
    const ncsat_structure_report *report) {
  return report && report->report.all_pairwise_alternative ? 1 : 0;
}

size_t ncsat_structure_report_p_max(const ncsat_structure_report *report) {
  return report ? report->report.p_max : 0;
}

size_t
ncsat_structure_report_num_components(const ncsat_structure_report *report) {
  return report ? report->report.nonalternative_components.size() : 0;
}

size_t ncsat_structure_report_component_size(const ncsat_structure_report *report,
                                             size_t index) {
  if (!report || index >= report->report.nonalternative_components.size())
    return 0;
  return report->report.nonalternative_components[index];
}

const char *
ncsat_structure_report_predicted_terms(const ncsat_structure_report *report) {
  return report ? report->predicted_terms.c_str() : nullptr;
}

ncsat_status ncsat_structure_report_json(const ncsat_structure_report *report,
                                         char **out) {
  if (!report || !out)
    return null_argument("ncsat_structure_report_json");
  return guarded([&] { *out = copy_out(ncsat::to_json(report->report)); });
}

ncsat_status ncsat_oracle_models(const ncsat_formula *formula, uint64_t *out) {
  if (!formula || !out)
    return null_argument("ncsat_oracle_models");
  return guarded([&] { *out = ncsat::brute_force_models(formula->formula); });
}

ncsat_status ncsat_oracle_falsifying(const ncsat_formula *formula,
                                     uint64_t *out) {
  if (!formula || !out)
    return null_argument("ncsat_oracle_falsifying");
  return guarded([&] { *out = ncsat::brute_force_falsifying(formula->formula); });
}

ncsat_status ncsat_truth_table_csv(const ncsat_formula *formula, char **out) {
  if (!formula || !out)
    return null_argument("ncsat_truth_table_csv");
  return guarded(
      [&] { *out = copy_out(ncsat::to_csv(ncsat::truth_table(formula->formula))); });
}

} // extern "C"
