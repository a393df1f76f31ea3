/*
 * C interface to the ncsat counting engine.
 *
 * Objects are opaque handles created by ncsat_* constructors and released
 * with the matching *_free function. Every fallible call returns an
 * ncsat_status; on failure ncsat_last_error() describes the problem (the
 * message is thread local and valid until the next failing call on the
 * same thread). Strings returned through char** out-parameters are heap
 * allocated and must be released with ncsat_string_free(). Strings
 * returned directly as const char* are owned by their handle.
 */
#ifndef NCSAT_H
#define NCSAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NCSAT_BUILDING)
#    define NCSAT_API __declspec(dllexport)
#  else
#    define NCSAT_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define NCSAT_API __attribute__((visibility("default")))
#else
#  define NCSAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncsat_status {
  NCSAT_OK = 0,
  NCSAT_ERR_INVALID_ARGUMENT = 1,
  NCSAT_ERR_PARSE = 2,
  NCSAT_ERR_IO = 3,
  NCSAT_ERR_CAP_EXCEEDED = 4,
  NCSAT_ERR_TERM_BUDGET = 5,
  NCSAT_ERR_GENERATION = 6,
  NCSAT_ERR_INTERNAL = 7
} ncsat_status;

typedef enum ncsat_path {
  NCSAT_PATH_CLOSED_FORM = 0,
  NCSAT_PATH_INCLUSION_EXCLUSION = 1
} ncsat_path;

typedef enum ncsat_gen_mode {
  NCSAT_GEN_RANDOM = 0,
  NCSAT_GEN_ALTERNATIVE = 1,
  NCSAT_GEN_CHAIN = 2
} ncsat_gen_mode;

typedef struct ncsat_formula ncsat_formula;
typedef struct ncsat_count_report ncsat_count_report;
typedef struct ncsat_structure_report ncsat_structure_report;

typedef struct ncsat_count_options {
  uint64_t term_budget; /* UINT64_MAX for no limit */
  unsigned threads;
  int prune_clashes;
} ncsat_count_options;

typedef struct ncsat_gen_spec {
  uint32_t n;
  size_t m;
  uint32_t width;
  ncsat_gen_mode mode;
  size_t chain_p;
  uint64_t seed;
} ncsat_gen_spec;

NCSAT_API const char *ncsat_version(void);
NCSAT_API const char *ncsat_last_error(void);
NCSAT_API const char *ncsat_status_name(ncsat_status status);
NCSAT_API void ncsat_string_free(char *s);

/* Defaults: term budget 2^26, one thread, pruning on. */
NCSAT_API void ncsat_count_options_init(ncsat_count_options *options);

/* Formulas. Every constructor normalizes: tautologies and duplicate
 * clauses are dropped, literals are sorted. */
NCSAT_API ncsat_status ncsat_formula_parse(const char *text, size_t length,
                                           ncsat_formula **out);
NCSAT_API ncsat_status ncsat_formula_read_file(const char *path,
                                               ncsat_formula **out);
/* literals: DIMACS-style signed integers, each clause terminated by 0. */
NCSAT_API ncsat_status ncsat_formula_from_literals(uint32_t n,
                                                   const int64_t *literals,
                                                   size_t length,
                                                   ncsat_formula **out);
NCSAT_API ncsat_status ncsat_generate(const ncsat_gen_spec *spec,
                                      ncsat_formula **out);
NCSAT_API void ncsat_formula_free(ncsat_formula *formula);

NCSAT_API uint32_t ncsat_formula_num_vars(const ncsat_formula *formula);
NCSAT_API size_t ncsat_formula_num_clauses(const ncsat_formula *formula);
/* Header clause count for parsed input, otherwise the effective count. */
NCSAT_API uint64_t ncsat_formula_declared_clauses(const ncsat_formula *formula);
NCSAT_API size_t ncsat_formula_num_warnings(const ncsat_formula *formula);
NCSAT_API const char *ncsat_formula_warning(const ncsat_formula *formula,
                                            size_t index);
NCSAT_API ncsat_status ncsat_formula_write_dimacs(const ncsat_formula *formula,
                                                  char **out);

/* Counting. options may be NULL for defaults. */
NCSAT_API ncsat_status ncsat_count(const ncsat_formula *formula,
                                   const ncsat_count_options *options,
                                   ncsat_count_report **out);
NCSAT_API ncsat_status ncsat_decide(const ncsat_formula *formula,
                                    const ncsat_count_options *options,
                                    int *satisfiable);
NCSAT_API void ncsat_count_report_free(ncsat_count_report *report);

NCSAT_API const char *
ncsat_count_report_falsifying(const ncsat_count_report *report);
NCSAT_API const char *ncsat_count_report_models(const ncsat_count_report *report);
NCSAT_API int ncsat_count_report_satisfiable(const ncsat_count_report *report);
NCSAT_API ncsat_path ncsat_count_report_path(const ncsat_count_report *report);
NCSAT_API uint64_t
ncsat_count_report_terms_evaluated(const ncsat_count_report *report);
NCSAT_API uint64_t
ncsat_count_report_subtrees_pruned(const ncsat_count_report *report);
NCSAT_API ncsat_status ncsat_count_report_json(const ncsat_count_report *report,
                                               char **out);

/* Structure analysis of the negated formula. */
NCSAT_API ncsat_status ncsat_analyze(const ncsat_formula *formula,
                                     ncsat_structure_report **out);
NCSAT_API void ncsat_structure_report_free(ncsat_structure_report *report);
NCSAT_API size_t ncsat_structure_report_m(const ncsat_structure_report *report);
NCSAT_API int
ncsat_structure_report_all_alternative(const ncsat_structure_report *report);
NCSAT_API size_t
ncsat_structure_report_p_max(const ncsat_structure_report *report);
NCSAT_API size_t
ncsat_structure_report_num_components(const ncsat_structure_report *report);
NCSAT_API size_t
ncsat_structure_report_component_size(const ncsat_structure_report *report,
                                      size_t index);
NCSAT_API const char *
ncsat_structure_report_predicted_terms(const ncsat_structure_report *report);
NCSAT_API ncsat_status
ncsat_structure_report_json(const ncsat_structure_report *report, char **out);

/* Brute-force oracle. Counting is capped at n <= 24, tables at n <= 16. */
NCSAT_API ncsat_status ncsat_oracle_models(const ncsat_formula *formula,
                                           uint64_t *out);
NCSAT_API ncsat_status ncsat_oracle_falsifying(const ncsat_formula *formula,
                                               uint64_t *out);
NCSAT_API ncsat_status ncsat_truth_table_csv(const ncsat_formula *formula,
                                             char **out);

#ifdef __cplusplus
}
#endif

#endif /* NCSAT_H */
