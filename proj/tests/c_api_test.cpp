#include <cstring>
#include <string>

#include <gtest/gtest.h>

#include "ncsat/ncsat.h"

namespace {

ncsat_formula *parse(const std::string &text) {
  ncsat_formula *f = nullptr;
  EXPECT_EQ(ncsat_formula_parse(text.data(), text.size(), &f), NCSAT_OK)
      << ncsat_last_error();
  return f;
}

std::string take(char *s) {
  std::string out = s ? s : "";
  ncsat_string_free(s);
  return out;
}

const char *paper3 = "p cnf 3 3\n1 -2 0\n2 -3 0\n-1 3 0\n";
const char *chain = "p cnf 4 3\n-1 0\n-2 0\n-3 -4 0\n";

} // namespace

TEST(CApi, CountPaperFormula) {
  ncsat_formula *f = parse(paper3);
  ncsat_count_report *r = nullptr;
  ASSERT_EQ(ncsat_count(f, nullptr, &r), NCSAT_OK);
  EXPECT_STREQ(ncsat_count_report_falsifying(r), "6");
  EXPECT_STREQ(ncsat_count_report_models(r), "2");
  EXPECT_EQ(ncsat_count_report_satisfiable(r), 1);
  EXPECT_EQ(ncsat_count_report_path(r), NCSAT_PATH_CLOSED_FORM);
  EXPECT_EQ(ncsat_count_report_terms_evaluated(r), 3u);
  char *json = nullptr;
  ASSERT_EQ(ncsat_count_report_json(r, &json), NCSAT_OK);
  EXPECT_EQ(take(json),
            R"({"n":3,"m_declared":3,"m_effective":3,"falsifying":"6",)"
            R"("models":"2","satisfiable":true,"path":"closed_form",)"
            R"("terms_evaluated":3,"subtrees_pruned":0})");
  ncsat_count_report_free(r);
  ncsat_formula_free(f);
}

TEST(CApi, ChainJsonAndDecide) {
  ncsat_formula *f = parse(chain);
  ncsat_count_report *r = nullptr;
  ASSERT_EQ(ncsat_count(f, nullptr, &r), NCSAT_OK);
  char *json = nullptr;
  ASSERT_EQ(ncsat_count_report_json(r, &json), NCSAT_OK);
  const std::string text = take(json);
  EXPECT_NE(text.find(R"("falsifying":"13")"), std::string::npos);
  EXPECT_NE(text.find(R"("models":"3")"), std::string::npos);
  EXPECT_NE(text.find(R"("terms_evaluated":7)"), std::string::npos);
  EXPECT_NE(text.find(R"("path":"inclusion_exclusion")"), std::string::npos);
  int sat = -1;
  ASSERT_EQ(ncsat_decide(f, nullptr, &sat), NCSAT_OK);
  EXPECT_EQ(sat, 1);
  ncsat_count_report_free(r);
  ncsat_formula_free(f);
}

TEST(CApi, Analyze) {
  ncsat_formula *f = parse(chain);
  ncsat_structure_report *s = nullptr;
  ASSERT_EQ(ncsat_analyze(f, &s), NCSAT_OK);
  EXPECT_EQ(ncsat_structure_report_m(s), 3u);
  EXPECT_EQ(ncsat_structure_report_all_alternative(s), 0);
  EXPECT_EQ(ncsat_structure_report_p_max(s), 3u);
  ASSERT_EQ(ncsat_structure_report_num_components(s), 1u);
  EXPECT_EQ(ncsat_structure_report_component_size(s, 0), 3u);
  EXPECT_STREQ(ncsat_structure_report_predicted_terms(s), "7");
  char *json = nullptr;
  ASSERT_EQ(ncsat_structure_report_json(s, &json), NCSAT_OK);
  EXPECT_EQ(take(json),
            R"({"m":3,"all_pairwise_alternative":false,)"
            R"("nonalternative_components":[3],"p_max":3,)"
            R"("predicted_terms_upper_bound":"7"})");
  ncsat_structure_report_free(s);
  ncsat_formula_free(f);
}

TEST(CApi, OracleAndTable) {
  ncsat_formula *f = parse(paper3);
  std::uint64_t models = 0, falsifying = 0;
  ASSERT_EQ(ncsat_oracle_models(f, &models), NCSAT_OK);
  ASSERT_EQ(ncsat_oracle_falsifying(f, &falsifying), NCSAT_OK);
  EXPECT_EQ(models, 2u);
  EXPECT_EQ(falsifying, 6u);
  char *csv = nullptr;
  ASSERT_EQ(ncsat_truth_table_csv(f, &csv), NCSAT_OK);
  const std::string table = take(csv);
  EXPECT_EQ(table.substr(0, table.find('\n')), "x1,x2,x3,D1,D2,D3,f");
  EXPECT_NE(table.find("\n0,1,0,0,1,1,0\n"), std::string::npos);
  ncsat_formula_free(f);
}

TEST(CApi, FromLiteralsAndWrite) {
  const std::int64_t lits[] = {-1, 3, 0, 2, -3, 0, 1, -2, 0};
  ncsat_formula *f = nullptr;
  ASSERT_EQ(ncsat_formula_from_literals(3, lits, 9, &f), NCSAT_OK);
  EXPECT_EQ(ncsat_formula_num_clauses(f), 3u);
  char *text = nullptr;
  ASSERT_EQ(ncsat_formula_write_dimacs(f, &text), NCSAT_OK);
  EXPECT_EQ(take(text), paper3);
  ncsat_formula_free(f);

  const std::int64_t open[] = {1, 2};
  EXPECT_EQ(ncsat_formula_from_literals(3, open, 2, &f),
            NCSAT_ERR_INVALID_ARGUMENT);
  const std::int64_t big[] = {4, 0};
  EXPECT_EQ(ncsat_formula_from_literals(3, big, 2, &f),
            NCSAT_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(ncsat_last_error()).find("4"), std::string::npos);
}

TEST(CApi, Warnings) {
  ncsat_formula *f = parse("p cnf 3 5\n1 2 0\n");
  EXPECT_EQ(ncsat_formula_declared_clauses(f), 5u);
  EXPECT_EQ(ncsat_formula_num_clauses(f), 1u);
  ASSERT_EQ(ncsat_formula_num_warnings(f), 1u);
  EXPECT_NE(ncsat_formula_warning(f, 0), nullptr);
  EXPECT_EQ(ncsat_formula_warning(f, 1), nullptr);
  ncsat_formula_free(f);
}

TEST(CApi, ErrorCodes) {
  ncsat_formula *f = nullptr;
  const std::string bad = "p cnf 3 2\n1 x 0\n";
  EXPECT_EQ(ncsat_formula_parse(bad.data(), bad.size(), &f), NCSAT_ERR_PARSE);
  EXPECT_NE(std::string(ncsat_last_error()).find("line 2"), std::string::npos);
  EXPECT_EQ(f, nullptr);
  EXPECT_EQ(ncsat_formula_read_file("/nonexistent/x.cnf", &f), NCSAT_ERR_IO);
  EXPECT_EQ(ncsat_formula_parse(nullptr, 0, nullptr),
            NCSAT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(ncsat_count(nullptr, nullptr, nullptr), NCSAT_ERR_INVALID_ARGUMENT);

  f = parse("p cnf 25 0\n");
  std::uint64_t models = 0;
  EXPECT_EQ(ncsat_oracle_models(f, &models), NCSAT_ERR_CAP_EXCEEDED);
  ncsat_formula_free(f);
}

TEST(CApi, TermBudget) {
  ncsat_formula *f = parse(chain);
  ncsat_count_options options;
  ncsat_count_options_init(&options);
  EXPECT_EQ(options.threads, 1u);
  options.term_budget = 6;
  ncsat_count_report *r = nullptr;
  EXPECT_EQ(ncsat_count(f, &options, &r), NCSAT_ERR_TERM_BUDGET);
  options.term_budget = 7;
  ASSERT_EQ(ncsat_count(f, &options, &r), NCSAT_OK);
  ncsat_count_report_free(r);
  ncsat_formula_free(f);
}

TEST(CApi, Generate) {
  ncsat_gen_spec spec{};
  spec.n = 4;
  spec.m = 3;
  spec.width = 2;
  spec.mode = NCSAT_GEN_CHAIN;
  spec.chain_p = 3;
  spec.seed = 99;
  ncsat_formula *a = nullptr, *b = nullptr;
  ASSERT_EQ(ncsat_generate(&spec, &a), NCSAT_OK);
  ASSERT_EQ(ncsat_generate(&spec, &b), NCSAT_OK);
  char *ta = nullptr, *tb = nullptr;
  ncsat_formula_write_dimacs(a, &ta);
  ncsat_formula_write_dimacs(b, &tb);
  EXPECT_EQ(take(ta), take(tb));
  ncsat_formula_free(a);
  ncsat_formula_free(b);

  spec.width = 9;
  EXPECT_EQ(ncsat_generate(&spec, &a), NCSAT_ERR_INVALID_ARGUMENT);
  spec.width = 1;
  spec.mode = NCSAT_GEN_RANDOM;
  spec.m = 9;
  spec.chain_p = 0;
  EXPECT_EQ(ncsat_generate(&spec, &a), NCSAT_ERR_GENERATION);
}
