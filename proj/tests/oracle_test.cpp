#include <random>

#include <gtest/gtest.h>

#include "ncsat/counting.hpp"
#include "ncsat/error.hpp"
#include "ncsat/oracle.hpp"
#include "test_util.hpp"

using namespace ncsat;

TEST(BruteForce, PaperFormula) {
  EXPECT_EQ(brute_force_models(fixtures::paper_formula3()), 2u);
  EXPECT_EQ(brute_force_falsifying(fixtures::paper_formula3()), 6u);
}

TEST(BruteForce, EmptyFormula) {
  EXPECT_EQ(brute_force_models(CnfFormula(3, {})), 8u);
  EXPECT_EQ(brute_force_falsifying(CnfFormula(3, {})), 0u);
}

TEST(BruteForce, Chain) {
  EXPECT_EQ(brute_force_models(fixtures::chain_formula()), 3u);
  EXPECT_EQ(brute_force_falsifying(fixtures::chain_formula()), 13u);
}

TEST(BruteForce, UnitClause) {
  EXPECT_EQ(brute_force_falsifying(CnfFormula::from_ints(1, {{1}})), 1u);
}

TEST(BruteForce, RefusesAboveCap) {
  try {
    (void)brute_force_models(CnfFormula(25, {}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
  EXPECT_THROW((void)brute_force_falsifying(CnfFormula(25, {})), Error);
}

TEST(TruthTable, MatchesPaperTable) {
  // Columns D1 D2 D3 for tuples 000..111.
  const bool expected[8][3] = {{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 1, 1},
                               {1, 1, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  const TruthTable table = truth_table(fixtures::paper_formula3());
  ASSERT_EQ(table.rows.size(), 8u);
  for (Tuple t = 0; t < 8; ++t) {
    const auto &row = table.rows[t];
    EXPECT_EQ(row.tuple, t);
    for (int d = 0; d < 3; ++d)
      EXPECT_EQ(row.clause_values[d], expected[t][d]) << "row " << t;
    EXPECT_EQ(row.value, expected[t][0] && expected[t][1] && expected[t][2]);
  }
  EXPECT_FALSE(table.rows[0b010].value);
  EXPECT_TRUE(table.rows[0b111].value);
}

TEST(TruthTable, EmptyFormula) {
  const TruthTable table = truth_table(CnfFormula(1, {}));
  ASSERT_EQ(table.rows.size(), 2u);
  EXPECT_TRUE(table.rows[0].value);
  EXPECT_TRUE(table.rows[1].value);
}

TEST(TruthTable, Csv) {
  const std::string csv = to_csv(truth_table(fixtures::paper_formula3()));
  EXPECT_EQ(csv, "x1,x2,x3,D1,D2,D3,f\n"
                 "0,0,0,1,1,1,1\n"
                 "0,0,1,1,0,1,0\n"
                 "0,1,0,0,1,1,0\n"
                 "0,1,1,0,1,1,0\n"
                 "1,0,0,1,1,0,0\n"
                 "1,0,1,1,0,1,0\n"
                 "1,1,0,1,1,0,0\n"
                 "1,1,1,1,1,1,1\n");
}

TEST(TruthTable, RefusesAboveCap) {
  EXPECT_THROW((void)truth_table(CnfFormula(17, {})), Error);
}

TEST(CubeCover, PaperTuples) {
  const auto a = cube_cover_tuples(Cube::make({neg(1), pos(2)}), 3);
  const auto b = cube_cover_tuples(Cube::make({pos(1), neg(3)}), 3);
  EXPECT_EQ(a, (std::vector<Tuple>{0b010, 0b011}));
  EXPECT_EQ(b, (std::vector<Tuple>{0b100, 0b110}));
  EXPECT_EQ(format_tuple(a[0], 3), "010");
  EXPECT_EQ(format_tuple(b[1], 3), "110");
}

TEST(CubeCover, EmptyCube) {
  EXPECT_EQ(cube_cover_tuples(Cube{}, 1), (std::vector<Tuple>{0, 1}));
}

TEST(OracleProperties, CountsAgree) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const Var n = Var(1 + rng() % 10);
    const CnfFormula f = fixtures::random_formula(rng, n, 10, n);
    const auto models = brute_force_models(f);
    EXPECT_EQ(models + brute_force_falsifying(f), std::uint64_t{1} << n);
    const TruthTable table = truth_table(f);
    std::uint64_t ones = 0;
    for (const auto &row : table.rows)
      ones += row.value;
    EXPECT_EQ(ones, models);
  }
}

TEST(OracleProperties, CoverLengthIsLemmaTwoCount) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 300; ++i) {
    const Var n = Var(1 + rng() % 12);
    const CnfFormula f = fixtures::random_formula(rng, n, 3, n);
    for (const Cube &c : negate_cnf(f).cubes)
      EXPECT_EQ(mpz_class(cube_cover_tuples(c, n).size()),
                cube_tuple_count(c, n));
  }
}
