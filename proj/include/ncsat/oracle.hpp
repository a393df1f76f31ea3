#pragma once

// Brute-force ground truth. Walks all 2^n tuples; knows nothing about
// cubes or inclusion-exclusion.
//
// Tuples are integers with x1 as the most significant bit, so tuple 0b010
// over n = 3 is x1=0, x2=1, x3=0 and prints as "010".

#include <cstdint>
#include <string>
#include <vector>

#include "ncsat/formula.hpp"

namespace ncsat {

inline constexpr Var oracle_count_cap = 24;
inline constexpr Var oracle_table_cap = 16;

using Tuple = std::uint32_t;

/// Tuples satisfying every clause. Refuses n > oracle_count_cap.
std::uint64_t brute_force_models(const CnfFormula &formula);
/// Tuples falsifying at least one clause. Refuses n > oracle_count_cap.
std::uint64_t brute_force_falsifying(const CnfFormula &formula);

struct TruthTableRow {
  Tuple tuple = 0;
  std::vector<bool> clause_values;
  bool value = true;
};

struct TruthTable {
  Var n = 0;
  std::size_t m = 0;
  std::vector<TruthTableRow> rows; // ascending tuple order
};

/// Per-clause truth values on every tuple. Refuses n > oracle_table_cap.
TruthTable truth_table(const CnfFormula &formula);

/// Header "x1,...,xn,D1,...,Dm,f", then one 0/1 row per tuple.
std::string to_csv(const TruthTable &table);

/// Tuples on which the cube is true, ascending. Refuses n > oracle_table_cap.
std::vector<Tuple> cube_cover_tuples(const Cube &cube, Var n);

std::string format_tuple(Tuple tuple, Var n);

} // namespace ncsat
