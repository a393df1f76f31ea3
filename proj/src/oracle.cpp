#include "ncsat/oracle.hpp"

#include "ncsat/error.hpp"

namespace ncsat {

namespace {

void require_cap(Var n, Var cap, const char *what) {
  if (n > cap)
    throw Error(ErrorKind::cap_exceeded,
                std::string(what) + " refused for n = " + std::to_string(n) +
                    " (cap " + std::to_string(cap) + ")");
}

constexpr Tuple bit(Var n, Var var) { return Tuple{1} << (n - var); }

// A clause holds on a tuple iff one of its positive vars is 1 or one of its
// negative vars is 0.
struct ClauseMask {
  Tuple positive = 0;
  Tuple negative = 0;

  bool holds(Tuple t) const { return (t & positive) || (~t & negative); }
};

std::vector<ClauseMask> masks_of(const CnfFormula &formula) {
  std::vector<ClauseMask> masks;
  for (const Clause &clause : formula.clauses()) {
    ClauseMask mask;
    for (Literal lit : clause)
      (lit.positive ? mask.positive : mask.negative) |=
          bit(formula.num_vars(), lit.var);
    masks.push_back(mask);
  }
  return masks;
}

} // namespace

std::uint64_t brute_force_models(const CnfFormula &formula) {
  require_cap(formula.num_vars(), oracle_count_cap, "brute-force counting");
  const auto masks = masks_of(formula);
  const std::uint64_t tuples = std::uint64_t{1} << formula.num_vars();
  std::uint64_t models = 0;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    bool all = true;
    for (const ClauseMask &mask : masks)
      if (!mask.holds(Tuple(t))) {
        all = false;
        break;
      }
    models += all;
  }
  return models;
}

std::uint64_t brute_force_falsifying(const CnfFormula &formula) {
  require_cap(formula.num_vars(), oracle_count_cap, "brute-force counting");
  const auto masks = masks_of(formula);
  const std::uint64_t tuples = std::uint64_t{1} << formula.num_vars();
  std::uint64_t falsifying = 0;
  for (std::uint64_t t = 0; t < tuples; ++t)
    for (const ClauseMask &mask : masks)
      if (!mask.holds(Tuple(t))) {
        ++falsifying;
        break;
      }
  return falsifying;
}

TruthTable truth_table(const CnfFormula &formula) {
  require_cap(formula.num_vars(), oracle_table_cap, "truth table");
  const auto masks = masks_of(formula);
  TruthTable table{formula.num_vars(), masks.size(), {}};
  const Tuple tuples = Tuple{1} << formula.num_vars();
  table.rows.reserve(tuples);
  for (Tuple t = 0; t < tuples; ++t) {
    TruthTableRow row{t, {}, true};
    for (const ClauseMask &mask : masks) {
      row.clause_values.push_back(mask.holds(t));
      row.value = row.value && row.clause_values.back();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_csv(const TruthTable &table) {
  std::string out;
  for (Var v = 1; v <= table.n; ++v)
    out += "x" + std::to_string(v) + ",";
  for (std::size_t i = 1; i <= table.m; ++i)
    out += "D" + std::to_string(i) + ",";
  out += "f\n";
  for (const TruthTableRow &row : table.rows) {
    for (Var v = 1; v <= table.n; ++v) {
      out += (row.tuple & bit(table.n, v)) ? '1' : '0';
      out += ',';
    }
    for (bool value : row.clause_values) {
      out += value ? '1' : '0';
      out += ',';
    }
    out += row.value ? "1\n" : "0\n";
  }
  return out;
}

std::vector<Tuple> cube_cover_tuples(const Cube &cube, Var n) {
  require_cap(n, oracle_table_cap, "cube cover listing");
  std::vector<Tuple> covered;
  const Tuple tuples = Tuple{1} << n;
  for (Tuple t = 0; t < tuples; ++t) {
    bool all = true;
    for (Literal lit : cube)
      if (((t & bit(n, lit.var)) != 0) != lit.positive) {
        all = false;
        break;
      }
    if (all)
      covered.push_back(t);
  }
  return covered;
}

std::string format_tuple(Tuple tuple, Var n) {
  std::string out;
  for (Var v = 1; v <= n; ++v)
    out += (tuple & bit(n, v)) ? '1' : '0';
  return out;
}

} // namespace ncsat
