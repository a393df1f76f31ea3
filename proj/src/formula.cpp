#include "ncsat/formula.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ncsat/error.hpp"

namespace ncsat {

Literal Literal::from_dimacs(std::int64_t value) {
  if (value == 0 || value > std::int64_t(UINT32_MAX) ||
      value < -std::int64_t(UINT32_MAX))
    throw Error(ErrorKind::malformed_input,
                "literal " + std::to_string(value) + " is not a variable");
  return value > 0 ? pos(Var(value)) : neg(Var(-value));
}

template <class Tag>
LiteralSet<Tag> LiteralSet<Tag>::make(std::vector<Literal> literals) {
  std::sort(literals.begin(), literals.end());
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (literals[i].var == 0)
      throw Error(ErrorKind::contract, "variable index 0");
    if (i > 0 && literals[i - 1].var == literals[i].var)
      throw Error(ErrorKind::contract,
                  "variable x" + std::to_string(literals[i].var) +
                      " occurs twice");
  }
  LiteralSet set;
  set.lits_ = std::move(literals);
  return set;
}

template class LiteralSet<ClauseTag>;
template class LiteralSet<CubeTag>;

std::optional<Clause> make_clause(std::span<const Literal> literals, Var n) {
  std::vector<Literal> lits(literals.begin(), literals.end());
  for (Literal lit : lits)
    if (lit.var == 0 || lit.var > n)
      throw Error(ErrorKind::malformed_input,
                  "variable index " + std::to_string(lit.var) +
                      " outside 1.." + std::to_string(n));
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (contrary(lits[i - 1], lits[i]))
      return std::nullopt;
  return Clause::make(std::move(lits));
}

namespace {

template <class To, class From> To flip(const From &from) {
  std::vector<Literal> lits;
  lits.reserve(from.width());
  for (Literal lit : from)
    lits.push_back(lit.negated());
  return To::make(std::move(lits));
}

} // namespace

Cube negate_clause(const Clause &clause) { return flip<Cube>(clause); }

Clause clause_of(const Cube &cube) { return flip<Clause>(cube); }

bool canonical_less(const Clause &a, const Clause &b) {
  auto key = [](Literal lit) { return std::pair(!lit.positive, lit.var); };
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [&](Literal x, Literal y) { return key(x) < key(y); });
}

CnfFormula::CnfFormula(Var n, std::vector<Clause> clauses)
    : n_(n), clauses_(std::move(clauses)) {
  for (const Clause &clause : clauses_)
    if (clause.max_var() > n_)
      throw Error(ErrorKind::malformed_input,
                  "variable index " + std::to_string(clause.max_var()) +
                      " outside 1.." + std::to_string(n_));
  std::sort(clauses_.begin(), clauses_.end(), canonical_less);
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()),
                 clauses_.end());
}

CnfFormula CnfFormula::from_literal_lists(
    Var n, const std::vector<std::vector<Literal>> &clauses) {
  std::vector<Clause> kept;
  kept.reserve(clauses.size());
  for (const auto &lits : clauses)
    if (auto clause = make_clause(lits, n))
      kept.push_back(std::move(*clause));
  return CnfFormula(n, std::move(kept));
}

CnfFormula
CnfFormula::from_ints(Var n,
                      const std::vector<std::vector<std::int64_t>> &clauses) {
  std::vector<std::vector<Literal>> lists;
  lists.reserve(clauses.size());
  for (const auto &ints : clauses) {
    auto &lits = lists.emplace_back();
    for (std::int64_t value : ints)
      lits.push_back(Literal::from_dimacs(value));
  }
  return from_literal_lists(n, lists);
}

DnfCubes negate_cnf(const CnfFormula &formula) {
  DnfCubes dnf{formula.num_vars(), {}};
  dnf.cubes.reserve(formula.num_clauses());
  for (const Clause &clause : formula.clauses())
    dnf.cubes.push_back(negate_clause(clause));
  return dnf;
}

DnfCubes expand_to_alternative(const DnfCubes &dnf, Var max_vars) {
  if (dnf.n > max_vars || dnf.n > 30)
    throw Error(ErrorKind::cap_exceeded,
                "minterm expansion refused for n = " + std::to_string(dnf.n) +
                    " (cap " + std::to_string(std::min<Var>(max_vars, 30)) +
                    "); the result may hold 2^n cubes");
  const Var n = dnf.n;
  auto bit = [n](Var v) { return std::uint32_t{1} << (n - v); };
  const std::uint32_t all = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;

  std::vector<std::uint32_t> minterms;
  for (const Cube &cube : dnf.cubes) {
    std::uint32_t fixed = 0, value = 0;
    for (Literal lit : cube) {
      fixed |= bit(lit.var);
      if (lit.positive)
        value |= bit(lit.var);
    }
    const std::uint32_t free = all & ~fixed;
    std::uint32_t sub = free;
    do {
      minterms.push_back(value | sub);
      sub = (sub - 1) & free;
    } while (sub != free);
  }
  std::sort(minterms.begin(), minterms.end());
  minterms.erase(std::unique(minterms.begin(), minterms.end()),
                 minterms.end());

  DnfCubes out{n, {}};
  out.cubes.reserve(minterms.size());
  for (std::uint32_t tuple : minterms) {
    std::vector<Literal> lits;
    lits.reserve(n);
    for (Var v = 1; v <= n; ++v)
      lits.push_back({v, (tuple & bit(v)) != 0});
    out.cubes.push_back(Cube::make(std::move(lits)));
  }
  return out;
}

std::string to_string(Literal lit) {
  return (lit.positive ? "x" : "~x") + std::to_string(lit.var);
}

namespace {

template <class Set>
std::string join(const Set &set, const char *sep, const char *empty) {
  if (set.empty())
    return empty;
  std::string out;
  for (Literal lit : set) {
    if (!out.empty())
      out += sep;
    out += to_string(lit);
  }
  return out;
}

} // namespace

std::string to_string(const Clause &clause) {
  return "(" + join(clause, " | ", "") + ")";
}

std::string to_string(const Cube &cube) { return join(cube, "&", "T"); }

std::ostream &operator<<(std::ostream &os, Literal lit) {
  return os << to_string(lit);
}
std::ostream &operator<<(std::ostream &os, const Clause &clause) {
  return os << to_string(clause);
}
std::ostream &operator<<(std::ostream &os, const Cube &cube) {
  return os << to_string(cube);
}

} // namespace ncsat
