#pragma once

// Literals, clauses, cubes (elementary conjunctions) and CNF formulas.
//
// Everything here is immutable once built. Clauses and cubes keep their
// literals sorted by variable and never hold two literals on the same
// variable, so structural equality is plain vector equality.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncsat {

using Var = std::uint32_t;

struct Literal {
  Var var = 0;
  bool positive = true;

  constexpr Literal negated() const noexcept { return {var, !positive}; }

  /// Signed DIMACS encoding: x3 -> 3, ~x3 -> -3.
  constexpr std::int64_t to_dimacs() const noexcept {
    return positive ? std::int64_t(var) : -std::int64_t(var);
  }
  static Literal from_dimacs(std::int64_t value);

  friend constexpr auto operator<=>(const Literal &, const Literal &) = default;
};

constexpr Literal pos(Var v) noexcept { return {v, true}; }
constexpr Literal neg(Var v) noexcept { return {v, false}; }

constexpr bool contrary(Literal a, Literal b) noexcept {
  return a.var == b.var && a.positive != b.positive;
}

/// Sorted set of literals with pairwise distinct variables. The tag keeps
/// disjunctions and conjunctions from being mixed up.
template <class Tag> class LiteralSet {
public:
  /// The empty set: the empty clause (false everywhere) or the empty cube
  /// (true everywhere).
  LiteralSet() = default;

  /// Strict construction: sorts, throws ErrorKind::contract if two literals
  /// share a variable or a literal has var 0.
  static LiteralSet make(std::vector<Literal> literals);
  static LiteralSet make(std::initializer_list<Literal> literals) {
    return make(std::vector<Literal>(literals));
  }

  std::span<const Literal> literals() const noexcept { return lits_; }
  std::size_t width() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }
  auto begin() const noexcept { return lits_.begin(); }
  auto end() const noexcept { return lits_.end(); }
  Var max_var() const noexcept { return lits_.empty() ? 0 : lits_.back().var; }

  friend bool operator==(const LiteralSet &, const LiteralSet &) = default;

private:
  std::vector<Literal> lits_;
};

struct ClauseTag {};
struct CubeTag {};
using Clause = LiteralSet<ClauseTag>;
using Cube = LiteralSet<CubeTag>;

extern template class LiteralSet<ClauseTag>;
extern template class LiteralSet<CubeTag>;

/// Builds a clause from arbitrary literals over n variables. Repeated
/// literals collapse; a contrary pair makes the clause a tautology, reported
/// as nullopt. Throws ErrorKind::malformed_input for var 0 or var > n.
std::optional<Clause> make_clause(std::span<const Literal> literals, Var n);

/// The cube true exactly where the clause is false.
Cube negate_clause(const Clause &clause);
/// Inverse of negate_clause.
Clause clause_of(const Cube &cube);

/// Canonical clause order used for normalization and DIMACS output.
/// Lexicographic over the var-sorted literal sequence, where literals
/// compare positive-before-negative and then by variable; a proper prefix
/// sorts first.
bool canonical_less(const Clause &a, const Clause &b);

class CnfFormula {
public:
  CnfFormula() = default;

  /// Normalizes: checks every var against n, sorts canonically and drops
  /// exact duplicate clauses.
  CnfFormula(Var n, std::vector<Clause> clauses);

  /// Normalizing front end for raw literal lists (DIMACS, generators).
  /// Tautologies are dropped, duplicate literals collapse.
  static CnfFormula from_literal_lists(
      Var n, const std::vector<std::vector<Literal>> &clauses);
  /// Same, with DIMACS-style signed integers.
  static CnfFormula
  from_ints(Var n, const std::vector<std::vector<std::int64_t>> &clauses);

  Var num_vars() const noexcept { return n_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }
  std::span<const Clause> clauses() const noexcept { return clauses_; }

  friend bool operator==(const CnfFormula &, const CnfFormula &) = default;

private:
  Var n_ = 0;
  std::vector<Clause> clauses_;
};

/// Negation of a CNF: cubes[i] is the negation of clauses[i].
struct DnfCubes {
  Var n = 0;
  std::vector<Cube> cubes;

  friend bool operator==(const DnfCubes &, const DnfCubes &) = default;
};

DnfCubes negate_cnf(const CnfFormula &formula);

inline constexpr Var default_expansion_cap = 20;

/// Rewrites a cube list as the distinct minterms (full-width cubes) it
/// covers, in ascending tuple order with x1 as the most significant bit.
/// Minterms are pairwise alternative. The output can hold 2^n cubes, so
/// n above max_vars is refused with ErrorKind::cap_exceeded.
DnfCubes expand_to_alternative(const DnfCubes &dnf,
                               Var max_vars = default_expansion_cap);

std::string to_string(Literal lit);
std::string to_string(const Clause &clause);
std::string to_string(const Cube &cube);

std::ostream &operator<<(std::ostream &os, Literal lit);
std::ostream &operator<<(std::ostream &os, const Clause &clause);
std::ostream &operator<<(std::ostream &os, const Cube &cube);

} // namespace ncsat
