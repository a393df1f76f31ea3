#pragma once

// Counting the tuples that falsify at least one clause.
//
// The CNF is negated into cubes; R is the size of the union of the cubes'
// tuple sets. Cubes that are pairwise alternative are disjoint and R is a
// plain sum of 2^(n - width). Otherwise R comes from inclusion-exclusion
// over subsets of cubes, run per connected component of the
// non-alternative graph: any subset that spans two components contains a
// contrary pair, covers nothing, and contributes zero. Inside a component
// the subsets are enumerated depth first and a subtree is cut as soon as
// the merged cube clashes.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ncsat/formula.hpp"

namespace ncsat {

enum class CountPath { closed_form, inclusion_exclusion };

std::string_view to_string(CountPath path);

/// Conjunction of a set of cubes, with the number of variables it leaves
/// free.
struct MergedCube {
  Cube cube;
  Var free_count = 0;
};

/// nullopt when the cubes clash (some variable appears with both
/// polarities). Throws ErrorKind::contract on an empty subset.
std::optional<MergedCube> merge_cubes(std::span<const Cube> subset, Var n);

/// 2^(n - width): the tuples covered by one cube.
mpz_class cube_tuple_count(const Cube &cube, Var n);

mpz_class pow2(Var exponent);

/// One non-zero inclusion-exclusion summand: sign * 2^free_count.
struct SignedTerm {
  int sign = 1;
  Var free_count = 0;
  /// Cube indices (into the negated formula) forming the subset.
  std::vector<std::size_t> subset;
};

inline constexpr std::uint64_t default_term_budget = std::uint64_t{1} << 26;
inline constexpr std::uint64_t unlimited_term_budget = UINT64_MAX;

struct CountOptions {
  /// Abort with ErrorKind::term_budget once more terms than this would be
  /// evaluated.
  std::uint64_t term_budget = default_term_budget;
  /// Off: clashing subsets are still descended into and contribute zero
  /// explicitly. Same result, exponentially slower.
  bool prune_clashes = true;
  /// Off: one inclusion-exclusion over all cubes instead of one per
  /// component.
  bool split_components = true;
  unsigned threads = 1;
  /// Called for every non-zero term. Setting it forces a single thread.
  std::function<void(const SignedTerm &)> on_term;
};

struct CountReport {
  Var n = 0;
  std::size_t m = 0;
  mpz_class falsifying;
  mpz_class models;
  bool satisfiable = true;
  std::uint64_t terms_evaluated = 0;
  std::uint64_t subtrees_pruned = 0;
  CountPath path = CountPath::closed_form;
};

/// Size of the union of the cubes' tuple sets, reported as falsifying.
CountReport count_union(const DnfCubes &dnf, const CountOptions &options = {});

CountReport count_falsifying(const CnfFormula &formula,
                             const CountOptions &options = {});

/// YES (true) iff fewer than 2^n tuples falsify some clause. No
/// assignment is ever built.
bool decide(const CnfFormula &formula, const CountOptions &options = {});

} // namespace ncsat
