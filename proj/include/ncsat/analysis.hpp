#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "ncsat/formula.hpp"

namespace ncsat {

/// Two cubes are alternative when some variable occurs in both with
/// opposite polarity. Alternative cubes cover disjoint tuple sets.
bool are_alternative(const Cube &a, const Cube &b);

struct StructureReport {
  std::size_t m = 0;
  bool all_pairwise_alternative = true;
  /// Sizes of the connected components (size >= 2) of the graph joining
  /// non-alternative cube pairs, in order of their smallest cube index.
  std::vector<std::size_t> nonalternative_components;
  std::size_t p_max = 0;
  /// Sum over components of 2^size - 1, plus one per isolated cube: the
  /// number of inclusion-exclusion terms when nothing clashes.
  mpz_class predicted_terms_upper_bound;

  /// Every component including singletons, as ascending cube indices,
  /// ordered by smallest member.
  std::vector<std::vector<std::size_t>> groups;
};

StructureReport analyze_structure(const DnfCubes &dnf);

} // namespace ncsat
