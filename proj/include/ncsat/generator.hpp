#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ncsat/formula.hpp"

namespace ncsat {

enum class GenMode {
  random,      // uniform k-CNF
  alternative, // every pair of negated clauses clashes
  chain,       // chain_p clauses whose cubes never clash with each other
};

std::string_view to_string(GenMode mode);
std::optional<GenMode> parse_gen_mode(std::string_view name);

struct GenSpec {
  Var n = 0;
  std::size_t m = 0;
  Var width = 0;
  GenMode mode = GenMode::random;
  std::size_t chain_p = 0;
  std::uint64_t seed = 0;
};

/// Deterministic seeded instance generator. The result always has exactly
/// m distinct clauses of exactly `width` literals, and the requested regime
/// is checked against analyze_structure; a failed check retries with the
/// next sub-seed. Throws ErrorKind::malformed_input for an inconsistent
/// spec and ErrorKind::generation when 1000 attempts all fail.
CnfFormula generate(const GenSpec &spec);

} // namespace ncsat
