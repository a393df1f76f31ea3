#pragma once

#include <cstdint>
#include <string>

#include "ncsat/analysis.hpp"
#include "ncsat/counting.hpp"

namespace ncsat {

/// Keys, in order: n, m_declared, m_effective, falsifying, models,
/// satisfiable, path, terms_evaluated, subtrees_pruned. Counts that can
/// reach 2^n are decimal strings.
std::string to_json(const CountReport &report, std::uint64_t m_declared);

std::string to_json(const StructureReport &report);

} // namespace ncsat
