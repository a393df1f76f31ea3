#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ncsat/formula.hpp"

namespace ncsat {

struct DimacsInput {
  CnfFormula formula;         // normalized
  std::uint64_t declared_clauses = 0;
  std::uint64_t read_clauses = 0; // before normalization
  std::vector<std::string> warnings;
};

/// Reads "p cnf <n> <m>" DIMACS. Comment lines start with 'c'; a line
/// holding only '%' ends the input (SATLIB convention). Clauses may span
/// lines. Throws ParseError on a missing or repeated header, a literal
/// above n or a non-integer token. A clause count that disagrees with the
/// header, or a final clause missing its 0, is only a warning.
DimacsInput parse_dimacs(std::istream &in);
DimacsInput parse_dimacs(std::string_view text);

/// Canonical text: header, then one clause per line in canonical order,
/// each terminated by " 0".
std::string write_dimacs(const CnfFormula &formula);

} // namespace ncsat
