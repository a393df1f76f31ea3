#include "ncsat/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ncsat/error.hpp"

namespace ncsat {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <class Int>
bool to_int(std::string_view token, Int &out) {
  const char *first = token.data();
  const char *last = first + token.size();
  if (first != last && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

} // namespace

DimacsInput parse_dimacs(std::istream &in) {
  DimacsInput result;
  bool have_header = false;
  Var n = 0;
  std::vector<std::vector<Literal>> clauses;
  std::vector<Literal> current;
  bool open_clause = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text[0] == 'c')
      continue;
    if (text == "%")
      break;
    if (text[0] == 'p') {
      if (have_header)
        throw ParseError(line_no, "duplicate problem line");
      const auto tokens = split(text);
      std::uint64_t vars = 0;
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf" ||
          !to_int(tokens[2], vars) ||
          !to_int(tokens[3], result.declared_clauses))
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      if (vars > UINT32_MAX)
        throw ParseError(line_no, "variable count too large");
      n = Var(vars);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError(line_no, "clause before the 'p cnf' problem line");
    for (std::string_view token : split(text)) {
      std::int64_t value = 0;
      if (!to_int(token, value))
        throw ParseError(line_no,
                         "expected an integer, got '" + std::string(token) +
                             "'");
      if (value == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        open_clause = false;
        continue;
      }
      const std::uint64_t var =
          value < 0 ? std::uint64_t(0) - std::uint64_t(value)
                    : std::uint64_t(value);
      if (var > n)
        throw ParseError(line_no, "literal " + std::string(token) +
                                      " exceeds declared variable count " +
                                      std::to_string(n));
      current.push_back({Var(var), value > 0});
      open_clause = true;
    }
  }
  if (!have_header)
    throw ParseError(line_no, "missing 'p cnf' problem line");
  if (open_clause) {
    result.warnings.push_back("last clause not terminated by 0");
    clauses.push_back(std::move(current));
  }

  result.read_clauses = clauses.size();
  if (result.read_clauses != result.declared_clauses)
    result.warnings.push_back(
        "header declares " + std::to_string(result.declared_clauses) +
        " clauses, found " + std::to_string(result.read_clauses));
  result.formula = CnfFormula::from_literal_lists(n, clauses);
  return result;
}

DimacsInput parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string write_dimacs(const CnfFormula &formula) {
  std::string out = "p cnf " + std::to_string(formula.num_vars()) + " " +
                    std::to_string(formula.num_clauses()) + "\n";
  for (const Clause &clause : formula.clauses()) {
    for (Literal lit : clause) {
      out += std::to_string(lit.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

} // namespace ncsat
