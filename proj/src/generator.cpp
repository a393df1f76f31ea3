#include "ncsat/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ncsat/analysis.hpp"
#include "ncsat/error.hpp"

namespace ncsat {

std::string_view to_string(GenMode mode) {
  switch (mode) {
  case GenMode::random:
    return "random";
  case GenMode::alternative:
    return "alternative";
  case GenMode::chain:
    return "chain";
  }
  return "unknown";
}

std::optional<GenMode> parse_gen_mode(std::string_view name) {
  for (GenMode mode : {GenMode::random, GenMode::alternative, GenMode::chain})
    if (to_string(mode) == name)
      return mode;
  return std::nullopt;
}

namespace {

constexpr int max_attempts = 1000;
constexpr int max_redraws = 100;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::uniform_int_distribution is implementation defined; this is not, so
// instances are byte-identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  // k distinct values from [0, n), Floyd's algorithm.
  std::vector<std::uint64_t> sample(std::uint64_t n, std::uint64_t k) {
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t j = n - k; j < n; ++j) {
      const std::uint64_t t = below(j + 1);
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
        chosen.push_back(t);
      else
        chosen.push_back(j);
    }
    return chosen;
  }

private:
  std::mt19937_64 engine_;
};

using LiteralList = std::vector<Literal>;

LiteralList random_clause(Rng &rng, Var n, Var width) {
  LiteralList lits;
  for (std::uint64_t v : rng.sample(n, width))
    lits.push_back({Var(v + 1), rng.coin()});
  std::sort(lits.begin(), lits.end());
  return lits;
}

// Adds clauses drawn by `draw` until `count` distinct ones exist.
template <class Draw>
bool fill_distinct(std::vector<LiteralList> &clauses, std::size_t count,
                   std::set<LiteralList> &seen, Draw draw) {
  while (clauses.size() < count) {
    int redraws = 0;
    LiteralList clause = draw();
    while (!seen.insert(clause).second) {
      if (++redraws > max_redraws)
        return false;
      clause = draw();
    }
    clauses.push_back(std::move(clause));
  }
  return true;
}

std::vector<LiteralList> draw_random(Rng &rng, const GenSpec &spec) {
  std::vector<LiteralList> clauses;
  std::set<LiteralList> seen;
  if (!fill_distinct(clauses, spec.m, seen,
                     [&] { return random_clause(rng, spec.n, spec.width); }))
    return {};
  return clauses;
}

Var address_bits(std::size_t m) {
  Var bits = 0;
  while ((std::size_t{1} << bits) < m)
    ++bits;
  return bits;
}

// Every clause carries a distinct polarity pattern on the same `bits`
// address variables, so any two negated clauses clash on one of them.
std::vector<LiteralList> draw_alternative(Rng &rng, const GenSpec &spec) {
  const Var bits = address_bits(spec.m);
  std::vector<Var> vars(spec.n);
  std::iota(vars.begin(), vars.end(), Var{1});
  for (Var i = 0; i < bits; ++i)
    std::swap(vars[i], vars[i + rng.below(spec.n - i)]);
  const std::vector<Var> address(vars.begin(), vars.begin() + bits);
  const std::vector<Var> rest(vars.begin() + bits, vars.end());

  std::vector<std::uint64_t> codes(std::size_t{1} << bits);
  std::iota(codes.begin(), codes.end(), std::uint64_t{0});
  for (std::size_t i = codes.size(); i > 1; --i)
    std::swap(codes[i - 1], codes[rng.below(i)]);

  std::vector<LiteralList> clauses;
  for (std::size_t c = 0; c < spec.m; ++c) {
    LiteralList lits;
    for (Var b = 0; b < bits; ++b)
      lits.push_back({address[b], ((codes[c] >> b) & 1) != 0});
    for (std::uint64_t i : rng.sample(rest.size(), spec.width - bits))
      lits.push_back({rest[i], rng.coin()});
    std::sort(lits.begin(), lits.end());
    clauses.push_back(std::move(lits));
  }
  return clauses;
}

// Chain clauses take each variable with one fixed polarity, so their cubes
// agree everywhere they overlap.
std::vector<LiteralList> draw_chain(Rng &rng, const GenSpec &spec) {
  std::vector<bool> polarity(std::size_t(spec.n) + 1);
  for (Var v = 1; v <= spec.n; ++v)
    polarity[v] = rng.coin();

  std::vector<LiteralList> clauses;
  std::set<LiteralList> seen;
  auto chain_clause = [&] {
    LiteralList lits;
    for (std::uint64_t v : rng.sample(spec.n, spec.width))
      lits.push_back({Var(v + 1), polarity[v + 1]});
    std::sort(lits.begin(), lits.end());
    return lits;
  };
  if (!fill_distinct(clauses, spec.chain_p, seen, chain_clause) ||
      !fill_distinct(clauses, spec.m, seen,
                     [&] { return random_clause(rng, spec.n, spec.width); }))
    return {};
  return clauses;
}

void check_spec(const GenSpec &spec) {
  auto fail = [](const std::string &what) {
    throw Error(ErrorKind::malformed_input, "generator: " + what);
  };
  if (spec.width > spec.n)
    fail("width " + std::to_string(spec.width) + " exceeds n = " +
         std::to_string(spec.n));
  if (spec.m > 0 && spec.width == 0)
    fail("width must be at least 1");
  if (spec.chain_p > spec.m)
    fail("chain-p exceeds the clause count");
  if (spec.mode == GenMode::alternative && spec.m > 1 &&
      (spec.width >= 63 || (std::uint64_t{1} << spec.width) < spec.m))
    fail("alternative mode needs 2^width >= m");
}

bool regime_holds(const CnfFormula &formula, const GenSpec &spec) {
  if (formula.num_clauses() != spec.m)
    return false;
  const StructureReport report = analyze_structure(negate_cnf(formula));
  switch (spec.mode) {
  case GenMode::random:
    return true;
  case GenMode::alternative:
    return report.all_pairwise_alternative;
  case GenMode::chain:
    return report.p_max >= spec.chain_p;
  }
  return false;
}

} // namespace

CnfFormula generate(const GenSpec &spec) {
  check_spec(spec);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(splitmix64(spec.seed ^ splitmix64(std::uint64_t(attempt))));
    std::vector<LiteralList> clauses;
    switch (spec.mode) {
    case GenMode::random:
      clauses = draw_random(rng, spec);
      break;
    case GenMode::alternative:
      clauses = draw_alternative(rng, spec);
      break;
    case GenMode::chain:
      clauses = draw_chain(rng, spec);
      break;
    }
    if (clauses.size() != spec.m)
      continue;
    CnfFormula formula = CnfFormula::from_literal_lists(spec.n, clauses);
    if (regime_holds(formula, spec))
      return formula;
  }
  throw Error(ErrorKind::generation,
              "could not generate " + std::to_string(spec.m) +
                  " distinct " + std::string(to_string(spec.mode)) +
                  " clauses of width " + std::to_string(spec.width) +
                  " over " + std::to_string(spec.n) + " variables in " +
                  std::to_string(max_attempts) + " attempts");
}

} // namespace ncsat
