#include "ncsat/counting.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ncsat/analysis.hpp"
#include "ncsat/error.hpp"

namespace ncsat {

std::string_view to_string(CountPath path) {
  switch (path) {
  case CountPath::closed_form:
    return "closed_form";
  case CountPath::inclusion_exclusion:
    return "inclusion_exclusion";
  }
  return "unknown";
}

mpz_class pow2(Var exponent) {
  mpz_class out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), exponent);
  return out;
}

mpz_class cube_tuple_count(const Cube &cube, Var n) {
  if (cube.width() > n)
    throw Error(ErrorKind::contract, "cube wider than n");
  return pow2(Var(n - cube.width()));
}

std::optional<MergedCube> merge_cubes(std::span<const Cube> subset, Var n) {
  if (subset.empty())
    throw Error(ErrorKind::contract, "merge_cubes needs a nonempty subset");
  std::vector<Literal> lits;
  for (const Cube &cube : subset)
    lits.insert(lits.end(), cube.begin(), cube.end());
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i - 1].var == lits[i].var)
      return std::nullopt;
  if (!lits.empty() && lits.back().var > n)
    throw Error(ErrorKind::contract, "cube variable above n");
  const Var free_count = Var(n - lits.size());
  return MergedCube{Cube::make(std::move(lits)), free_count};
}

namespace {

struct LocalLiteral {
  std::uint32_t slot;
  std::int8_t polarity; // +1 or -1
};

// Cubes of one inclusion-exclusion group, variables renumbered densely.
struct Group {
  std::vector<std::vector<LocalLiteral>> cubes;
  std::vector<std::size_t> original;
  std::size_t slots = 0;
};

Group make_group(const DnfCubes &dnf, std::vector<std::size_t> members) {
  // Widest cubes first: they fix the most variables and clash earliest.
  std::stable_sort(members.begin(), members.end(),
                   [&](std::size_t a, std::size_t b) {
                     return dnf.cubes[a].width() > dnf.cubes[b].width();
                   });
  std::vector<Var> vars;
  for (std::size_t i : members)
    for (Literal lit : dnf.cubes[i])
      vars.push_back(lit.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  Group group;
  group.slots = vars.size();
  group.original = members;
  for (std::size_t i : members) {
    auto &local = group.cubes.emplace_back();
    for (Literal lit : dnf.cubes[i]) {
      auto slot = std::lower_bound(vars.begin(), vars.end(), lit.var) -
                  vars.begin();
      local.push_back({std::uint32_t(slot),
                       std::int8_t(lit.positive ? 1 : -1)});
    }
  }
  return group;
}

// Per-worker partial sum: R = sum_t coefficient[t] * 2^t.
struct Tally {
  std::vector<std::int64_t> coefficient;
  std::uint64_t terms = 0;
  std::uint64_t pruned = 0;
};

struct BudgetExhausted {};

struct Shared {
  std::uint64_t budget;
  std::atomic<std::uint64_t> terms{0};
  std::atomic<bool> aborted{false};
};

class Enumerator {
public:
  Enumerator(const Group &group, Var n, const CountOptions &options,
             Shared &shared, Tally &tally)
      : group_(group), n_(n), options_(options), shared_(shared),
        tally_(tally), state_(group.slots, 0) {}

  // All subsets whose first member (in group order) is `first`.
  void run_branch(std::size_t first) {
    const std::size_t mark = undo_.size();
    push(first);
    record(+1);
    descend(first + 1, -1, false);
    rollback(mark);
    subset_.clear();
  }

private:
  // Returns true on clash. State changes stay on the undo stack either way.
  bool push(std::size_t index) {
    bool clash = false;
    for (LocalLiteral lit : group_.cubes[index]) {
      std::int8_t &slot = state_[lit.slot];
      if (slot == 0) {
        slot = lit.polarity;
        undo_.push_back(lit.slot);
      } else if (slot != lit.polarity) {
        clash = true;
      }
    }
    if (options_.on_term)
      subset_.push_back(group_.original[index]);
    return clash;
  }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      state_[undo_.back()] = 0;
      undo_.pop_back();
    }
    if (options_.on_term && !subset_.empty())
      subset_.pop_back();
  }

  void descend(std::size_t next, int sign, bool clashed) {
    for (std::size_t i = next; i < group_.cubes.size(); ++i) {
      const std::size_t mark = undo_.size();
      const bool clash = push(i) || clashed;
      if (clash && options_.prune_clashes) {
        ++tally_.pruned;
        rollback(mark);
        continue;
      }
      if (!clash)
        record(sign);
      descend(i + 1, -sign, clash);
      rollback(mark);
    }
  }

  void record(int sign) {
    if (shared_.aborted.load(std::memory_order_relaxed))
      throw BudgetExhausted{};
    if (shared_.terms.fetch_add(1, std::memory_order_relaxed) >=
        shared_.budget) {
      shared_.aborted = true;
      throw BudgetExhausted{};
    }
    const Var free_count = Var(n_ - undo_.size());
    tally_.coefficient[free_count] += sign;
    ++tally_.terms;
    if (options_.on_term) {
      SignedTerm term{sign, free_count, subset_};
      std::sort(term.subset.begin(), term.subset.end());
      options_.on_term(term);
    }
  }

  const Group &group_;
  Var n_;
  const CountOptions &options_;
  Shared &shared_;
  Tally &tally_;
  std::vector<std::int8_t> state_;
  std::vector<std::uint32_t> undo_;
  std::vector<std::size_t> subset_;
};

} // namespace

CountReport count_union(const DnfCubes &dnf, const CountOptions &options) {
  const StructureReport structure = analyze_structure(dnf);

  std::vector<Group> groups;
  if (options.split_components) {
    for (const auto &members : structure.groups)
      groups.push_back(make_group(dnf, members));
  } else if (!dnf.cubes.empty()) {
    std::vector<std::size_t> all(dnf.cubes.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    groups.push_back(make_group(dnf, std::move(all)));
  }

  struct Task {
    std::size_t group;
    std::size_t first;
  };
  std::vector<Task> tasks;
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t first = 0; first < groups[g].cubes.size(); ++first)
      tasks.push_back({g, first});

  std::size_t workers = options.on_term ? 1 : std::max(1u, options.threads);
  workers = std::max<std::size_t>(1, std::min(workers, tasks.size()));

  Shared shared{options.term_budget};
  std::vector<Tally> tallies(workers);
  for (Tally &tally : tallies)
    tally.coefficient.assign(std::size_t(dnf.n) + 1, 0);
  std::atomic<std::size_t> next_task{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&](Tally &tally) {
    try {
      for (std::size_t t = next_task++; t < tasks.size(); t = next_task++) {
        Enumerator enumerator(groups[tasks[t].group], dnf.n, options, shared,
                              tally);
        enumerator.run_branch(tasks[t].first);
      }
    } catch (const BudgetExhausted &) {
      shared.aborted = true;
    } catch (...) {
      shared.aborted = true;
      std::lock_guard lock(failure_mutex);
      if (!failure)
        failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work(tallies[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work, std::ref(tallies[w]));
    for (auto &thread : pool)
      thread.join();
  }
  if (failure)
    std::rethrow_exception(failure);
  if (shared.aborted)
    throw Error(ErrorKind::term_budget,
                "exponential blowup: inclusion-exclusion needs more than " +
                    std::to_string(options.term_budget) + " terms");

  CountReport report;
  report.n = dnf.n;
  report.m = dnf.cubes.size();
  report.path = structure.all_pairwise_alternative
                    ? CountPath::closed_form
                    : CountPath::inclusion_exclusion;
  report.falsifying = 0;
  for (std::size_t t = 0; t <= dnf.n; ++t) {
    std::int64_t sum = 0;
    for (const Tally &tally : tallies)
      sum += tally.coefficient[t];
    if (sum == 0)
      continue;
    mpz_class term = sum > 0 ? mpz_class(std::to_string(sum))
                             : -mpz_class(std::to_string(-sum));
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), Var(t));
    report.falsifying += term;
  }
  for (const Tally &tally : tallies) {
    report.terms_evaluated += tally.terms;
    report.subtrees_pruned += tally.pruned;
  }

  const mpz_class total = pow2(dnf.n);
  if (report.falsifying < 0 || report.falsifying > total)
    throw std::logic_error("inclusion-exclusion left R outside [0, 2^n]");
  report.models = total - report.falsifying;
  report.satisfiable = report.falsifying < total;
  return report;
}

CountReport count_falsifying(const CnfFormula &formula,
                             const CountOptions &options) {
  return count_union(negate_cnf(formula), options);
}

bool decide(const CnfFormula &formula, const CountOptions &options) {
  return count_falsifying(formula, options).satisfiable;
}

} // namespace ncsat
