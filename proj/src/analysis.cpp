#include "ncsat/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace ncsat {

bool are_alternative(const Cube &a, const Cube &b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->var < j->var) {
      ++i;
    } else if (j->var < i->var) {
      ++j;
    } else {
      if (i->positive != j->positive)
        return true;
      ++i;
      ++j;
    }
  }
  return false;
}

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

StructureReport analyze_structure(const DnfCubes &dnf) {
  const std::size_t m = dnf.cubes.size();
  DisjointSets sets(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!are_alternative(dnf.cubes[i], dnf.cubes[j]))
        sets.unite(i, j);

  // Roots are the smallest member, so visiting cubes in index order opens
  // groups in order of their smallest member.
  StructureReport report;
  report.m = m;
  std::vector<std::size_t> group_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = sets.find(i);
    if (root == i) {
      group_of[i] = report.groups.size();
      report.groups.emplace_back();
    }
    report.groups[group_of[root]].push_back(i);
  }

  report.predicted_terms_upper_bound = 0;
  for (const auto &group : report.groups) {
    const std::size_t size = group.size();
    report.p_max = std::max(report.p_max, size);
    mpz_class terms;
    mpz_ui_pow_ui(terms.get_mpz_t(), 2, size);
    report.predicted_terms_upper_bound += terms - 1;
    if (size >= 2)
      report.nonalternative_components.push_back(size);
  }
  report.all_pairwise_alternative = report.p_max <= 1;
  return report;
}

} // namespace ncsat
