#include "ncsat/report_json.hpp"

#include <json.hpp>

namespace ncsat {

std::string to_json(const CountReport &report, std::uint64_t m_declared) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["m_declared"] = m_declared;
  j["m_effective"] = report.m;
  j["falsifying"] = report.falsifying.get_str();
  j["models"] = report.models.get_str();
  j["satisfiable"] = report.satisfiable;
  j["path"] = std::string(to_string(report.path));
  j["terms_evaluated"] = report.terms_evaluated;
  j["subtrees_pruned"] = report.subtrees_pruned;
  return j.dump();
}

std::string to_json(const StructureReport &report) {
  nlohmann::ordered_json j;
  j["m"] = report.m;
  j["all_pairwise_alternative"] = report.all_pairwise_alternative;
  j["nonalternative_components"] = report.nonalternative_components;
  j["p_max"] = report.p_max;
  j["predicted_terms_upper_bound"] =
      report.predicted_terms_upper_bound.get_str();
  return j.dump();
}

} // namespace ncsat
