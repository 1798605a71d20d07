#include "factorlab/report.hpp"

#include "factorlab/version.hpp"

namespace factorlab {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Partial:
      return "PARTIAL";
  }
  return "FAIL";
}

CheckStatus combine_status(CheckStatus a, CheckStatus b) {
  if (a == CheckStatus::Fail || b == CheckStatus::Fail) return CheckStatus::Fail;
  if (a == CheckStatus::Partial || b == CheckStatus::Partial) return CheckStatus::Partial;
  return CheckStatus::Pass;
}

nlohmann::ordered_json rational_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = r.num();
  j["den"] = r.den();
  return j;
}

nlohmann::ordered_json set_json(const std::set<std::int64_t>& s) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::int64_t v : s) j.push_back(v);
  return j;
}

nlohmann::ordered_json factorization_json(const Factorization& z) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [atom, mult] : z) {
    nlohmann::ordered_json pair = nlohmann::ordered_json::array();
    pair.push_back(atom);
    pair.push_back(mult);
    j.push_back(std::move(pair));
  }
  return j;
}

nlohmann::ordered_json check_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["status"] = status_name(c.status);
  j["scope"] = c.scope;
  j["summary"] = c.summary;
  j["detail"] = c.detail;
  return j;
}

CheckStatus overall_status(const std::vector<CheckResult>& results) {
  CheckStatus s = CheckStatus::Pass;
  for (const CheckResult& c : results) s = combine_status(s, c.status);
  return s;
}

nlohmann::ordered_json envelope(const nlohmann::ordered_json& spec,
                                const nlohmann::ordered_json& scope,
                                nlohmann::ordered_json results, const std::string& status) {
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["spec"] = spec;
  j["scope"] = scope;
  j["results"] = std::move(results);
  j["status"] = status;
  return j;
}

}  // namespace factorlab
