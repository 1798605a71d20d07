#pragma once
// Result envelopes and JSON shaping shared by the command line tool and the
// check catalog. All JSON uses ordered_json so reruns serialize
// byte-identically.

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorlab/engine.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

enum class CheckStatus { Pass, Fail, Partial };

const char* status_name(CheckStatus s);
// Fail dominates Partial dominates Pass
CheckStatus combine_status(CheckStatus a, CheckStatus b);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string scope;    // what was enumerated, spelled out
  std::string summary;  // one human-readable line, witnesses included
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
};

nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json set_json(const std::set<std::int64_t>& s);
nlohmann::ordered_json factorization_json(const Factorization& z);
nlohmann::ordered_json check_json(const CheckResult& c);

CheckStatus overall_status(const std::vector<CheckResult>& results);

// {"tool_version", "spec", "scope", "results", "status"}
nlohmann::ordered_json envelope(const nlohmann::ordered_json& spec,
                                const nlohmann::ordered_json& scope,
                                nlohmann::ordered_json results, const std::string& status);

}  // namespace factorlab
