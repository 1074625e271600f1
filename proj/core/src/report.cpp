#include <json.hpp>

#include "engelkit/verify.hpp"

namespace engelkit {

// stable key order and integer-only values keep the reports byte-identical
// across runs and platforms
std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["tool_version"] = report.tool_version;
  j["seed"] = report.seed;
  j["corpus"] = report.corpus_labels;
  j["suites"] = nlohmann::ordered_json::array();
  for (const SuiteResult& s : report.suites) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["cases"] = nlohmann::ordered_json::array();
    for (const CaseResult& c : s.cases) {
      nlohmann::ordered_json jc;
      jc["group"] = c.group;
      jc["status"] = std::string(status_name(c.status));
      jc["detail"] = c.detail;
      js["cases"].push_back(std::move(jc));
    }
    js["passed"] = s.passed();
    js["failed"] = s.failed();
    js["skipped"] = s.skipped();
    j["suites"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<BoundTableRow>& rows) {
  std::string out = "group,order,m,gamma_inf,fitting_index,quotient_exponent,"
                    "fitting_height,nilpotent\n";
  for (const BoundTableRow& r : rows) {
    out += r.group;
    out += ',' + std::to_string(r.order);
    out += ',' + std::to_string(r.m);
    out += ',' + std::to_string(r.gamma_inf);
    out += ',' + std::to_string(r.fitting_index);
    out += ',' + std::to_string(r.quotient_exponent);
    out += ',';
    out += r.fitting_height ? std::to_string(*r.fitting_height) : "NONE";
    out += ',';
    out += r.nilpotent ? "true" : "false";
    out += '\n';
  }
  return out;
}

} // namespace engelkit
