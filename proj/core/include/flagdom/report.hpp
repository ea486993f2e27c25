#pragma once

// JSON and CSV renderings shared by the verifier and the command-line tool.
// Roots are serialized as integer coordinate arrays in the e-basis.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagdom/domain.hpp"
#include "flagdom/verify.hpp"

namespace flagdom {

using Json = nlohmann::ordered_json;

/// Result of checking a single spec.
struct CheckResult {
  DomainSpec spec;
  bool connected = false;
  std::size_t defect = 0;
  std::vector<Root> witness_roots;  // empty iff connected
  Prediction prediction = Prediction::NotCovered;
  std::optional<bool> agreement;    // nullopt when the prediction is not covered
};

CheckResult make_check_result(const DomainData& dd);

Json to_json(const Root& r);
Json to_json(const DomainSpec& spec);
Json to_json(const CheckResult& result);
Json to_json(const GridReport& report);

/// Two-space indented dump; stable under parse and re-dump.
std::string dump(const Json& j);

/// family,n,p,q,a,m,keep,connected,defect,prediction,agreement
const std::string& csv_header();
std::string csv_row(const CheckResult& result);

}  // namespace flagdom
