#include "flagdom/report.hpp"

#include <sstream>

#include "overloaded.hpp"

namespace flagdom {

using detail::Overloaded;

CheckResult make_check_result(const DomainData& dd) {
  CheckResult r;
  r.spec = dd.spec;
  const RootSet witnesses = connectivity_witnesses(dd);
  r.defect = witnesses.size();
  r.connected = witnesses.empty();
  r.witness_roots.assign(witnesses.begin(), witnesses.end());
  r.prediction = closed_form_prediction(dd.spec);
  if (r.prediction != Prediction::NotCovered) r.agreement = r.connected == (r.prediction == Prediction::True);
  return r;
}

Json to_json(const Root& r) {
  Json a = Json::array();
  for (int c : r.coords()) a.push_back(c);
  return a;
}

Json to_json(const DomainSpec& spec) {
  Json j;
  j["family"] = family_name(family_of(spec));
  std::visit(Overloaded{
                 [&](const CIHermitian& s) {
                   j["n"] = s.n;
                   j["a"] = s.a;
                 },
                 [&](const CIFibered& s) {
                   j["n"] = s.n;
                   j["a"] = s.a;
                   j["m"] = s.m;
                 },
                 [&](const AIIIHermitian& s) {
                   j["p"] = s.p;
                   j["q"] = s.q;
                   j["a"] = s.a;
                 },
                 [&](const AIIIFiberedS& s) {
                   j["p"] = s.p;
                   j["q"] = s.q;
                   j["a"] = s.a;
                   j["keep"] = s.keep.indices();
                 },
                 [&](const AIIIFiberedT& s) {
                   j["p"] = s.p;
                   j["q"] = s.q;
                   j["a"] = s.a;
                   j["keep"] = s.keep.indices();
                 },
             },
             spec);
  return j;
}

namespace {

Json roots_json(const auto& roots) {
  Json a = Json::array();
  for (const Root& r : roots) a.push_back(to_json(r));
  return a;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const CheckResult& result) {
  Json j;
  j["spec"] = to_json(result.spec);
  j["connected"] = result.connected;
  j["defect"] = result.defect;
  j["witness_roots"] = roots_json(result.witness_roots);
  j["prediction"] = to_string(result.prediction);
  return j;
}

Json to_json(const GridReport& report) {
  Json j;
  j["grid"] = report.grid;
  Json params = Json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  j["parameters"] = params;
  j["oracles"] = to_string(report.oracles);
  Json entries = Json::array();
  for (const GridEntry& e : report.entries) {
    Json je;
    je["spec"] = to_json(e.spec);
    je["predicted"] = to_string(e.predicted);
    je["computed"] = e.computed;
    je["defect"] = e.defect;
    je["oracle_results"] = {{"wk_scan", optional_bool(e.oracle_wk)}, {"double_coset", optional_bool(e.oracle_dc)}};
    je["agreement"] = e.agrees;
    je["witness_roots"] = roots_json(e.witnesses);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["summary"] = {
      {"entries", report.summary.entries},
      {"agreements", report.summary.agreements},
      {"disagreements", report.summary.disagreements},
      {"oracle_wk_runs", report.summary.oracle_wk_runs},
      {"oracle_dc_runs", report.summary.oracle_dc_runs},
  };
  return j;
}

std::string dump(const Json& j) { return j.dump(2); }

const std::string& csv_header() {
  static const std::string header = "family,n,p,q,a,m,keep,connected,defect,prediction,agreement";
  return header;
}

std::string csv_row(const CheckResult& result) {
  std::string n, p, q, a, m, keep;
  std::visit(Overloaded{
                 [&](const CIHermitian& s) {
                   n = std::to_string(s.n);
                   a = std::to_string(s.a);
                 },
                 [&](const CIFibered& s) {
                   n = std::to_string(s.n);
                   a = std::to_string(s.a);
                   m = std::to_string(s.m);
                 },
                 [&](const AIIIHermitian& s) {
                   p = std::to_string(s.p);
                   q = std::to_string(s.q);
                   a = std::to_string(s.a);
                 },
                 [&](const AIIIFiberedS& s) {
                   p = std::to_string(s.p);
                   q = std::to_string(s.q);
                   a = std::to_string(s.a);
                   keep = s.keep.to_string();
                 },
                 [&](const AIIIFiberedT& s) {
                   p = std::to_string(s.p);
                   q = std::to_string(s.q);
                   a = std::to_string(s.a);
                   keep = s.keep.to_string();
                 },
             },
             result.spec);
  std::ostringstream os;
  os << family_name(family_of(result.spec)) << ',' << n << ',' << p << ',' << q << ',' << a << ',' << m << ','
     << keep << ',' << (result.connected ? "true" : "false") << ',' << result.defect << ','
     << to_string(result.prediction) << ','
     << (result.agreement ? (*result.agreement ? "true" : "false") : "n/a");
  return os.str();
}

}  // namespace flagdom
