#include <gtest/gtest.h>

#include "flagdom/report.hpp"
#include "flagdom/verify.hpp"

namespace flagdom {
namespace {

TEST(CheckResultJson, FieldsAndValues) {
  const CheckResult r = make_check_result(build_domain(CIFibered{3, 1, 1}));
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"spec", "connected", "defect", "witness_roots", "prediction"}));
  EXPECT_EQ(j["connected"], false);
  EXPECT_EQ(j["prediction"], "false");
  EXPECT_EQ(j["spec"]["family"], "ci-fibered");
  EXPECT_EQ(j["spec"]["m"], 1);
  EXPECT_EQ(j["defect"].get<std::size_t>(), j["witness_roots"].size());
  bool found = false;
  for (const auto& root : j["witness_roots"]) found = found || root == Json::array({1, 0, 1});
  EXPECT_TRUE(found);
}

TEST(CheckResult, ConnectedIffNoWitnesses) {
  for (const DomainSpec& spec : {DomainSpec{CIHermitian{4, 2}}, DomainSpec{CIHermitian{4, 1}},
                                 DomainSpec{AIIIFiberedS{2, 3, 1, KeepSet::full(1)}}}) {
    const CheckResult r = make_check_result(build_domain(spec));
    EXPECT_EQ(r.connected, r.defect == 0);
    EXPECT_EQ(r.connected, r.witness_roots.empty());
    EXPECT_EQ(r.witness_roots.size(), r.defect);
  }
  const CheckResult nc = make_check_result(build_domain(AIIIFiberedS{3, 3, 1, KeepSet::full(1)}));
  EXPECT_EQ(nc.prediction, Prediction::NotCovered);
  EXPECT_FALSE(nc.agreement.has_value());
}

TEST(SpecJson, Keep) {
  const Json j = to_json(DomainSpec{AIIIFiberedT{2, 3, 1, KeepSet::from_indices({2})}});
  EXPECT_EQ(j.dump(), R"({"family":"aiii-fibered-t","p":2,"q":3,"a":1,"keep":[2]})");
  EXPECT_EQ(to_json(Root{0, -2}).dump(), "[0,-2]");
}

TEST(GridJson, RoundTripIsByteIdentical) {
  const std::string text = dump(to_json(verify_theorem_CI(4, {.oracles = OracleMode::Auto})));
  EXPECT_EQ(dump(Json::parse(text)), text);
  const Json j = Json::parse(text);
  EXPECT_FALSE(j.contains("elapsed"));
  EXPECT_EQ(j["summary"]["entries"], 14);
  EXPECT_EQ(j["entries"][0]["oracle_results"]["wk_scan"], false);
  const Json off = to_json(verify_theorem_CI(1));
  EXPECT_TRUE(off["entries"][0]["oracle_results"]["double_coset"].is_null());
  EXPECT_EQ(off["oracles"], "off");
}

TEST(Csv, HeaderAndRows) {
  EXPECT_EQ(csv_header(), "family,n,p,q,a,m,keep,connected,defect,prediction,agreement");
  EXPECT_EQ(csv_row(make_check_result(build_domain(CIHermitian{2, 1}))), "ci,2,,,1,,,true,0,true,true");
  EXPECT_EQ(csv_row(make_check_result(build_domain(AIIIFiberedS{3, 3, 1, KeepSet::from_indices({1, 2})}))).substr(0, 26),
            "aiii-fibered-s,,3,3,1,,1;2");
  const std::string nc = csv_row(make_check_result(build_domain(AIIIFiberedS{3, 3, 1, KeepSet::full(1)})));
  EXPECT_EQ(nc.substr(nc.size() - 15), "not_covered,n/a");
}

}  // namespace
}  // namespace flagdom
