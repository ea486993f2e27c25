#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "flagdom/error.hpp"
#include "flagdom/report.hpp"
#include "flagdom/verify.hpp"
#include "flagdom/weyl.hpp"

namespace flagdom {
namespace {

const VerifyOptions kAuto{.oracles = OracleMode::Auto};

std::size_t count_computed(const GridReport& r) {
  return static_cast<std::size_t>(std::count_if(r.entries.begin(), r.entries.end(), [](const GridEntry& e) { return e.computed; }));
}

TEST(VerifyCI, SmallGrids) {
  const GridReport r2 = verify_theorem_CI(2);
  ASSERT_EQ(r2.entries.size(), 5u);
  EXPECT_EQ(count_computed(r2), 1u);
  for (const GridEntry& e : r2.entries) {
    if (e.computed) EXPECT_EQ(to_string(e.spec), "ci(n=2,a=1)");
  }
  const GridReport r1 = verify_theorem_CI(1);
  ASSERT_EQ(r1.entries.size(), 2u);
  EXPECT_EQ(count_computed(r1), 0u);
  EXPECT_EQ(r1.summary.disagreements, 0u);
}

TEST(VerifyCI, FullGridAgrees) {
  const GridReport r = verify_theorem_CI(12);
  EXPECT_EQ(r.summary.entries, 90u);
  EXPECT_EQ(r.summary.disagreements, 0u);
  for (const GridEntry& e : r.entries) {
    const auto& s = std::get<CIHermitian>(e.spec);
    EXPECT_EQ(e.computed, 2 * s.a == s.n);
  }
}

TEST(VerifyAIII, SmallCases) {
  const GridReport r = verify_theorem_AIII(3);
  for (const GridEntry& e : r.entries) {
    const auto& s = std::get<AIIIHermitian>(e.spec);
    if (s.p == 1 && s.q == 1) EXPECT_FALSE(e.computed);
    if (s.p == 1 && s.q == 2) EXPECT_EQ(e.computed, s.a == 1);
  }
  EXPECT_THROW(verify_theorem_AIII(1), ParameterError);
  EXPECT_THROW(verify_theorem_CI(0), ParameterError);
}

TEST(VerifyAIII, FullGridAgrees) {
  const GridReport r = verify_theorem_AIII(16);
  EXPECT_EQ(r.summary.disagreements, 0u);
  for (const GridEntry& e : r.entries) {
    const auto& s = std::get<AIIIHermitian>(e.spec);
    EXPECT_EQ(e.computed, s.p <= 2 * s.a && 2 * s.a <= s.q);
  }
}

TEST(Grids, CanonicalOrderAndCounts) {
  const auto ci = ci_hermitian_grid(5);
  EXPECT_TRUE(std::is_sorted(ci.begin(), ci.end(), spec_less));
  const auto fib = ci_fibered_grid(4);
  EXPECT_EQ(fib.size(), 1u + 3u + 6u);
  const auto aiii = aiii_hermitian_grid(6);
  std::size_t expected = 0;
  for (int p = 1; p <= 3; ++p)
    for (int q = p; p + q <= 6; ++q) expected += static_cast<std::size_t>(p + 1);
  EXPECT_EQ(aiii.size(), expected);
  const GridReport f = verify_fibered(3, 4);
  std::vector<DomainSpec> specs;
  for (const GridEntry& e : f.entries) specs.push_back(e.spec);
  EXPECT_TRUE(std::is_sorted(specs.begin(), specs.end(), spec_less));
}

TEST(Fibered, SmallExamples) {
  EXPECT_FALSE(evaluate(CIFibered{2, 1, 1}).computed);
  EXPECT_TRUE(evaluate(AIIIFiberedT{2, 2, 1, KeepSet::full(1)}).computed);
  EXPECT_TRUE(evaluate(AIIIFiberedS{2, 3, 1, KeepSet::from_indices({1})}).computed);
}

TEST(Fibered, DisagreementsAreConfinedToTFlags) {
  const GridReport r = verify_fibered(8, 12, kAuto);
  std::size_t t_entries = 0;
  for (const GridEntry& e : r.entries) {
    if (e.oracle_wk) EXPECT_EQ(*e.oracle_wk, e.computed) << to_string(e.spec);
    if (e.oracle_dc) EXPECT_EQ(*e.oracle_dc, e.computed) << to_string(e.spec);
    const Family f = family_of(e.spec);
    if (f == Family::AIIIFiberedT) {
      ++t_entries;
      continue;
    }
    EXPECT_TRUE(e.agrees) << to_string(e.spec);
    if (f == Family::CIFibered) EXPECT_FALSE(e.computed);
    if (f == Family::AIIIFiberedS) EXPECT_TRUE(e.computed);
  }
  EXPECT_GT(t_entries, 0u);
  EXPECT_GT(r.summary.disagreements, 0u);
}

TEST(OracleWK, Examples) {
  EXPECT_TRUE(oracle_wk_scan(build_domain(CIHermitian{2, 1})));
  EXPECT_FALSE(oracle_wk_scan(build_domain(CIHermitian{3, 1})));
  DomainData full = build_domain(CIHermitian{3, 1});
  full.phi = ParabolicSubset::all(3);
  full.partition = partition(full.transported_simples, full.phi);
  EXPECT_TRUE(oracle_wk_scan(full));
  EXPECT_TRUE(oracle_double_coset(full));
}

TEST(OracleDoubleCoset, Examples) {
  EXPECT_TRUE(oracle_double_coset(build_domain(CIHermitian{2, 1})));
  EXPECT_FALSE(oracle_double_coset(build_domain(AIIIHermitian{1, 1, 0})));
  for (const DomainSpec& spec : {DomainSpec{CIHermitian{3, 1}}, DomainSpec{AIIIHermitian{2, 2, 1}},
                                 DomainSpec{AIIIHermitian{1, 1, 1}}}) {
    DomainData dd = build_domain(spec);
    dd.phi = ParabolicSubset::none(dd.transported_simples.rank());
    dd.partition = partition(dd.transported_simples, dd.phi);
    EXPECT_EQ(oracle_double_coset(dd), dd.w0K == longest_element(dd.transported_simples)) << to_string(spec);
  }
}

TEST(OracleDoubleCoset, CapacityError) {
  EXPECT_THROW(oracle_double_coset(build_domain(CIHermitian{4, 2}), 100), CapacityError);
  EXPECT_THROW(oracle_wk_scan(build_domain(CIHermitian{5, 2}), 100), CapacityError);
}

TEST(Oracles, AgreeOnSmallHermitianAndFiberedSpecs) {
  std::vector<DomainSpec> specs = ci_hermitian_grid(6);
  for (const DomainSpec& s : aiii_hermitian_grid(7)) specs.push_back(s);
  for (const DomainSpec& s : ci_fibered_grid(5)) specs.push_back(s);
  for (const DomainSpec& s : aiii_fibered_grid(6)) specs.push_back(s);
  for (const DomainSpec& spec : specs) {
    const DomainData dd = build_domain(spec);
    const bool c = is_generically_one_connected(dd);
    EXPECT_EQ(oracle_wk_scan(dd), c) << to_string(spec);
    if (dd.root_system.rank() <= 5) EXPECT_EQ(oracle_double_coset(dd), c) << to_string(spec);
  }
}

TEST(Evaluate, OracleModes) {
  const GridEntry off = evaluate(CIHermitian{3, 1});
  EXPECT_FALSE(off.oracle_wk.has_value());
  EXPECT_FALSE(off.oracle_dc.has_value());
  const GridEntry on = evaluate(CIHermitian{3, 1}, kAuto);
  EXPECT_EQ(on.oracle_wk, false);
  EXPECT_EQ(on.oracle_dc, false);
  EXPECT_TRUE(on.agrees);
  EXPECT_EQ(on.defect, on.witnesses.size());

  const GridEntry skipped = evaluate(CIHermitian{9, 3}, kAuto);
  EXPECT_FALSE(skipped.oracle_wk.has_value());
  EXPECT_FALSE(skipped.oracle_dc.has_value());
  EXPECT_THROW(evaluate(CIHermitian{9, 3}, {.oracles = OracleMode::Required}), CapacityError);
  EXPECT_NO_THROW(evaluate(CIHermitian{4, 2}, {.oracles = OracleMode::Required}));
  EXPECT_EQ(parse_oracle_mode("required"), OracleMode::Required);
  EXPECT_EQ(parse_oracle_mode("always"), std::nullopt);
}

TEST(Counting, CIIntroClaims) {
  const GridReport r = verify_theorem_CI(12);
  for (int n = 1; n <= 12; ++n) {
    int specs = 0, interior = 0, connected = 0;
    for (const GridEntry& e : r.entries) {
      const auto& s = std::get<CIHermitian>(e.spec);
      if (s.n != n) continue;
      ++specs;
      interior += (0 < s.a && s.a < n);
      connected += e.computed;
    }
    EXPECT_EQ(specs, n + 1);
    EXPECT_EQ(interior, n - 1);
    EXPECT_LE(connected, 1);
  }
}

TEST(Counting, AIIIDensityWhenQExceedsTwiceP) {
  const GridReport r = verify_theorem_AIII(16);
  for (int p = 1; p <= 8; ++p)
    for (int q = 2 * p + 1; p + q <= 16; ++q) {
      int connected = 0;
      for (const GridEntry& e : r.entries) {
        const auto& s = std::get<AIIIHermitian>(e.spec);
        if (s.p == p && s.q == q) connected += e.computed;
      }
      EXPECT_EQ(connected, p + 1 - (p + 1) / 2) << p << "," << q;
    }
}

TEST(Determinism, IdenticalGridsSerializeIdentically) {
  EXPECT_EQ(dump(to_json(verify_theorem_AIII(8, kAuto))), dump(to_json(verify_theorem_AIII(8, kAuto))));
  EXPECT_EQ(dump(to_json(verify_fibered(4, 6))), dump(to_json(verify_fibered(4, 6))));
}

}  // namespace
}  // namespace flagdom
