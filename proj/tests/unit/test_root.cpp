#include <gtest/gtest.h>

#include <algorithm>

#include "flagdom/error.hpp"
#include "flagdom/root_system.hpp"
#include "support/oracles.hpp"

namespace flagdom {
namespace {

RootSet as_set(const RootSystem& rs) { return RootSet(rs.roots().begin(), rs.roots().end()); }

TEST(RootSystem, TypeCRankTwoHasEightRoots) {
  const RootSystem rs = RootSystem::type_c(2);
  EXPECT_EQ(rs.size(), 8u);
  EXPECT_EQ(as_set(rs), oracle::type_c_roots(2));
  const RootSet expected{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}};
  EXPECT_EQ(as_set(rs), expected);
}

TEST(RootSystem, SmallestTypeA) {
  const RootSystem rs = RootSystem::type_a(1, 1);
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs.roots()[0], (Root{-1, 1}));
  EXPECT_EQ(rs.roots()[1], (Root{1, -1}));
}

TEST(RootSystem, TypeATwoThreeHasTwentyRoots) {
  const RootSystem rs = RootSystem::type_a(2, 3);
  EXPECT_EQ(rs.size(), 20u);
  EXPECT_EQ(as_set(rs), oracle::type_a_roots(5));
}

TEST(RootSystem, CardinalityAndBruteForceAgreement) {
  for (int n = 1; n <= 8; ++n) {
    const RootSystem rs = RootSystem::type_c(n);
    EXPECT_EQ(rs.size(), static_cast<std::size_t>(2 * n * n));
    EXPECT_EQ(as_set(rs), oracle::type_c_roots(n)) << "n=" << n;
  }
  for (int p = 1; p <= 4; ++p) {
    for (int q = p; q <= 5; ++q) {
      const RootSystem rs = RootSystem::type_a(p, q);
      const int n = p + q;
      EXPECT_EQ(rs.size(), static_cast<std::size_t>(n * (n - 1)));
      EXPECT_EQ(as_set(rs), oracle::type_a_roots(n));
    }
  }
}

TEST(RootSystem, OrderIsLexicographicAndClosedUnderNegation) {
  const RootSystem rs = RootSystem::type_c(4);
  EXPECT_TRUE(std::is_sorted(rs.roots().begin(), rs.roots().end()));
  for (const Root& r : rs.roots()) EXPECT_TRUE(rs.contains(-r));
}

TEST(RootSystem, RejectsInvalidSizes) {
  EXPECT_THROW(RootSystem::type_c(0), ParameterError);
  EXPECT_THROW(RootSystem::type_c(-3), ParameterError);
  EXPECT_THROW(RootSystem::type_a(0, 2), ParameterError);
  EXPECT_THROW(RootSystem::type_a(3, 2), ParameterError);
  EXPECT_THROW(build_root_system(RootKind::TypeA, {.p = 2, .q = 1}), ParameterError);
  EXPECT_NO_THROW(build_root_system(RootKind::TypeC, {.n = 3}));
}

TEST(Root, Formatting) {
  EXPECT_EQ((Root{1, 0, -1}).to_string(), "e1-e3");
  EXPECT_EQ((Root{0, 2}).to_string(), "2e2");
  EXPECT_EQ((Root{-1, -1}).to_string(), "-e1-e2");
  EXPECT_EQ((Root{0, 0}).to_string(), "0");
}

TEST(SimpleSystem, StandardTypeC) {
  const SimpleSystem ss = default_simple_system(RootSystem::type_c(2));
  ASSERT_EQ(ss.rank(), 2);
  EXPECT_EQ(ss.simple(1), (Root{1, -1}));
  EXPECT_EQ(ss.simple(2), (Root{0, 2}));
  EXPECT_EQ(ss.noncompact_index(), 2);
}

TEST(SimpleSystem, StandardTypeA) {
  const SimpleSystem ss = default_simple_system(RootSystem::type_a(1, 2));
  ASSERT_EQ(ss.rank(), 2);
  EXPECT_EQ(ss.simple(1), (Root{1, -1, 0}));
  EXPECT_EQ(ss.simple(2), (Root{0, 1, -1}));
  EXPECT_EQ(ss.noncompact_index(), 1);
}

TEST(SimpleSystem, RankOne) {
  const SimpleSystem ss = default_simple_system(RootSystem::type_c(1));
  ASSERT_EQ(ss.rank(), 1);
  EXPECT_EQ(ss.simple(1), (Root{2}));
  EXPECT_EQ(ss.noncompact_index(), 1);
}

TEST(SimpleCoefficients, Examples) {
  const SimpleSystem c2 = default_simple_system(RootSystem::type_c(2));
  // 2e_1 = 2(e_1-e_2) + 2e_2
  EXPECT_EQ(simple_coefficients(Root{2, 0}, c2), (std::vector<int>{2, 1}));
  EXPECT_EQ(oracle::all_expansions(Root{2, 0}, {c2.simple(1), c2.simple(2)}),
            (std::vector<std::vector<int>>{{2, 1}}));
  EXPECT_EQ(simple_coefficients(c2.simple(1), c2), (std::vector<int>{1, 0}));

  const SimpleSystem a2 = default_simple_system(RootSystem::type_a(1, 2));
  EXPECT_EQ(simple_coefficients(Root{1, 0, -1}, a2), (std::vector<int>{1, 1}));
}

TEST(SimpleCoefficients, MatchExhaustiveSearchAtSmallRank) {
  auto check = [](const RootSystem& rs) {
    const SimpleSystem ss = default_simple_system(rs);
    const std::vector<Root> simples(ss.simples().begin(), ss.simples().end());
    for (const Root& r : rs.roots()) {
      const auto found = oracle::all_expansions(r, simples);
      ASSERT_EQ(found.size(), 1u) << r.to_string();
      EXPECT_EQ(ss.coefficients(r), found.front()) << r.to_string();
    }
  };
  for (int n = 1; n <= 4; ++n) check(RootSystem::type_c(n));
  for (int p = 1; p <= 2; ++p)
    for (int q = p; p + q <= 5; ++q) check(RootSystem::type_a(p, q));
}

TEST(SimpleCoefficients, RejectsForeignRoots) {
  const SimpleSystem c2 = default_simple_system(RootSystem::type_c(2));
  EXPECT_THROW(c2.coefficients(Root{1, 0}), DomainError);
  EXPECT_THROW(c2.coefficients(Root{1, 1, 0}), DomainError);
  const SimpleSystem a = default_simple_system(RootSystem::type_a(1, 2));
  EXPECT_THROW(a.coefficients(Root{1, 1, 0}), DomainError);
  EXPECT_THROW(a.coefficients(Root{2, 0, 0}), DomainError);
}

TEST(ClassifyRoot, Examples) {
  const SimpleSystem c3 = default_simple_system(RootSystem::type_c(3));
  EXPECT_EQ(classify_root(Root{1, 1, 0}, c3), RootClass::NoncompactPlus);
  EXPECT_EQ(classify_root(Root{0, 0, -2}, c3), RootClass::NoncompactMinus);
  EXPECT_EQ(classify_root(Root{0, 1, -1}, c3), RootClass::Compact);
  const SimpleSystem a22 = default_simple_system(RootSystem::type_a(2, 2));
  EXPECT_EQ(classify_root(Root{1, -1, 0, 0}, a22), RootClass::Compact);
  EXPECT_EQ(classify_root(Root{0, 1, -1, 0}, a22), RootClass::NoncompactPlus);
}

RootClass swapped(RootClass c) {
  if (c == RootClass::NoncompactPlus) return RootClass::NoncompactMinus;
  if (c == RootClass::NoncompactMinus) return RootClass::NoncompactPlus;
  return c;
}

void check_invariants(const RootSystem& rs) {
  const SimpleSystem ss = default_simple_system(rs);
  std::size_t plus = 0;
  for (const Root& r : rs.roots()) {
    const std::vector<int> c = ss.coefficients(r);
    EXPECT_EQ(ss.combine(c), r);
    EXPECT_NE(ss.is_positive(r), ss.is_positive(-r));
    EXPECT_EQ(classify_root(-r, ss), swapped(classify_root(r, ss)));
    if (classify_root(r, ss) == RootClass::NoncompactPlus) ++plus;
  }
  const RootSet nc_plus = roots_of_class(ss, RootClass::NoncompactPlus);
  const RootSet nc_minus = roots_of_class(ss, RootClass::NoncompactMinus);
  const RootSet compact = roots_of_class(ss, RootClass::Compact);
  EXPECT_EQ(nc_plus.size() + nc_minus.size() + compact.size(), rs.size());
  EXPECT_EQ(nc_minus, negated(nc_plus));
  if (rs.kind() == RootKind::TypeC) {
    EXPECT_EQ(plus, static_cast<std::size_t>(rs.dimension() * (rs.dimension() + 1) / 2));
    EXPECT_EQ(nc_plus, oracle::type_c_noncompact_plus(rs.dimension()));
  } else {
    EXPECT_EQ(plus, static_cast<std::size_t>(rs.p() * rs.q()));
    EXPECT_EQ(nc_plus, oracle::type_a_noncompact_plus(rs.p(), rs.q()));
  }
}

TEST(RootInvariants, ExhaustivePartitionRoundTripAndSignCoherence) {
  for (int n = 1; n <= 8; ++n) check_invariants(RootSystem::type_c(n));
  for (int p = 1; p <= 5; ++p)
    for (int q = p; p + q <= 10; ++q) check_invariants(RootSystem::type_a(p, q));
}

TEST(SimpleSystem, TransportedExpansion) {
  const RootSystem rs = RootSystem::type_c(3);
  const WeylElement w = WeylElement::sign_change(3, {1});
  const SimpleSystem psi = default_simple_system(rs).transported(w);
  EXPECT_EQ(psi.simple(1), (Root{-1, -1, 0}));
  for (const Root& r : rs.roots()) {
    EXPECT_EQ(psi.combine(psi.coefficients(r)), r);
    const std::vector<Root> simples(psi.simples().begin(), psi.simples().end());
    EXPECT_EQ(oracle::all_expansions(r, simples), std::vector<std::vector<int>>{psi.coefficients(r)});
  }
}

}  // namespace
}  // namespace flagdom
