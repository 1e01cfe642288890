#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thinlab/diophantine/apollonian.hpp"
#include "thinlab/diophantine/zaremba.hpp"
#include "thinlab/error.hpp"

using namespace thinlab;
using namespace thinlab::diophantine;

TEST(Zaremba, PartialQuotients) {
  EXPECT_EQ(partial_quotients(5, 13), (std::vector<std::uint64_t>{2, 1, 1, 2}));
  EXPECT_TRUE(bounded_expansion(5, 13, 2));
  // 1/3 = [0; 3] = [0; 2, 1].
  EXPECT_TRUE(bounded_expansion(1, 3, 2));
  EXPECT_FALSE(bounded_expansion(1, 3, 1));
}

TEST(Zaremba, FibonacciDenominators) {
  const auto r = zaremba_scan(1, 100);
  EXPECT_EQ(r.achieved, (std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89}));
}

TEST(Zaremba, MatchesContinuantEnumeration) {
  for (std::uint64_t A : {1u, 2u, 3u}) {
    const std::uint64_t Q = 400;
    const auto hit = oracle::bounded_cf_denominators(A, Q);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t q = 1; q <= Q; ++q)
      if (!hit[q]) expected.push_back(q);
    EXPECT_EQ(zaremba_scan(A, Q).exceptions, expected) << A;
  }
}

TEST(Zaremba, SmallExceptionSet) {
  const auto r = zaremba_scan(2, 20);
  EXPECT_EQ(r.exceptions, (std::vector<std::uint64_t>{6, 9, 14, 16, 20}));
  EXPECT_DOUBLE_EQ(r.density, 15.0 / 20.0);
}

TEST(Zaremba, ThreadCountDoesNotMatter) {
  EXPECT_EQ(zaremba_scan(3, 500, 1).exceptions, zaremba_scan(3, 500, 3).exceptions);
}

TEST(Apollonian, Quadric) {
  EXPECT_EQ(descartes_form({-1, 2, 2, 3}), 0);
  EXPECT_NE(descartes_form({1, 2, 2, 3}), 0);
  const Quadruple y = swap_move({-1, 2, 2, 3}, 0);
  EXPECT_EQ(y, (Quadruple{15, 2, 2, 3}));
  EXPECT_EQ(descartes_form(y), 0);
}

TEST(Apollonian, RejectsOffQuadric) {
  try {
    apollonian_orbit({1, 2, 2, 3}, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOffQuadric);
  }
}

TEST(Apollonian, CurvaturesMatchDepthFirstOracle) {
  for (std::int64_t bound : {15, 100, 400}) {
    const auto report = apollonian_orbit({-1, 2, 2, 3}, bound);
    std::set<std::int64_t> got;
    for (const auto& [c, count] : report.curvatures) got.insert(c);
    EXPECT_EQ(got, oracle::apollonian_curvatures({-1, 2, 2, 3}, bound)) << bound;
  }
}

TEST(Apollonian, TraversalOrderIrrelevant) {
  ApollonianOptions dfs;
  dfs.traversal = Traversal::kDepthFirstReversed;
  std::size_t checked = 0;
  dfs.visitor = [&](const Quadruple& x) {
    EXPECT_EQ(descartes_form(x), 0);
    ++checked;
  };
  const auto a = apollonian_orbit({-1, 2, 2, 3}, 300);
  const auto b = apollonian_orbit({-1, 2, 2, 3}, 300, dfs);
  EXPECT_EQ(a.curvatures, b.curvatures);
  EXPECT_EQ(a.quadruples, b.quadruples);
  EXPECT_EQ(checked, b.quadruples);
}

TEST(Apollonian, ResiduesModTwentyFour) {
  const auto r = apollonian_orbit({-1, 2, 2, 3}, 1000);
  EXPECT_EQ(r.residues_covered, (std::vector<std::int64_t>{2, 3, 6, 11, 14, 15, 18, 23}));
}

TEST(Apollonian, Cap) {
  ApollonianOptions o;
  o.max_quadruples = 20;
  EXPECT_THROW(apollonian_orbit({-1, 2, 2, 3}, 1000, o), CapExceeded);
}
