#include <gtest/gtest.h>

#include "thinlab/error.hpp"
#include "thinlab/exact/cyclotomic.hpp"
#include "thinlab/monodromy/hypergeometric.hpp"

using namespace thinlab;
using namespace thinlab::monodromy;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> out;
  for (auto [p, q] : v) {
    Rational r(p, q);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Params, Catalog) {
  const auto dwork = family_catalog(Family::kDwork, 4);
  EXPECT_EQ(sorted(dwork.alpha), rationals({{0, 1}, {0, 1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(sorted(dwork.beta), rationals({{1, 5}, {2, 5}, {3, 5}, {4, 5}}));

  const auto gap5 = family_catalog(Family::kHyperbolicGap, 5);
  EXPECT_EQ(sorted(gap5.alpha), rationals({{0, 1}, {1, 6}, {1, 3}, {2, 3}, {5, 6}}));
  EXPECT_EQ(sorted(gap5.beta), rationals({{1, 5}, {2, 5}, {1, 2}, {3, 5}, {4, 5}}));

  // 1/2 + k/5 and 0, 1/2 + k/4 reduced mod 1; 1/2 + 2/4 wraps to 0.
  const auto half = family_catalog(Family::kHalfShift, 4);
  EXPECT_EQ(sorted(half.alpha), rationals({{1, 10}, {3, 10}, {7, 10}, {9, 10}}));
  EXPECT_EQ(sorted(half.beta), rationals({{0, 1}, {0, 1}, {1, 4}, {3, 4}}));
}

TEST(Params, RejectsBadInput) {
  EXPECT_THROW(family_catalog(Family::kDwork, 5), Error);
  EXPECT_THROW(family_catalog(Family::kHyperbolicGap, 4), Error);
  try {
    make_params(rationals({{1, 2}, {0, 1}}), rationals({{1, 2}, {1, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kImprimitive);
  }
  try {
    (void)exponent_polynomial(rationals({{1, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIntegral);
  }
}

TEST(Params, ExponentPolynomial) {
  EXPECT_EQ(exponent_polynomial(rationals({{1, 5}, {2, 5}, {3, 5}, {4, 5}})), exact::cyclotomic_poly(5));
  EXPECT_EQ(exponent_polynomial(rationals({{0, 1}, {0, 1}})), exact::IntPoly({1, -2, 1}));
}

TEST(Monodromy, DworkMatrices) {
  const auto t = build_monodromy(family_catalog(Family::kDwork, 4));
  const exact::IntMatrix A{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  const exact::IntMatrix C{{1, 0, 0, 5}, {0, 1, 0, -5}, {0, 0, 1, 5}, {0, 0, 0, 1}};
  EXPECT_EQ(t.A, A);
  EXPECT_EQ(t.C, C);
  const auto I = exact::IntMatrix::identity(4);
  EXPECT_EQ(power(t.C - I, 2), exact::IntMatrix(4));
  EXPECT_EQ(t.A * t.C, t.B);
}

TEST(Monodromy, PseudoReflectionAndDeterminants) {
  for (Family f : all_families()) {
    for (std::size_t n = 2; n <= 9; ++n) {
      HGParams p;
      try {
        p = family_catalog(f, n);
      } catch (const Error&) {
        continue;
      }
      const auto t = build_monodromy(p);
      EXPECT_EQ(exact::rank(t.C - exact::IntMatrix::identity(n)), 1u);
      EXPECT_EQ(t.C.determinant() * t.A.determinant(), t.B.determinant());
    }
  }
}

TEST(Monodromy, SmallHandCase) {
  const auto t = build_monodromy(make_params(rationals({{0, 1}, {0, 1}}), rationals({{1, 2}, {1, 2}})));
  // Companion of (t + 1)^2 = t^2 + 2t + 1, and of (t - 1)^2.
  EXPECT_EQ(t.A, (exact::IntMatrix{{0, -1}, {1, -2}}));
  EXPECT_EQ(t.B, (exact::IntMatrix{{0, -1}, {1, 2}}));
  EXPECT_EQ(exact::rank(t.C - exact::IntMatrix::identity(2)), 1u);
}

TEST(Classify, Families) {
  EXPECT_EQ(classify_closure(family_catalog(Family::kDwork, 4)).tag, ClosureTag::kSymplectic);
  EXPECT_EQ(classify_closure(family_catalog(Family::kHalfShift, 4)).tag, ClosureTag::kSymplectic);
  for (Family f : {Family::kHyperbolicGap, Family::kHyperbolicTripleZero}) {
    for (std::size_t n : {3u, 5u, 7u}) {
      const auto c = classify_closure(family_catalog(f, n));
      EXPECT_EQ(c.tag, ClosureTag::kOrthogonal);
      ASSERT_TRUE(c.signature.has_value());
      EXPECT_EQ(c.signature->positive, n - 1);
      EXPECT_EQ(c.signature->negative, 1u);
      EXPECT_TRUE(c.hyperbolic);
    }
  }
}

TEST(Classify, FormIsInvariant) {
  const auto t = build_monodromy(family_catalog(Family::kHyperbolicTripleZero, 5));
  const auto c = classify_closure(t);
  ASSERT_TRUE(c.form.has_value());
  for (const auto* g : {&t.A, &t.B}) EXPECT_EQ(g->transpose() * *c.form * *g, *c.form);
}

TEST(Atlas, CalabiYauEntries) {
  const auto cy = calabi_yau_entries();
  EXPECT_EQ(cy.size(), 14u);
  for (const auto& e : cy) {
    EXPECT_EQ(e.params.n, 4u);
    EXPECT_EQ(e.closure.tag, ClosureTag::kSymplectic) << e.name;
  }
}
