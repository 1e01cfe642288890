#include <gtest/gtest.h>

#include "thinlab/error.hpp"
#include "thinlab/exact/cyclotomic.hpp"
#include "thinlab/exact/form_space.hpp"
#include "thinlab/exact/int_matrix.hpp"
#include "thinlab/exact/poly.hpp"

using namespace thinlab;
using namespace thinlab::exact;

namespace {

const IntMatrix kDworkA{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};

// Leibniz expansion of det(tI - M) at integer t, for comparison.
Integer det_by_permutations(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Integer total = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(IntMatrix, ArithmeticAndInverse) {
  const IntMatrix a{{2, 1}, {1, 1}};
  const IntMatrix b{{1, -1}, {-1, 2}};
  EXPECT_TRUE((a * b).is_identity());
  ASSERT_TRUE(a.inverse().has_value());
  EXPECT_EQ(*a.inverse(), b);
  EXPECT_FALSE(IntMatrix({{2, 0}, {0, 1}}).inverse().has_value());
  EXPECT_EQ(a.determinant(), 1);
  EXPECT_EQ(a.trace(), 3);
  EXPECT_EQ(a.transpose(), a);
}

TEST(IntMatrix, DeterminantMatchesLeibniz) {
  const IntMatrix m{{3, -1, 4, 1}, {5, 9, -2, 6}, {5, 3, 5, -8}, {9, 7, 9, 3}};
  EXPECT_EQ(m.determinant(), det_by_permutations(m));
}

TEST(IntMatrix, EntriesBeyondMachineWords) {
  IntMatrix m{{1, 1}, {1, 0}};
  const IntMatrix f = power(m, 200);
  // F_201, F_200 from the Fibonacci recurrence in bignums.
  Integer a = 0, b = 1;
  for (int i = 0; i < 200; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  EXPECT_EQ(f(0, 1), a);
  EXPECT_EQ(f(0, 0), b);
  EXPECT_EQ(abs(f.determinant()), 1);
}

TEST(IntMatrix, DimensionMismatchThrows) {
  try {
    (void)(IntMatrix::identity(2) * IntMatrix::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Charpoly, KnownCases) {
  EXPECT_EQ(charpoly(IntMatrix::identity(2)), IntPoly({1, -2, 1}));
  EXPECT_EQ(charpoly(kDworkA), IntPoly({1, 1, 1, 1, 1}));
  EXPECT_EQ(charpoly(IntMatrix{{0, -1}, {1, 0}}), IntPoly({1, 0, 1}));
}

TEST(Charpoly, AgreesWithDeterminantAtIntegerPoints) {
  const IntMatrix m{{2, -3, 1}, {4, 0, -1}, {7, 5, 2}};
  const IntPoly p = charpoly(m);
  for (long t = -3; t <= 3; ++t) {
    IntMatrix shifted = IntMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) shifted(i, j) = (i == j ? t : 0) - m(i, j);
    EXPECT_EQ(p.eval(t), det_by_permutations(shifted));
  }
}

TEST(Cyclotomic, Factorization) {
  auto v = cyclotomic_factor(pow(IntPoly({-1, 1}), 4));
  ASSERT_TRUE(v.cyclotomic);
  EXPECT_EQ(v.factors, (std::vector<CyclotomicFactor>{{1, 4}}));

  // Phi_5 from (t^5 - 1)/(t - 1).
  const auto phi5 = exact_quotient(IntPoly::power_minus_one(5), IntPoly({-1, 1}));
  ASSERT_TRUE(phi5.has_value());
  EXPECT_EQ(cyclotomic_poly(5), *phi5);
  v = cyclotomic_factor(*phi5);
  ASSERT_TRUE(v.cyclotomic);
  EXPECT_EQ(v.factors, (std::vector<CyclotomicFactor>{{5, 1}}));

  EXPECT_FALSE(cyclotomic_factor(IntPoly({-1, -1, 1})).cyclotomic);
}

TEST(Cyclotomic, ProductOfPhiDIsTnMinusOne) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    IntPoly prod{1};
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_poly(d);
    EXPECT_EQ(prod, IntPoly::power_minus_one(n)) << n;
  }
}

TEST(Cyclotomic, ExpandRoundTrip) {
  const std::vector<CyclotomicFactor> f{{1, 2}, {3, 1}, {12, 1}};
  const auto v = cyclotomic_factor(expand_cyclotomic(f));
  ASSERT_TRUE(v.cyclotomic);
  EXPECT_EQ(v.factors, f);
}

TEST(FormSpace, IdentityFixesEverything) {
  const std::vector<IntMatrix> gens{IntMatrix::identity(3)};
  EXPECT_EQ(fixed_form_space(gens).dim(), 9u);
}

TEST(FormSpace, DworkPairFixesOneAlternatingForm) {
  const IntMatrix C{{1, 0, 0, 5}, {0, 1, 0, -5}, {0, 0, 1, 5}, {0, 0, 0, 1}};
  const std::vector<IntMatrix> gens{kDworkA, kDworkA * C};
  const FormSpace fs = fixed_form_space(gens);
  ASSERT_EQ(fs.dim(), 1u);
  EXPECT_TRUE(fs.basis[0].is_antisymmetric());
  // Independent check: g^T F g = F for each generator.
  const RatMatrix F = fs.basis[0];
  for (const auto& g : gens) {
    const RatMatrix rg(g);
    EXPECT_EQ(rg.transpose() * F * rg, F);
  }
}

TEST(FormSpace, QuarterTurnAboutZ) {
  const std::vector<IntMatrix> gens{IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}};
  const FormSpace fs = fixed_form_space(gens);
  EXPECT_EQ(fs.dim(), 3u);
  // diag(a, a, b) is symmetric and fixed; the antisymmetric xy form too.
  EXPECT_EQ(fs.symmetric_part.size(), 2u);
  EXPECT_EQ(fs.antisymmetric_part.size(), 1u);
}

TEST(FormSpace, Signature) {
  RatMatrix d(3);
  d(0, 0) = 2;
  d(1, 1) = 5;
  d(2, 2) = -1;
  EXPECT_EQ(signature(d), (Signature{2, 1, 0}));
  RatMatrix h(2);
  h(0, 1) = h(1, 0) = 1;
  EXPECT_EQ(signature(h), (Signature{1, 1, 0}));
}
