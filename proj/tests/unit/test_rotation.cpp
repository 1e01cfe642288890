#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "thinlab/error.hpp"
#include "thinlab/group/words.hpp"
#include "thinlab/rotation/rotation.hpp"

using namespace thinlab;
using namespace thinlab::rotation;

namespace {

Mat3 axis_rotation(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

}  // namespace

TEST(Generators, QuarterTurn) {
  const auto s = gamma_generators(4, 4);
  Mat3 expected;
  expected << 0, 1, 0, -1, 0, 0, 0, 0, 1;
  EXPECT_EQ(s.gens[0], expected);
  EXPECT_EQ(s.t(), 2u);
}

TEST(Generators, RejectsNonRotations) {
  Mat3 reflection = Mat3::Identity();
  reflection(2, 2) = -1;
  EXPECT_THROW(make_rotation_gen_set({reflection}), Error);
  EXPECT_THROW(gamma_generators(2, 5), Error);
}

TEST(Generators, IntegralClosureOfOrder24) {
  const auto integral = integral_generators(gamma_generators(4, 4));
  ASSERT_TRUE(integral.has_value());
  const auto ball = group::ball_enumerate(*integral, 20);
  EXPECT_TRUE(ball.closed);
  EXPECT_EQ(ball.elements.size(), 24u);
  EXPECT_FALSE(integral_generators(gamma_generators(5, 3)).has_value());
}

TEST(Blocks, DegreeZeroIsOne) {
  const Mat3 r = axis_rotation({1, 2, 3}, 0.7);
  const auto b = harmonic_block(r, 0);
  ASSERT_EQ(b.rows(), 1);
  EXPECT_EQ(b(0, 0), 1.0);
}

TEST(Blocks, DegreeOneSimilarToRotation) {
  const Mat3 r = axis_rotation({1, -1, 2}, 1.1);
  const Eigen::MatrixXd b = harmonic_block(r, 1);
  auto spectrum = [](const Eigen::MatrixXd& m) {
    Eigen::VectorXcd ev = m.eigenvalues();
    std::vector<std::pair<double, double>> v;
    for (auto z : ev) v.emplace_back(std::round(z.real() * 1e9) / 1e9, std::round(std::abs(z.imag()) * 1e9) / 1e9);
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto a = spectrum(b);
  const auto c = spectrum(Eigen::MatrixXd(r));
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].first, c[i].first, 1e-9);
    EXPECT_NEAR(a[i].second, c[i].second, 1e-9);
  }
}

TEST(Blocks, HomomorphismAndOrthogonality) {
  const Mat3 r1 = axis_rotation({0.3, 1, -0.2}, 0.9);
  const Mat3 r2 = axis_rotation({1, 0.5, 2}, -2.3);
  for (int l : {2, 5, 12}) {
    const HarmonicSpace h(l);
    const Eigen::MatrixXd b1 = h.block(r1), b2 = h.block(r2), b12 = h.block(r1 * r2);
    EXPECT_LT((b1 * b2 - b12).norm(), 1e-10) << l;
    EXPECT_LT((b1.transpose() * b1 - Eigen::MatrixXd::Identity(2 * l + 1, 2 * l + 1)).norm(), 1e-10) << l;
  }
}

TEST(Blocks, CharacterMatchesDirichletKernel) {
  // trace of the degree-l block of a rotation by theta is sin((l + 1/2) theta) / sin(theta / 2).
  const double theta = 0.83;
  const Mat3 r = axis_rotation({2, -1, 1}, theta);
  for (int l : {1, 3, 8}) {
    const double expected = std::sin((l + 0.5) * theta) / std::sin(theta / 2);
    EXPECT_NEAR(harmonic_block(r, l).trace(), expected, 1e-10);
  }
}

TEST(Gap, Gamma44) {
  const auto table = tsigma_gap(gamma_generators(4, 4), 4);
  ASSERT_EQ(table.rows.size(), 5u);
  EXPECT_EQ(table.rows[0].lambda_max, 4.0);
  EXPECT_NEAR(table.rows[1].lambda_max, 2.0, 1e-10);
  EXPECT_NEAR(table.rows[1].lambda_min, 0.0, 1e-10);
  // The finite group has invariants at degree 4, closing the gap.
  EXPECT_NEAR(table.rows[4].lambda_max, 4.0, 1e-10);
  EXPECT_NEAR(table.gap(), 0.0, 1e-10);
}

TEST(Gap, Gamma33Bounded) {
  const auto table = tsigma_gap(gamma_generators(3, 3), 10);
  for (const auto& row : table.rows) {
    EXPECT_LE(row.lambda_max, 4.0 + 1e-8);
    EXPECT_GE(row.lambda_min, -4.0 - 1e-8);
  }
  EXPECT_GT(table.gap(), 0.0);
}
