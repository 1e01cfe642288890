#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "thinlab/group/gen_set.hpp"

namespace thinlab::rotation {

using Mat3 = Eigen::Matrix3d;

// Rotations sigma_1..sigma_t of R^3; inverses are implicit.
struct RotationGenSet {
  std::vector<Mat3> gens;
  std::vector<std::string> labels;
  std::size_t t() const noexcept { return gens.size(); }
};

// Validates |s^T s - I|_max <= 1e-12 and |det s - 1| <= 1e-12; throws
// Error(kNotOrthogonal).
RotationGenSet make_rotation_gen_set(std::vector<Mat3> gens, std::vector<std::string> labels = {});

// sigma_m = [[c, s, 0], [-s, c, 0], [0, 0, 1]] and tau_n the same pattern on
// the last two coordinates, with c = cos(2 pi / m), s = sin(2 pi / m).
// Entries within 1e-14 of a multiple of 1/2 are snapped to it.
RotationGenSet gamma_generators(int m, int n);

// The same generators as an integer GenSet, when every entry is an integer.
std::optional<group::GenSet> integral_generators(const RotationGenSet& s);

// Real orthonormal spherical harmonics of one degree together with a
// quadrature rule exact for products of two of them.
class HarmonicSpace {
 public:
  explicit HarmonicSpace(int degree);

  int degree() const noexcept { return l_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(2 * l_ + 1); }
  // Values of the 2l+1 basis functions (m = -l..l) at a unit vector.
  Eigen::VectorXd evaluate(const Eigen::Vector3d& x) const;
  // rho(R)_ab = integral of Y_a(x) Y_b(R^-1 x) dA. Throws
  // Error(kNotOrthogonal) when R is not orthogonal within 1e-9.
  Eigen::MatrixXd block(const Mat3& r) const;

 private:
  int l_;
  std::vector<Eigen::Vector3d> nodes_;
  std::vector<double> weights_;
  Eigen::MatrixXd values_;  // basis x nodes
};

// Representation of R on degree-l harmonics, (rho(R) p)(x) = p(R^-1 x).
// Degree 0 returns [1] exactly.
Eigen::MatrixXd harmonic_block(const Mat3& r, int degree);

struct GapRow {
  int degree = 0;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  // 2t - max over 1 <= k <= degree of lambda_max(k); absent at degree 0.
  std::optional<double> gap_so_far;
  std::string error;
};

struct GapTable {
  std::size_t t = 0;
  std::vector<GapRow> rows;  // degrees 0..L
  double gap() const;        // gap_so_far of the last row
};

// T_l = sum_j (rho(sigma_j) + rho(sigma_j)^T) for l = 0..L.
GapTable tsigma_gap(const RotationGenSet& s, int max_degree, std::size_t threads = 1);

}  // namespace thinlab::rotation
