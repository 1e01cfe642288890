#include "thinlab/rotation/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "thinlab/error.hpp"
#include "thinlab/parallel.hpp"

namespace thinlab::rotation {
namespace {

double snap(double x) {
  const double doubled = std::round(2.0 * x);
  return std::abs(2.0 * x - doubled) <= 2e-14 ? doubled / 2.0 : x;
}

void require_orthogonal(const Mat3& r, double tol, const char* who) {
  const double err = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (!(err <= tol)) throw Error(ErrorCode::kNotOrthogonal, std::string(who) + ": matrix is not orthogonal");
}

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    double p0 = 1.0, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    x[static_cast<std::size_t>(i)] = z;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

}  // namespace

RotationGenSet make_rotation_gen_set(std::vector<Mat3> gens, std::vector<std::string> labels) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "rotation generators: empty set");
  for (const auto& g : gens) {
    require_orthogonal(g, 1e-12, "rotation generators");
    if (!(std::abs(g.determinant() - 1.0) <= 1e-12))
      throw Error(ErrorCode::kNotOrthogonal, "rotation generators: determinant is not +1");
  }
  if (labels.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("g" + std::to_string(i));
  if (labels.size() != gens.size()) throw Error(ErrorCode::kDimensionMismatch, "rotation generators: label count");
  return {std::move(gens), std::move(labels)};
}

RotationGenSet gamma_generators(int m, int n) {
  if (m < 3 || n < 3) throw Error(ErrorCode::kInvalidArgument, "gamma_generators: m and n must be >= 3");
  auto cs = [](int k) {
    const double angle = 2.0 * std::numbers::pi / k;
    return std::pair{snap(std::cos(angle)), snap(std::sin(angle))};
  };
  const auto [c1, s1] = cs(m);
  const auto [c2, s2] = cs(n);
  Mat3 sigma, tau;
  sigma << c1, s1, 0, -s1, c1, 0, 0, 0, 1;
  tau << 1, 0, 0, 0, c2, s2, 0, -s2, c2;
  return make_rotation_gen_set({sigma, tau}, {"sigma" + std::to_string(m), "tau" + std::to_string(n)});
}

std::optional<group::GenSet> integral_generators(const RotationGenSet& s) {
  std::vector<exact::IntMatrix> mats;
  for (const auto& g : s.gens) {
    exact::IntMatrix m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double r = std::round(g(i, j));
        if (r != g(i, j)) return std::nullopt;
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = static_cast<long>(r);
      }
    mats.push_back(std::move(m));
  }
  return group::GenSet(std::move(mats), s.labels);
}

HarmonicSpace::HarmonicSpace(int degree) : l_(degree) {
  if (degree < 0) throw Error(ErrorCode::kInvalidArgument, "harmonic space: degree must be >= 0");
  const int nt = l_ + 1;
  const int np = 2 * l_ + 1;
  std::vector<double> gx, gw;
  gauss_legendre(nt, gx, gw);
  for (int i = 0; i < nt; ++i) {
    const double z = gx[static_cast<std::size_t>(i)];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < np; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / np;
      nodes_.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
      weights_.push_back(gw[static_cast<std::size_t>(i)] * 2.0 * std::numbers::pi / np);
    }
  }
  values_.resize(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(nodes_.size()));
  for (std::size_t k = 0; k < nodes_.size(); ++k) values_.col(static_cast<Eigen::Index>(k)) = evaluate(nodes_[k]);
}

Eigen::VectorXd HarmonicSpace::evaluate(const Eigen::Vector3d& x) const {
  const int l = l_;
  const double z = std::clamp(x.z(), -1.0, 1.0);
  const double rho = std::hypot(x.x(), x.y());
  const double phi = std::atan2(x.y(), x.x());
  // Normalized associated Legendre functions, degree l, orders 0..l.
  std::vector<double> p(static_cast<std::size_t>(l + 1));
  double pmm = std::sqrt(1.0 / (4.0 * std::numbers::pi));
  for (int m = 0; m <= l; ++m) {
    if (m > 0) pmm *= -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * rho;
    if (m == l) {
      p[static_cast<std::size_t>(m)] = pmm;
      continue;
    }
    double prev = pmm;
    double cur = std::sqrt(2.0 * m + 3.0) * z * pmm;
    for (int k = m + 2; k <= l; ++k) {
      const double a = std::sqrt((4.0 * k * k - 1.0) / (double(k) * k - double(m) * m));
      const double b = std::sqrt(((k - 1.0) * (k - 1.0) - double(m) * m) / (4.0 * (k - 1.0) * (k - 1.0) - 1.0));
      const double next = a * (z * cur - b * prev);
      prev = cur;
      cur = next;
    }
    p[static_cast<std::size_t>(m)] = cur;
  }
  Eigen::VectorXd y(static_cast<Eigen::Index>(dim()));
  for (int m = -l; m <= l; ++m) {
    const double base = p[static_cast<std::size_t>(std::abs(m))];
    double v = base;
    if (m > 0) v = std::numbers::sqrt2 * base * std::cos(m * phi);
    if (m < 0) v = std::numbers::sqrt2 * base * std::sin(-m * phi);
    y[m + l] = v;
  }
  return y;
}

Eigen::MatrixXd HarmonicSpace::block(const Mat3& r) const {
  require_orthogonal(r, 1e-9, "harmonic_block");
  const Eigen::Index d = static_cast<Eigen::Index>(dim());
  if (l_ == 0) return Eigen::MatrixXd::Identity(1, 1);
  Eigen::MatrixXd rotated(d, static_cast<Eigen::Index>(nodes_.size()));
  const Mat3 inverse = r.transpose();
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    rotated.col(static_cast<Eigen::Index>(k)) = evaluate(inverse * nodes_[k]) * weights_[k];
  return values_ * rotated.transpose();
}

Eigen::MatrixXd harmonic_block(const Mat3& r, int degree) { return HarmonicSpace(degree).block(r); }

double GapTable::gap() const {
  if (rows.empty() || !rows.back().gap_so_far) throw Error(ErrorCode::kInvalidArgument, "gap table has no positive degree");
  return *rows.back().gap_so_far;
}

GapTable tsigma_gap(const RotationGenSet& s, int max_degree, std::size_t threads) {
  if (max_degree < 1) throw Error(ErrorCode::kInvalidArgument, "tsigma_gap: L must be >= 1");
  if (s.gens.empty()) throw Error(ErrorCode::kInvalidArgument, "tsigma_gap: empty generator set");
  GapTable table;
  table.t = s.t();
  table.rows.resize(static_cast<std::size_t>(max_degree) + 1);
  parallel_for(table.rows.size(), threads, [&](std::size_t i) {
    GapRow& row = table.rows[i];
    row.degree = static_cast<int>(i);
    const HarmonicSpace space(row.degree);
    const auto d = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d, d);
    for (const auto& g : s.gens) {
      const Eigen::MatrixXd rho = space.block(g);
      t += rho + rho.transpose();
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
      row.error = "eigensolver did not converge";
      return;
    }
    row.lambda_min = eig.eigenvalues()[0];
    row.lambda_max = eig.eigenvalues()[d - 1];
  });
  double running = -std::numeric_limits<double>::infinity();
  for (auto& row : table.rows) {
    if (row.degree == 0) continue;
    if (row.error.empty()) running = std::max(running, row.lambda_max);
    if (std::isfinite(running)) row.gap_so_far = 2.0 * static_cast<double>(table.t) - running;
  }
  return table;
}

}  // namespace thinlab::rotation
