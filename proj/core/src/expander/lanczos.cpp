#include "thinlab/expander/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "thinlab/error.hpp"

namespace thinlab::expander {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void project_out(const std::span<const std::vector<double>> deflation, VectorXd& w) {
  for (const auto& u : deflation) {
    const Eigen::Map<const VectorXd> um(u.data(), static_cast<Eigen::Index>(u.size()));
    w -= um.dot(w) * um;
  }
}

}  // namespace

LanczosResult lanczos_largest(const SymmetricOperator& op, std::size_t dim,
                              std::span<const std::vector<double>> deflation, const LanczosOptions& options) {
  if (deflation.size() > dim) throw Error(ErrorCode::kInvalidArgument, "lanczos: more deflation vectors than dimension");
  for (const auto& u : deflation)
    if (u.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "lanczos: deflation vector has wrong size");

  LanczosResult result;
  const std::size_t free_dim = dim - deflation.size();
  if (free_dim == 0 || options.nev + options.nev_low == 0) {
    result.converged = true;
    return result;
  }
  const std::size_t nhi = std::min(options.nev, free_dim);
  const std::size_t nlo = std::min(options.nev_low, free_dim);
  const std::size_t want = nhi + nlo;
  std::size_t m = options.basis_size ? options.basis_size : std::max<std::size_t>(2 * want + 28, 32);
  m = std::max(std::min(m, free_dim), std::min(want, free_dim));
  const auto N = static_cast<Eigen::Index>(dim);

  // Columns 0..m hold the Krylov basis; column m is the residual direction.
  MatrixXd basis(N, static_cast<Eigen::Index>(m + 1));
  MatrixXd projected = MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));

  {
    std::mt19937_64 rng(options.seed);
    VectorXd v0(N);
    for (Eigen::Index i = 0; i < N; ++i) v0[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    project_out(deflation, v0);
    project_out(deflation, v0);
    const double norm = v0.norm();
    if (norm == 0.0) throw Error(ErrorCode::kInvalidArgument, "lanczos: start vector vanished after deflation");
    basis.col(0) = v0 / norm;
  }

  VectorXd w(N);
  std::size_t kept = 0;
  for (;;) {
    std::size_t filled = m;
    bool breakdown = false;
    double last_beta = 0.0;
    for (std::size_t j = kept; j < m; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      op(std::span<const double>(basis.col(jj).data(), dim), std::span<double>(w.data(), dim));
      ++result.matvecs;
      const double norm_before = w.norm();

      // Past the restart arrow A v_j only couples to v_{j-1} and v_j, so the
      // first pass is local; one full classical Gram-Schmidt pass follows,
      // repeated when cancellation is severe.
      project_out(deflation, w);
      VectorXd h = VectorXd::Zero(jj + 1);
      std::size_t full_passes = 1;
      if (j > kept) {
        for (Eigen::Index i = jj - 1; i <= jj; ++i) {
          h[i] = basis.col(i).dot(w);
          w.noalias() -= h[i] * basis.col(i);
        }
      } else {
        full_passes = 2;
      }
      double reference = j > kept ? w.norm() : norm_before;
      double beta = 0.0;
      for (std::size_t pass = 0;; ++pass) {
        const VectorXd c = basis.leftCols(jj + 1).transpose() * w;
        w.noalias() -= basis.leftCols(jj + 1) * c;
        h += c;
        beta = w.norm();
        if (pass + 1 >= full_passes && beta >= 0.7071 * reference) break;
        if (pass >= 2) break;
        reference = beta;
        project_out(deflation, w);
      }
      for (Eigen::Index i = 0; i <= jj; ++i) {
        projected(i, jj) = h[i];
        projected(jj, i) = h[i];
      }
      last_beta = beta;
      if (beta <= 1e-13 * std::max(1.0, norm_before)) {
        filled = j + 1;
        breakdown = true;
        break;
      }
      basis.col(jj + 1) = w / beta;
    }

    const auto f = static_cast<Eigen::Index>(filled);
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(projected.topLeftCorner(f, f));
    if (eig.info() != Eigen::Success) throw Error(ErrorCode::kNotConverged, "lanczos: projected eigensolve failed");
    // Eigen sorts ascending: the top end is indexed from the right.
    const VectorXd& theta = eig.eigenvalues();
    const MatrixXd& y = eig.eigenvectors();
    bool all_small = true;
    auto collect = [&](std::size_t count, bool top, std::vector<double>& values, std::vector<double>& residuals) {
      const std::size_t available = std::min(count, filled);
      values.assign(available, 0.0);
      residuals.assign(available, 0.0);
      for (std::size_t i = 0; i < available; ++i) {
        const Eigen::Index col = top ? f - 1 - static_cast<Eigen::Index>(i) : static_cast<Eigen::Index>(i);
        values[i] = theta[col];
        residuals[i] = breakdown ? 0.0 : std::abs(last_beta * y(f - 1, col));
        all_small = all_small && residuals[i] <= options.tol;
      }
    };
    collect(nhi, true, result.values, result.residuals);
    collect(nlo, false, result.low_values, result.low_residuals);
    const bool converged = breakdown || all_small;
    if (converged || result.matvecs >= options.max_matvecs) {
      result.converged = converged;
      return result;
    }

    // Thick restart: keep Ritz vectors from each wanted end plus the residual
    // direction, splitting the spare room between the ends.
    const std::size_t total = std::min(filled - 1, std::max(want + 1, want + (filled - want) / 4));
    std::size_t keep_hi = nhi, keep_lo = nlo;
    for (std::size_t spare = total - want; spare > 0; --spare) {
      if (nlo == 0 || (nhi > 0 && keep_hi <= keep_lo)) ++keep_hi; else ++keep_lo;
    }
    const auto kk = static_cast<Eigen::Index>(keep_hi + keep_lo);
    MatrixXd chosen(f, kk);
    VectorXd chosen_theta(kk);
    Eigen::Index at = 0;
    for (std::size_t i = 0; i < keep_hi; ++i, ++at) {
      const Eigen::Index col = f - 1 - static_cast<Eigen::Index>(i);
      chosen.col(at) = y.col(col);
      chosen_theta[at] = theta[col];
    }
    for (std::size_t i = 0; i < keep_lo; ++i, ++at) {
      chosen.col(at) = y.col(static_cast<Eigen::Index>(i));
      chosen_theta[at] = theta[static_cast<Eigen::Index>(i)];
    }
    const MatrixXd ritz = basis.leftCols(f) * chosen;
    basis.leftCols(kk) = ritz;
    basis.col(kk) = basis.col(f);
    projected.setZero();
    for (Eigen::Index i = 0; i < kk; ++i) projected(i, i) = chosen_theta[i];
    kept = static_cast<std::size_t>(kk);
    ++result.restarts;
  }
}

}  // namespace thinlab::expander
