#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "thinlab/expander/closure.hpp"

namespace thinlab::expander {

struct SpectrumOptions {
  // Eigenvalues requested from the top of the spectrum, the trivial one included.
  std::size_t k = 2;
  double tol = 1e-10;
  // Defaults to 10 sqrt(N) + 200 matrix-vector products per Lanczos run.
  std::optional<std::size_t> max_matvecs;
  // Graphs up to this many vertices are cross-checked with a dense solver; 0 disables.
  std::size_t dense_check_max = 5000;
  double dense_check_tol = 1e-8;
  std::uint64_t seed = 1;
};

struct CayleySpectrum {
  std::uint64_t q = 0;
  std::size_t vertices = 0;
  std::size_t degree = 0;
  // Top eigenvalues of the normalized adjacency, descending; top[0] is the
  // trivial eigenvalue (Rayleigh quotient of the constant vector).
  std::vector<double> top;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double one_sided_gap = 0.0;
  double two_sided_gap = 0.0;
  // |A 1 - 1|_inf for the constant vector.
  double trivial_residual = 0.0;
  bool bipartite = false;
  bool converged = false;
  std::size_t matvecs = 0;
  std::optional<double> oracle_lambda2;
  std::optional<double> oracle_lambda_min;
  // Set when the dense oracle ran and disagreed beyond dense_check_tol.
  bool oracle_mismatch = false;
};

// (A f)(x) = (1/|S|) sum_s f(s x) over the closure's Cayley graph.
void apply_normalized_adjacency(const Closure& c, std::span<const double> x, std::span<double> y);

// Dense normalized adjacency matrix (for small graphs and oracles).
Eigen::MatrixXd dense_normalized_adjacency(const Closure& c);

// Throws Error(kNotClosed) if the closure overflowed. Lanczos
// non-convergence is reported through `converged`, not thrown.
CayleySpectrum cayley_spectrum(const Closure& c, const SpectrumOptions& options = {});
CayleySpectrum cayley_spectrum(const GenSet& s, std::uint64_t q, const SpectrumOptions& options = {},
                               const ClosureOptions& closure_options = {});

struct ScanRow {
  std::uint64_t q = 0;
  std::optional<ClosureResult> closure;
  std::optional<CayleySpectrum> spectrum;
  // Non-empty when this modulus failed; the scan continues.
  std::string error;
  std::string error_code;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  // Moduli where the reduction is not onto (candidate divisors of q0).
  std::vector<std::uint64_t> not_onto;
  std::size_t failures() const;
};

struct ScanOptions {
  ClosureOptions closure;
  SpectrumOptions spectrum;
  std::size_t threads = 1;
  // Moduli not started before the deadline fail with a cap error.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

ScanReport expander_scan(const GenSet& s, std::span<const std::uint64_t> q_list, const ScanOptions& options = {});

}  // namespace thinlab::expander
