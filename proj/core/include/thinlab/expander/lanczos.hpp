#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace thinlab::expander {

// y = A x for a real symmetric operator.
using SymmetricOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

struct LanczosOptions {
  // Number of largest eigenvalues wanted.
  std::size_t nev = 1;
  // Number of smallest eigenvalues wanted from the same Krylov space.
  std::size_t nev_low = 0;
  // Krylov basis size before a thick restart; 0 picks max(2 (nev + nev_low) + 28, 32).
  std::size_t basis_size = 0;
  // Hard cap on operator applications.
  std::size_t max_matvecs = 10'000;
  // Converged when every wanted Ritz residual |A y - theta y| <= tol.
  double tol = 1e-10;
  std::uint64_t seed = 1;
};

struct LanczosResult {
  // Largest Ritz values, descending, with their residual norms.
  std::vector<double> values;
  std::vector<double> residuals;
  // Smallest Ritz values, ascending, when nev_low > 0.
  std::vector<double> low_values;
  std::vector<double> low_residuals;
  bool converged = false;
  std::size_t matvecs = 0;
  std::size_t restarts = 0;
};

// Thick-restart Lanczos with full reorthogonalization (repeated on
// cancellation) for the extreme eigenvalues at both ends of the spectrum of
// a symmetric operator restricted to the orthogonal complement of
// `deflation` (which must be orthonormal).
LanczosResult lanczos_largest(const SymmetricOperator& op, std::size_t dim,
                              std::span<const std::vector<double>> deflation, const LanczosOptions& options);

}  // namespace thinlab::expander
