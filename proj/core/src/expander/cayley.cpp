#include "thinlab/expander/cayley.hpp"

#include <algorithm>
#include <cmath>

#include "thinlab/error.hpp"
#include "thinlab/expander/lanczos.hpp"
#include "thinlab/parallel.hpp"

namespace thinlab::expander {
namespace {

std::size_t vertex_count(const Closure& c) {
  const std::size_t nn = c.result.n * c.result.n;
  return nn ? c.vertices.size() / nn : 0;
}

void require_closed(const Closure& c) {
  if (c.result.overflow) throw Error(ErrorCode::kNotClosed, "cayley graph: closure overflowed; vertex set not closed");
  if (c.neighbors.size() != vertex_count(c) * c.degree) {
    throw Error(ErrorCode::kNotClosed, "cayley graph: neighbor table incomplete");
  }
}

}  // namespace

void apply_normalized_adjacency(const Closure& c, std::span<const double> x, std::span<double> y) {
  const std::size_t n = vertex_count(c);
  const std::size_t d = c.degree;
  const double scale = 1.0 / static_cast<double>(d);
  const std::uint32_t* nb = c.neighbors.data();
  for (std::size_t v = 0; v < n; ++v) {
    double acc = 0.0;
    for (std::size_t s = 0; s < d; ++s) acc += x[nb[v * d + s]];
    y[v] = acc * scale;
  }
}

Eigen::MatrixXd dense_normalized_adjacency(const Closure& c) {
  require_closed(c);
  const auto n = static_cast<Eigen::Index>(vertex_count(c));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  const double scale = 1.0 / static_cast<double>(c.degree);
  for (Eigen::Index v = 0; v < n; ++v)
    for (std::size_t s = 0; s < c.degree; ++s)
      a(v, c.neighbors[static_cast<std::size_t>(v) * c.degree + s]) += scale;
  return a;
}

CayleySpectrum cayley_spectrum(const Closure& c, const SpectrumOptions& options) {
  require_closed(c);
  if (options.k < 2) throw Error(ErrorCode::kInvalidArgument, "cayley_spectrum: k must be >= 2");
  const std::size_t n = vertex_count(c);

  CayleySpectrum sp;
  sp.q = c.result.q;
  sp.vertices = n;
  sp.degree = c.degree;

  std::vector<double> ones(n, 1.0), image(n);
  apply_normalized_adjacency(c, ones, image);
  double rayleigh = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    rayleigh += image[v];
    sp.trivial_residual = std::max(sp.trivial_residual, std::abs(image[v] - 1.0));
  }
  sp.lambda1 = rayleigh / static_cast<double>(n);
  sp.top.push_back(sp.lambda1);

  if (n == 1) {
    // No nontrivial spectrum: report the gaps as closed.
    sp.lambda2 = sp.lambda_min = sp.lambda1;
    sp.converged = true;
    return sp;
  }

  const std::vector<std::vector<double>> deflation{std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n)))};
  LanczosOptions lo;
  lo.nev = options.k - 1;
  lo.nev_low = 1;
  lo.tol = options.tol;
  lo.seed = options.seed;
  lo.max_matvecs = options.max_matvecs.value_or(
      static_cast<std::size_t>(10.0 * std::sqrt(static_cast<double>(n))) + 200);

  const SymmetricOperator adj = [&c](std::span<const double> x, std::span<double> y) {
    apply_normalized_adjacency(c, x, y);
  };
  const LanczosResult run = lanczos_largest(adj, n, deflation, lo);
  sp.top.insert(sp.top.end(), run.values.begin(), run.values.end());
  sp.lambda2 = run.values.front();
  sp.lambda_min = run.low_values.front();
  sp.converged = run.converged;
  sp.matvecs = run.matvecs + 1;
  sp.one_sided_gap = 1.0 - sp.lambda2;
  sp.two_sided_gap = 1.0 - std::max(std::abs(sp.lambda2), std::abs(sp.lambda_min));
  sp.bipartite = std::abs(sp.lambda_min + 1.0) <= 1e-8;

  if (options.dense_check_max && n <= options.dense_check_max) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(dense_normalized_adjacency(c),
                                                              Eigen::EigenvaluesOnly);
    if (dense.info() == Eigen::Success) {
      const auto& ev = dense.eigenvalues();
      sp.oracle_lambda2 = ev[static_cast<Eigen::Index>(n) - 2];
      sp.oracle_lambda_min = ev[0];
      sp.oracle_mismatch = std::abs(*sp.oracle_lambda2 - sp.lambda2) > options.dense_check_tol ||
                           std::abs(*sp.oracle_lambda_min - sp.lambda_min) > options.dense_check_tol;
    }
  }
  return sp;
}

CayleySpectrum cayley_spectrum(const GenSet& s, std::uint64_t q, const SpectrumOptions& options,
                               const ClosureOptions& closure_options) {
  return cayley_spectrum(congruence_closure(s, q, closure_options), options);
}

std::size_t ScanReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.error.empty(); }));
}

ScanReport expander_scan(const GenSet& s, std::span<const std::uint64_t> q_list, const ScanOptions& options) {
  if (q_list.empty()) throw Error(ErrorCode::kInvalidArgument, "expander_scan: empty modulus list");
  ScanReport report;
  report.rows.resize(q_list.size());
  parallel_for(q_list.size(), options.threads, [&](std::size_t i) {
    ScanRow& row = report.rows[i];
    row.q = q_list[i];
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
      row.error = "resource cap exceeded: wall-clock budget";
      row.error_code = std::string(to_string(ErrorCode::kCapExceeded));
      return;
    }
    try {
      const Closure c = congruence_closure(s, row.q, options.closure);
      row.closure = c.result;
      if (c.result.overflow) {
        row.error = CapExceeded("closure elements", options.closure.max_elements).what();
        row.error_code = std::string(to_string(ErrorCode::kCapExceeded));
        return;
      }
      row.spectrum = cayley_spectrum(c, options.spectrum);
      if (!row.spectrum->converged) {
        row.error = "eigensolver did not converge within " + std::to_string(row.spectrum->matvecs) + " products";
        row.error_code = std::string(to_string(ErrorCode::kNotConverged));
      }
    } catch (const Error& e) {
      row.error = e.what();
      row.error_code = std::string(to_string(e.code()));
    }
  });
  for (const auto& row : report.rows)
    if (row.closure && row.closure->onto == Onto::kNo) report.not_onto.push_back(row.q);
  return report;
}

}  // namespace thinlab::expander
