#include "thinlab/exact/form_space.hpp"

#include <utility>

#include "thinlab/error.hpp"

namespace thinlab::exact {
namespace {

using RowMatrix = std::vector<std::vector<Rational>>;

// Rows of the linear conditions g^T F g - F = 0, with F parameterized by
// `param` (columns = parameters, each a matrix in the n x n space).
void append_conditions(const IntMatrix& g, const std::vector<RatMatrix>& param, RowMatrix& rows) {
  const std::size_t n = g.dim();
  const RatMatrix gq(g);
  const RatMatrix gt = gq.transpose();
  std::vector<RatMatrix> images;
  images.reserve(param.size());
  for (const auto& f : param) images.push_back(gt * f * gq);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(param.size());
      bool nonzero = false;
      for (std::size_t c = 0; c < param.size(); ++c) {
        row[c] = images[c](i, j) - param[c](i, j);
        nonzero = nonzero || row[c] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
}

std::vector<RatMatrix> unit_basis(std::size_t n) {
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix e(n);
      e(i, j) = 1;
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<RatMatrix> symmetric_basis(std::size_t n, bool antisymmetric) {
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = antisymmetric ? i + 1 : i; j < n; ++j) {
      RatMatrix e(n);
      e(i, j) = 1;
      e(j, i) = antisymmetric ? -1 : 1;
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<RatMatrix> solve(std::span<const IntMatrix> gens, const std::vector<RatMatrix>& param) {
  if (param.empty()) return {};
  RowMatrix rows;
  for (const auto& g : gens) append_conditions(g, param, rows);
  const auto kernel = null_space(std::move(rows), param.size());
  std::vector<RatMatrix> out;
  const std::size_t n = gens.front().dim();
  for (const auto& x : kernel) {
    RatMatrix f(n);
    for (std::size_t c = 0; c < param.size(); ++c) {
      if (x[c] == 0) continue;
      for (std::size_t k = 0; k < n * n; ++k) {
        const Rational& e = param[c].entries()[k];
        if (e != 0) f(k / n, k % n) += x[c] * e;
      }
    }
    out.emplace_back(f.primitive_integer_multiple());
  }
  return out;
}

}  // namespace

std::string Signature::to_string() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

Signature signature(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw Error(ErrorCode::kInvalidArgument, "signature: matrix not symmetric");
  const std::size_t n = symmetric.dim();
  RatMatrix s = symmetric;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  Signature sig;
  while (!active.empty()) {
    std::size_t pivot_pos = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (s(active[k], active[k]) != 0) {
        pivot_pos = k;
        break;
      }
    }
    if (pivot_pos == active.size()) {
      // Zero diagonal: look for an off-diagonal entry and fold it in.
      bool lifted = false;
      for (std::size_t a = 0; a < active.size() && !lifted; ++a)
        for (std::size_t b = a + 1; b < active.size() && !lifted; ++b) {
          const std::size_t i = active[a];
          const std::size_t j = active[b];
          if (s(i, j) == 0) continue;
          // e_i <- e_i + e_j: row i += row j, then column i += column j.
          for (std::size_t c : active) s(i, c) += s(j, c);
          for (std::size_t r : active) s(r, i) += s(r, j);
          pivot_pos = a;
          lifted = true;
        }
      if (!lifted) {
        sig.zero += active.size();
        break;
      }
    }
    const std::size_t p = active[pivot_pos];
    const Rational d = s(p, p);
    if (d > 0) ++sig.positive;
    else ++sig.negative;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (std::size_t r : active) {
      if (s(r, p) == 0) continue;
      const Rational f = s(r, p) / d;
      for (std::size_t c : active) s(r, c) -= f * s(p, c);
    }
  }
  return sig;
}

std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Rational inv = 1 / rows[r][col];
    for (std::size_t j = col; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> kernel;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols);
    x[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = -rows[k][free];
    kernel.push_back(std::move(x));
  }
  return kernel;
}

FormSpace fixed_form_space(std::span<const IntMatrix> gens) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "fixed_form_space: no generators");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens)
    if (g.dim() != n) throw Error(ErrorCode::kDimensionMismatch, "fixed_form_space: generator dimensions differ");

  FormSpace space;
  space.n = n;
  space.basis = solve(gens, unit_basis(n));
  space.symmetric_part = solve(gens, symmetric_basis(n, false));
  space.antisymmetric_part = solve(gens, symmetric_basis(n, true));
  // The fixing condition commutes with transposition, so the space splits.
  if (space.symmetric_part.size() + space.antisymmetric_part.size() != space.basis.size()) {
    throw Error(ErrorCode::kInvalidArgument, "fixed_form_space: symmetric/antisymmetric split failed");
  }
  if (!space.symmetric_part.empty()) space.signature = signature(space.symmetric_part.front());
  return space;
}

}  // namespace thinlab::exact
