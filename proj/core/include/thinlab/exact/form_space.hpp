#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thinlab/exact/int_matrix.hpp"

namespace thinlab::exact {

// Inertia of a symmetric rational matrix: counts of positive, negative and
// zero pivots.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t dim() const noexcept { return positive + negative + zero; }
  std::string to_string() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Exact LDL^T with symmetric pivoting. When every remaining diagonal entry
// vanishes, an off-diagonal pivot (i, j) is lifted onto the diagonal by the
// congruence e_i -> e_i + e_j. Throws on non-symmetric input.
Signature signature(const RatMatrix& symmetric);

// Bilinear forms F with g^T F g = F for every supplied generator.
struct FormSpace {
  std::size_t n = 0;
  std::vector<RatMatrix> basis;
  std::vector<RatMatrix> symmetric_part;
  std::vector<RatMatrix> antisymmetric_part;
  // Inertia of symmetric_part.front(), when there is one.
  std::optional<Signature> signature;

  std::size_t dim() const noexcept { return basis.size(); }
};

FormSpace fixed_form_space(std::span<const IntMatrix> gens);

// Basis of {x : A x = 0} for a dense rational matrix with `cols` columns.
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> rows,
                                              std::size_t cols);

}  // namespace thinlab::exact
