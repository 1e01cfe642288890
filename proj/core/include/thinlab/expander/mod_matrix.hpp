#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "thinlab/exact/int_matrix.hpp"

namespace thinlab::expander {

using exact::Integer;
using exact::IntMatrix;

// n x n matrix of residues in [0, q).
class ModMatrix {
 public:
  ModMatrix(std::size_t n, std::uint64_t q);
  ModMatrix(std::size_t n, std::uint64_t q, std::vector<std::uint32_t> entries);

  static ModMatrix identity(std::size_t n, std::uint64_t q);

  std::size_t dim() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return q_; }
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  std::uint64_t determinant() const;
  bool is_identity() const;

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) = default;

 private:
  std::size_t n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> entries_;
};

// Entrywise residues. Throws for q < 2 or q >= 2^31.
ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t q);

bool is_squarefree(std::uint64_t q);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t q);

// |SL_n(Z/q)| = prod over p^e || q of p^((e-1)(n^2-1)) |SL_n(F_p)|, with
// |SL_n(F_p)| = p^(n(n-1)/2) prod_{k=2..n} (p^k - 1).
Integer sl_order(std::size_t n, std::uint64_t q);

}  // namespace thinlab::expander
